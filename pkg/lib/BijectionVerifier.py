"""
双射验证器 - 对枚举流做穷举双向往返检验，失败作为数据记录在报告中
支持按流下标分片到多个进程，合并结果与单进程完全一致
"""

from __future__ import annotations

import itertools
import json
import logging
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, Iterable, List, Optional, Set

import numpy as np
from joblib import Parallel, delayed

from lib import EnumerationOracle as oracle
from lib.HajosWarmup import (
    Advanced,
    AnkPath,
    AvoidPath,
    InB,
    MarkedTiePath,
    TiePath,
    big_f,
    big_f_inv,
    count_advances,
    f_step,
    f_step_inv,
    soccer_forward,
    soccer_inverse,
)
from lib.HockeyBijection import (
    MarkedPath,
    PathTriple,
    TripleKind,
    classify,
    g_inv,
    g_map,
    is_in_i,
    is_in_u,
    is_in_v,
    r_inv,
    r_map,
    reflect_marked,
    reflect_triple,
    s_inv,
    s_map,
    t_inv,
    t_map,
    t_map_direct,
    z_inv,
    z_map,
)
from lib.PathCore import ORIGIN, NEPath, UDPath, reflect_diagonal, unchecked


logger = logging.getLogger("BijectionVerifier")

DEFAULT_LIMIT = 10


@dataclass(frozen=True)
class Counterexample:
    direction: str  # forward | backward
    position: int   # 在流中的下标
    value: str
    detail: str

    @property
    def order(self):
        return (0 if self.direction == "forward" else 1, self.position)

    def __str__(self) -> str:
        return f"{self.direction}#{self.position} {self.value}: {self.detail}"


@dataclass
class VerificationReport:
    suite: str
    n: int
    domain: int = 0
    codomain: int = 0
    image: int = 0
    round_trip_failures: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    k: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.domain == self.codomain == self.image and self.round_trip_failures == 0

    def to_text(self) -> str:
        lines = [f"suite={self.suite}", f"n={self.n}"]
        if self.k is not None:
            lines.append(f"k={self.k}")
        lines += [
            f"domain={self.domain}",
            f"codomain={self.codomain}",
            f"image={self.image}",
            f"round_trip_failures={self.round_trip_failures}",
            f"counterexamples={json.dumps([str(c) for c in self.counterexamples], ensure_ascii=False)}",
            f"status={'PASS' if self.passed else 'FAIL'}",
        ]
        return "\n".join(lines)

    def to_row(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "n": self.n,
            "k": self.k,
            "checked": self.domain,
            "domain": self.domain,
            "codomain": self.codomain,
            "image": self.image,
            "failures": self.round_trip_failures,
            "passed": self.passed,
            "note": "",
        }


@dataclass
class PropertyReport:
    """性质检验报告: 检查了多少个元素、有多少违例"""

    suite: str
    n: int
    checked: int = 0
    violations: int = 0
    counterexamples: List[str] = field(default_factory=list)
    note: str = ""
    limit: int = DEFAULT_LIMIT

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def fail(self, value: Any, detail: str) -> None:
        self.violations += 1
        if len(self.counterexamples) < self.limit:
            self.counterexamples.append(f"{value}: {detail}")

    def expect(self, condition: bool, value: Any, detail: str) -> None:
        if not condition:
            self.fail(value, detail)

    def to_text(self) -> str:
        lines = [
            f"suite={self.suite}",
            f"n={self.n}",
            f"checked={self.checked}",
            f"violations={self.violations}",
            f"counterexamples={json.dumps(self.counterexamples, ensure_ascii=False)}",
        ]
        if self.note:
            lines.append(f"note={self.note}")
        lines.append(f"status={'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_row(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "n": self.n,
            "k": None,
            "checked": self.checked,
            "domain": None,
            "codomain": None,
            "image": None,
            "failures": self.violations,
            "passed": self.passed,
            "note": self.note,
        }


@dataclass
class IdentityReport:
    suite: str
    n: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_text(self) -> str:
        return "\n".join([
            f"suite={self.suite}",
            f"n={self.n}",
            f"lhs_digits={len(str(self.lhs))}",
            f"rhs_digits={len(str(self.rhs))}",
            f"equal={self.passed}",
            f"status={'PASS' if self.passed else 'FAIL'}",
        ])

    def to_row(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "n": self.n,
            "k": None,
            "checked": 1,
            "domain": None,
            "codomain": None,
            "image": None,
            "failures": 0 if self.passed else 1,
            "passed": self.passed,
            "note": f"lhs_digits={len(str(self.lhs))}",
        }


@dataclass
class _Partial:
    domain: int = 0
    codomain: int = 0
    image_keys: Set[str] = field(default_factory=set)
    failures: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)

    def fail(self, direction: str, position: int, value: Any, detail: str, limit: int) -> None:
        self.failures += 1
        if len(self.counterexamples) < limit:
            self.counterexamples.append(Counterexample(direction, position, str(value), detail))


def _strided(stream: Iterable, part: int, parts: int):
    for offset, item in enumerate(itertools.islice(stream, part, None, parts)):
        yield part + offset * parts, item


def _check_part(
    domain: Iterable,
    forward: Callable,
    inverse: Callable,
    codomain: Iterable,
    key: Callable[[Any], str],
    in_domain: Callable[[Any], bool],
    in_codomain: Callable[[Any], bool],
    limit: int,
    part: int = 0,
    parts: int = 1,
) -> _Partial:
    result = _Partial()

    for position, x in _strided(domain, part, parts):
        result.domain += 1
        try:
            y = forward(x)
        except Exception as e:
            result.fail("forward", position, x, f"映射抛出异常: {e}", limit)
            continue
        if not in_codomain(y):
            result.fail("forward", position, x, f"像 {y} 不在陪域中", limit)
            continue
        result.image_keys.add(key(y))
        try:
            back = inverse(y)
        except Exception as e:
            result.fail("forward", position, x, f"逆映射抛出异常: {e}", limit)
            continue
        if back != x:
            result.fail("forward", position, x, f"往返得到 {back}", limit)

    for position, y in _strided(codomain, part, parts):
        result.codomain += 1
        try:
            x = inverse(y)
        except Exception as e:
            result.fail("backward", position, y, f"逆映射抛出异常: {e}", limit)
            continue
        if not in_domain(x):
            result.fail("backward", position, y, f"原像 {x} 不在定义域中", limit)
            continue
        try:
            again = forward(x)
        except Exception as e:
            result.fail("backward", position, y, f"映射抛出异常: {e}", limit)
            continue
        if again != y:
            result.fail("backward", position, y, f"往返得到 {again}", limit)

    return result


def _merge(suite: str, n: int, partials: List[_Partial], limit: int, k: Optional[int] = None) -> VerificationReport:
    report = VerificationReport(suite, n, k=k)
    image: Set[str] = set()
    examples: List[Counterexample] = []
    for partial_result in partials:
        report.domain += partial_result.domain
        report.codomain += partial_result.codomain
        report.round_trip_failures += partial_result.failures
        image |= partial_result.image_keys
        examples.extend(partial_result.counterexamples)
    report.image = len(image)
    report.counterexamples = sorted(examples, key=lambda c: c.order)[:limit]
    return report


def verify_bijection(
    domain: Iterable,
    forward: Callable,
    inverse: Callable,
    codomain: Iterable,
    key: Callable[[Any], str] = str,
    in_domain: Optional[Callable[[Any], bool]] = None,
    in_codomain: Optional[Callable[[Any], bool]] = None,
    limit: int = DEFAULT_LIMIT,
    suite: str = "bijection",
    n: int = 0,
) -> VerificationReport:
    """
    穷举检验 forward: domain -> codomain 是否为双射且 inverse 为其逆

    Args:
        domain / codomain: 有限流
        key: 规范序列化，用于记录像集合
        in_domain / in_codomain: 成员判定；缺省时由流本身收集
        limit: 报告中最多保留的反例数

    Returns:
        VerificationReport，失败不抛异常
    """
    if in_codomain is None:
        codomain = list(codomain)
        codomain_keys = {key(y) for y in codomain}
        in_codomain = lambda y: key(y) in codomain_keys
    if in_domain is None:
        domain = list(domain)
        domain_keys = {key(x) for x in domain}
        in_domain = lambda x: key(x) in domain_keys
    partial_result = _check_part(domain, forward, inverse, codomain, key, in_domain, in_codomain, limit)
    report = _merge(suite, n, [partial_result], limit)
    _log_report(report)
    return report


def _log_report(report: VerificationReport) -> None:
    if report.passed:
        logger.info(f"{report.suite} n={report.n}: {report.domain} 个元素通过")
    else:
        logger.warning(
            f"{report.suite} n={report.n}: 失败 {report.round_trip_failures} 次, "
            f"domain={report.domain} codomain={report.codomain} image={report.image}"
        )


# ---- 可按名称重建的验证套件(供子进程使用) ----

@dataclass(frozen=True)
class BijectionSuite:
    name: str
    n: int
    domain: Callable[[], Iterable]
    codomain: Callable[[], Iterable]
    forward: Callable
    inverse: Callable
    in_domain: Callable[[Any], bool]
    in_codomain: Callable[[Any], bool]
    k: Optional[int] = None


def _is_triple(value: Any, n: int) -> bool:
    return isinstance(value, PathTriple) and value.n == n and value.well_formed


def _is_marked(value: Any, n: int, sign: Optional[int] = None) -> bool:
    if not (isinstance(value, MarkedPath) and value.n == n and value.well_formed):
        return False
    if sign is None:
        return True
    height = value.mark_height
    return (height > 0) - (height < 0) == sign


def _is_kind(value: Any, n: int, kind: TripleKind) -> bool:
    return _is_triple(value, n) and classify(value).kind is kind


def _is_v(value: Any, n: int) -> bool:
    return _is_triple(value, n) and is_in_v(value)


def _is_i(value: Any, n: int) -> bool:
    return _is_triple(value, n) and is_in_i(value)


def _is_tie(value: Any, n: int) -> bool:
    return isinstance(value, TiePath) and value.n == n


def _is_avoid(value: Any, n: int) -> bool:
    return isinstance(value, AvoidPath) and value.n == n


def _is_free(value: Any, n: int) -> bool:
    return isinstance(value, NEPath) and value.start == ORIGIN and len(value) == 2 * n


def _is_marked_tie(value: Any, n: int) -> bool:
    return isinstance(value, MarkedTiePath) and value.n == n


def _is_ank(value: Any, n: int, k: int) -> bool:
    return isinstance(value, AnkPath) and value.n == n and value.k == k


def _is_step_result(value: Any, n: int, k: int) -> bool:
    if isinstance(value, InB):
        return _is_ank(value.path, n, k) and value.path.in_b
    if isinstance(value, Advanced):
        return _is_ank(value.path, n, k + 1)
    return False


def _unstep(result: Any) -> AnkPath:
    if isinstance(result, InB):
        return result.path
    return f_step_inv(result.path)


def _step_codomain(n: int, k: int) -> Iterable:
    inside = (InB(p) for p in oracle.enumerate_bnk(n, k))
    if k == 2 * n:
        return inside
    return itertools.chain(inside, (Advanced(p) for p in oracle.enumerate_ank(n, k + 1)))


def build_suite(name: str, n: int, k: Optional[int] = None) -> BijectionSuite:
    if name == "hockey.g":
        return BijectionSuite(
            name, n, partial(oracle.enumerate_t, n), partial(oracle.enumerate_d, n), g_map, g_inv,
            partial(_is_triple, n=n), partial(_is_marked, n=n),
        )
    if name == "hockey.r":
        return BijectionSuite(
            name, n, partial(oracle.enumerate_class, n, TripleKind.R), partial(oracle.enumerate_d_sign, n, 0),
            r_map, r_inv, partial(_is_kind, n=n, kind=TripleKind.R), partial(_is_marked, n=n, sign=0),
        )
    if name == "hockey.s":
        return BijectionSuite(
            name, n, partial(oracle.enumerate_u, n), partial(oracle.enumerate_d_sign, n, 1),
            s_map, s_inv, partial(_is_kind, n=n, kind=TripleKind.U), partial(_is_marked, n=n, sign=1),
        )
    if name == "hockey.t":
        return BijectionSuite(
            name, n, partial(oracle.enumerate_v, n), partial(oracle.enumerate_d_sign, n, -1),
            t_map, t_inv, partial(_is_v, n=n), partial(_is_marked, n=n, sign=-1),
        )
    if name == "hockey.z":
        return BijectionSuite(
            name, n, partial(oracle.enumerate_class, n, TripleKind.J), partial(oracle.enumerate_i, n),
            z_map, z_inv, partial(_is_kind, n=n, kind=TripleKind.J), partial(_is_i, n=n),
        )
    if name == "soccer.F":
        return BijectionSuite(
            name, n, partial(oracle.enumerate_x, n), partial(oracle.enumerate_y, n), big_f, big_f_inv,
            partial(_is_tie, n=n), partial(_is_avoid, n=n),
        )
    if name == "soccer.forward":
        return BijectionSuite(
            name, n, partial(oracle.enumerate_free, n), partial(oracle.enumerate_marked_tie, n),
            soccer_forward, soccer_inverse, partial(_is_free, n=n), partial(_is_marked_tie, n=n),
        )
    if name == "soccer.f_step":
        if k is None:
            raise ValueError("soccer.f_step 需要参数 k")
        return BijectionSuite(
            name, n, partial(oracle.enumerate_ank, n, k), partial(_step_codomain, n, k), f_step, _unstep,
            partial(_is_ank, n=n, k=k), partial(_is_step_result, n=n, k=k), k=k,
        )
    raise ValueError(f"未知的验证套件: {name}")


def _run_part(name: str, n: int, k: Optional[int], part: int, parts: int, limit: int) -> _Partial:
    suite = build_suite(name, n, k)
    return _check_part(
        suite.domain(), suite.forward, suite.inverse, suite.codomain(), str,
        suite.in_domain, suite.in_codomain, limit, part, parts,
    )


def run_suite(
    name: str,
    n: int,
    k: Optional[int] = None,
    parallel: int = 1,
    limit: int = DEFAULT_LIMIT,
) -> VerificationReport:
    """按名称运行双射套件；parallel>1 时按流下标分片到多个进程"""
    parts = max(1, parallel)
    if parts == 1:
        partials = [_run_part(name, n, k, 0, 1, limit)]
    else:
        partials = Parallel(n_jobs=parts)(
            delayed(_run_part)(name, n, k, part, parts, limit) for part in range(parts)
        )
    report = _merge(name, n, partials, limit, k)
    _log_report(report)
    return report


# ---- 性质检验 ----

def _extreme_height(path: UDPath, extreme: str) -> int:
    return path.max_height if extreme == "max" else path.min_height


def check_hockey_partition(n: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    """{R, U, V\\U, J} 划分 T_n；按原始集合定义独立判定后与 classify 比对"""
    report = PropertyReport("hockey.partition", n, limit=limit)
    for t in oracle.enumerate_t(n):
        report.checked += 1
        in_r = not t.c.steps
        in_u = is_in_u(t)
        in_v = is_in_v(t)
        last_b = t.b.steps[-1:] or None
        weakly_below = bool(t.c.steps) and t.c.max_height <= 0
        weakly_above = bool(t.c.steps) and t.c.min_height >= 0
        in_j = (last_b == "D" and weakly_below) or (last_b == "U" and weakly_above)
        memberships = [in_r, in_u, in_v and not in_u, in_j]
        if sum(memberships) != 1:
            report.fail(t, f"属于 {sum(memberships)} 个类")
            continue
        expected = [TripleKind.R, TripleKind.U, TripleKind.V_MINUS_U, TripleKind.J][memberships.index(True)]
        cls = classify(t)
        report.expect(cls.kind is expected, t, f"classify={cls}，应为 {expected.value}")
        if is_in_i(t):
            report.expect(cls.kind is TripleKind.U, t, "I_n 元素应归入 U")
            report.expect(in_u and in_v, t, "I_n 应等于 U_n ∩ V_n")
        elif in_u and in_v:
            report.fail(t, "属于 U_n ∩ V_n 却不满足 is_in_i")
    return report


def check_hockey_class_images(n: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    """r/s/t 的像分别落在 D^0/D^+/D^-，标记高度等于C的最高/最低高度，步数守恒"""
    report = PropertyReport("hockey.class_images", n, limit=limit)
    for t in oracle.enumerate_t(n):
        report.checked += 1
        kind = classify(t).kind
        total = len(t.a) + len(t.b) + len(t.c)
        if kind is TripleKind.R:
            m = r_map(t)
            report.expect(m.mark_height == 0, t, f"r 的像 {m} 不在 D^0")
            report.expect(len(m.h) == total, t, "r 步数不守恒")
        if is_in_u(t):
            m = s_map(t)
            report.expect(m.mark_height > 0, t, f"s 的像 {m} 不在 D^+")
            report.expect(m.mark_height == _extreme_height(t.c, "max"), t, "s 标记高度应等于C的最高高度")
            report.expect(len(m.h) == total, t, "s 步数不守恒")
        if is_in_v(t):
            m = t_map(t)
            report.expect(m.mark_height < 0, t, f"t 的像 {m} 不在 D^-")
            report.expect(m.mark_height == _extreme_height(t.c, "min"), t, "t 标记高度应等于C的最低高度")
            report.expect(len(m.h) == total, t, "t 步数不守恒")
        if kind is TripleKind.J:
            image = z_map(t)
            report.expect(is_in_i(image), t, f"z 的像 {image} 不在 I_n")
            report.expect(len(image.c) == len(t.b) + len(t.c), t, "z 步数不守恒")
            m = g_map(t)
            report.expect(len(m.h) == total, t, "g 步数不守恒")
    return report


def check_hockey_conjugation(n: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    """V_n 上 t = r_x∘s∘r_x 与直接以最低点切分的构造一致"""
    report = PropertyReport("hockey.conjugation", n, limit=limit)
    for t in oracle.enumerate_v(n):
        report.checked += 1
        conjugated = reflect_marked(s_map(reflect_triple(t)))
        report.expect(t_map(t) == conjugated, t, "t 与 r_x∘s∘r_x 不一致")
        report.expect(t_map_direct(t) == conjugated, t, f"直接构造得到 {t_map_direct(t)}")
    return report


def check_hockey_counts(n: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    report = PropertyReport("hockey.counts", n, limit=limit)
    closed = oracle.triple_count(n)
    for label, stream in (("T", oracle.enumerate_t(n)), ("D", oracle.enumerate_d(n))):
        seen = set()
        total = 0
        for value in stream:
            total += 1
            seen.add(str(value))
        report.checked += total
        report.expect(len(seen) == total, label, f"枚举出现重复: {total - len(seen)}")
        report.expect(total == closed, label, f"|{label}_{n}|={total}，闭式为 {closed}")
    report.note = f"closed_form={closed}"
    return report


def check_soccer_loop_bound(n: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    """F_n 的推进次数不超过 n"""
    report = PropertyReport("soccer.loop_bound", n, limit=limit)
    most = 0
    for p in oracle.enumerate_x(n):
        report.checked += 1
        advances = count_advances(p)
        most = max(most, advances)
        report.expect(advances <= n, p, f"推进了 {advances} 次")
    report.note = f"max_advances={most}"
    return report


def check_soccer_symmetry(n: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    """东步开头的像严格在对角线下方，北步开头的严格在上方；F 与对角反射可交换"""
    report = PropertyReport("soccer.symmetry", n, limit=limit)
    for p in oracle.enumerate_x(n):
        report.checked += 1
        image = big_f(p)
        offsets = image.path.diagonal_offsets[1:]
        if p.path.steps.startswith("E"):
            report.expect(bool(np.all(offsets > 0)), p, f"像 {image} 未严格在对角线下方")
        elif p.path.steps:
            report.expect(bool(np.all(offsets < 0)), p, f"像 {image} 未严格在对角线上方")
        mirrored = big_f(TiePath(n, reflect_diagonal(p.path)))
        report.expect(mirrored.path == reflect_diagonal(image.path), p, "F 与对角反射不可交换")
    return report


def check_soccer_counts(n: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    report = PropertyReport("soccer.counts", n, limit=limit)
    streams = [
        ("X", oracle.enumerate_x(n), oracle.central_binomial(n)),
        ("Y", oracle.enumerate_y(n), oracle.central_binomial(n)),
        ("free", oracle.enumerate_free(n), 4 ** n),
    ]
    if n >= 1:
        streams += [
            (f"A({n},{k})", oracle.enumerate_ank(n, k), oracle.binomial(2 * n - 1, k - 1))
            for k in range(n, 2 * n + 1)
        ]
    for label, stream, expected in streams:
        seen = set()
        total = 0
        for value in stream:
            total += 1
            seen.add(str(value))
        report.checked += total
        report.expect(len(seen) == total, label, f"枚举出现重复: {total - len(seen)}")
        report.expect(total == expected, label, f"|{label}|={total}，应为 {expected}")
    return report


def identity_reports(n: int) -> List[IdentityReport]:
    lhs, rhs = oracle.check_identity_soccer(n)
    first = IdentityReport("identities.soccer", n, lhs, rhs)
    lhs, rhs = oracle.check_identity_hockey(n)
    return [first, IdentityReport("identities.hockey", n, lhs, rhs)]


# ---- 随机抽查 ----

def random_balanced(rng: np.random.Generator, m: int) -> UDPath:
    cells = np.full(2 * m, ord("D"), dtype=np.uint8)
    cells[:m] = ord("U")
    rng.shuffle(cells)
    # 恰有 m 个U和m个D，必然平衡
    return unchecked(UDPath, steps=cells.tobytes().decode("ascii"))


def random_triple(rng: np.random.Generator, n: int) -> PathTriple:
    low, high = np.sort(rng.integers(0, n + 1, size=2))
    return unchecked(
        PathTriple,
        a=random_balanced(rng, int(low)),
        b=random_balanced(rng, int(high - low)),
        c=random_balanced(rng, int(n - high)),
    )


def random_free_path(rng: np.random.Generator, n: int) -> NEPath:
    cells = rng.choice(np.frombuffer(b"EN", dtype=np.uint8), size=2 * n)
    return NEPath(steps=cells.tobytes().decode("ascii"))


def check_random_hockey(n: int, samples: int, seed: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    """大规模随机三元组上 g^-1(g(t)) = t"""
    report = PropertyReport("random.hockey", n, limit=limit)
    rng = np.random.default_rng(seed)
    started = time.perf_counter()
    for _ in range(samples):
        t = random_triple(rng, n)
        report.checked += 1
        image = g_map(t)
        report.expect(image.well_formed and image.n == n and g_inv(image) == t, f"{len(t.a)}/{len(t.b)}/{len(t.c)}", "往返失败")
    report.note = f"seed={seed} elapsed={time.perf_counter() - started:.2f}s"
    return report


def check_random_soccer(n: int, samples: int, seed: int, limit: int = DEFAULT_LIMIT) -> PropertyReport:
    report = PropertyReport("random.soccer", n, limit=limit)
    rng = np.random.default_rng(seed)
    started = time.perf_counter()
    for _ in range(samples):
        p = random_free_path(rng, n)
        report.checked += 1
        report.expect(soccer_inverse(soccer_forward(p)) == p, p, "往返失败")
    report.note = f"seed={seed} elapsed={time.perf_counter() - started:.2f}s"
    return report


# ---- 按 CLI 套件组合 ----

def soccer_reports(n: int, parallel: int = 1, limit: int = DEFAULT_LIMIT) -> List[Any]:
    reports: List[Any] = [check_soccer_counts(n, limit)]
    if n >= 1:
        for k in range(n, 2 * n + 1):
            reports.append(run_suite("soccer.f_step", n, k, parallel, limit))
    reports.append(run_suite("soccer.F", n, None, parallel, limit))
    reports.append(check_soccer_loop_bound(n, limit))
    reports.append(check_soccer_symmetry(n, limit))
    reports.append(run_suite("soccer.forward", n, None, parallel, limit))
    return reports


def hockey_reports(n: int, parallel: int = 1, limit: int = DEFAULT_LIMIT) -> List[Any]:
    reports: List[Any] = [
        check_hockey_counts(n, limit),
        check_hockey_partition(n, limit),
        check_hockey_class_images(n, limit),
        check_hockey_conjugation(n, limit),
    ]
    for name in ("hockey.r", "hockey.s", "hockey.t", "hockey.z", "hockey.g"):
        reports.append(run_suite(name, n, None, parallel, limit))
    return reports
