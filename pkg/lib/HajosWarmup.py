"""
热身双射 - 单步反射 f_{n,k}、迭代映射 F_n 及其逆，
以及按"最后一个对角点"分解得到的 4^n 组合双射

约定:
    A(n,k) 中的路径从(1,0)出发到(k,2n-k)，共 2n-1 步
    B(n,k) 是其中不碰 x=y 的子集
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple, Union

from lib.PathCore import (
    ORIGIN,
    ContractViolation,
    GridPoint,
    NEPath,
    concat,
    diagonal_touches,
    first_diagonal_touch,
    last_diagonal_touch,
    parse_ne,
    PathParseError,
    reflect_diagonal,
    split_at,
    translate,
)
from lib.TraceRecorder import Joined, TraceRecorder, emit


logger = logging.getLogger("HajosWarmup")

ANK_START = GridPoint(1, 0)
SHIFT_FORWARD = GridPoint(1, -1)
SHIFT_BACK = GridPoint(-1, 1)


@dataclass(frozen=True)
class AnkPath:
    """A(n,k) 的元素"""

    n: int
    k: int
    path: NEPath

    def __post_init__(self):
        n, k = self.n, self.k
        if n < 1 or not n <= k <= 2 * n:
            raise ContractViolation(f"参数越界: n={n}, k={k} (要求 n>=1 且 n<=k<=2n)")
        if self.path.start != ANK_START:
            raise ContractViolation(f"A(n,k) 路径必须从(1,0)出发: {self.path}")
        if len(self.path) != 2 * n - 1:
            raise ContractViolation(f"A({n},{k}) 路径应有 {2 * n - 1} 步: {self.path}")
        if self.path.endpoint != GridPoint(k, 2 * n - k):
            raise ContractViolation(f"A({n},{k}) 路径应终止于({k},{2 * n - k}): {self.path}")

    @cached_property
    def in_b(self) -> bool:
        return first_diagonal_touch(self.path) is None

    def __str__(self) -> str:
        return f"n={self.n},k={self.k},{self.path}"


@dataclass(frozen=True)
class InB:
    path: AnkPath

    def __str__(self) -> str:
        return f"InB {self.path}"


@dataclass(frozen=True)
class Advanced:
    path: AnkPath

    def __str__(self) -> str:
        return f"Advanced {self.path}"


FStepResult = Union[InB, Advanced]


@dataclass(frozen=True)
class TiePath:
    """X_n: 从(0,0)到(n,n)的路径"""

    n: int
    path: NEPath

    def __post_init__(self):
        if self.n < 0:
            raise ContractViolation(f"n 不能为负: {self.n}")
        if self.path.start != ORIGIN or len(self.path) != 2 * self.n:
            raise ContractViolation(f"X_{self.n} 路径应从(0,0)出发且有 {2 * self.n} 步: {self.path}")
        if self.path.endpoint != GridPoint(self.n, self.n):
            raise ContractViolation(f"X_{self.n} 路径应终止于({self.n},{self.n}): {self.path}")

    def __str__(self) -> str:
        return str(self.path)


@dataclass(frozen=True)
class AvoidPath:
    """Y_n: 除起点外不碰对角线的 2n 步路径"""

    n: int
    path: NEPath

    def __post_init__(self):
        if self.n < 0:
            raise ContractViolation(f"n 不能为负: {self.n}")
        if self.path.start != ORIGIN or len(self.path) != 2 * self.n:
            raise ContractViolation(f"Y_{self.n} 路径应从(0,0)出发且有 {2 * self.n} 步: {self.path}")
        if diagonal_touches(self.path).size > 1:
            raise ContractViolation(f"Y_{self.n} 路径在起点之后碰到了对角线: {self.path}")

    @property
    def below(self) -> bool:
        return self.path.steps.startswith("E")

    def __str__(self) -> str:
        return str(self.path)


@dataclass(frozen=True)
class MarkedTiePath:
    """标记了对角点(i,i)的 X_n 路径"""

    path: TiePath
    mark: int

    def __post_init__(self):
        n = self.path.n
        if not 0 <= self.mark <= n:
            raise ContractViolation(f"标记越界: {self.mark} (要求 0<=i<={n})")
        # (i,i) 只可能是第 2i 个点
        if self.path.path.point(2 * self.mark) != GridPoint(self.mark, self.mark):
            raise ContractViolation(f"路径 {self.path} 没有经过({self.mark},{self.mark})")

    @property
    def n(self) -> int:
        return self.path.n

    def __str__(self) -> str:
        return f"{self.path}@{self.mark}"


def tie_path(path: NEPath) -> TiePath:
    return TiePath(len(path) // 2, path)


def avoid_path(path: NEPath) -> AvoidPath:
    return AvoidPath(len(path) // 2, path)


def parse_ank(text: str) -> AnkPath:
    """解析 `n=N,k=K,(1,0):STEPS`"""
    try:
        n_part, k_part, path_part = text.split(",", 2)
        if not n_part.startswith("n=") or not k_part.startswith("k="):
            raise ValueError
        n, k = int(n_part[2:]), int(k_part[2:])
    except ValueError:
        raise PathParseError(text, 0, "应为 n=N,k=K,(x,y):STEPS")
    return AnkPath(n, k, parse_ne(path_part))


def parse_marked_tie(text: str) -> MarkedTiePath:
    head, sep, mark = text.rpartition("@")
    if not sep:
        raise PathParseError(text, len(text), "缺少 @i 标记")
    if not re.fullmatch(r"[0-9]+", mark):
        raise PathParseError(text, len(head) + 1, "标记必须是非负整数")
    return MarkedTiePath(tie_path(parse_ne(head)), int(mark))


def f_step(p: AnkPath, trace: Optional[TraceRecorder] = None) -> FStepResult:
    """
    f_{n,k}: A(n,k) -> B(n,k) ⊎ A(n,k+1)

    不碰对角线则原样返回InB；否则把首个对角点P之前的部分沿 x=y 反射，
    再整体平移(1,-1)，得到 A(n,k+1) 的元素
    """
    touch = first_diagonal_touch(p.path)
    if touch is None:
        result: FStepResult = InB(p)
    else:
        if p.k >= 2 * p.n:
            raise ContractViolation(f"A({p.n},{p.k}) 中的路径不应碰到对角线: {p.path}")
        emit(trace, "first-diagonal-touch", p.path, touch)
        prefix, suffix = split_at(p.path, touch)
        reflected = reflect_diagonal(prefix)
        emit(trace, "reflect-prefix", prefix, reflected)
        joined = concat(reflected, suffix)
        moved = translate(joined, SHIFT_FORWARD)
        emit(trace, f"translate v={SHIFT_FORWARD}", joined, moved)
        result = Advanced(AnkPath(p.n, p.k + 1, moved))
    emit(trace, f"f_step k={p.k}", p, result)
    return result


def f_step_inv(q: AnkPath, trace: Optional[TraceRecorder] = None) -> AnkPath:
    """f_{n,k}^{-1} 在 A(n,k+1) 上的分支；q 的参数为 k+1"""
    if q.k < q.n + 1:
        raise ContractViolation(f"f_step_inv 需要 k+1 >= n+1: {q}")
    shifted = translate(q.path, SHIFT_BACK)
    emit(trace, f"translate v={SHIFT_BACK}", q.path, shifted)
    touch = first_diagonal_touch(shifted)
    if touch is None:
        raise ContractViolation(f"平移后的路径未碰到对角线: {shifted}")
    emit(trace, "first-diagonal-touch", shifted, touch)
    prefix, suffix = split_at(shifted, touch)
    reflected = reflect_diagonal(prefix)
    emit(trace, "reflect-prefix", prefix, reflected)
    result = AnkPath(q.n, q.k - 1, concat(reflected, suffix))
    emit(trace, f"f_step_inv k={q.k}", q, result)
    return result


def _strip_first_step(path: NEPath) -> AnkPath:
    n = len(path) // 2
    tail = NEPath(ANK_START, path.steps[1:])
    return AnkPath(n, tail.endpoint.x, tail)


def _prepend_east(p: AnkPath) -> NEPath:
    return NEPath(ORIGIN, "E" + p.path.steps)


def _push_below(p: TiePath, trace: Optional[TraceRecorder]) -> Tuple[AvoidPath, int]:
    """东步开头的 X_n 路径: 反复施加 f_step 直到落入 B(n,k)"""
    n = p.n
    current = _strip_first_step(p.path)
    emit(trace, "strip-first-step", p, current)
    advances = 0
    while True:
        outcome = f_step(current, trace)
        if isinstance(outcome, InB):
            break
        advances += 1
        if advances > n:
            logger.error(f"F_{n} 推进次数越界: {p}")
            raise RuntimeError(f"F_{n} 超过 {n} 次推进仍未停止: {p}")
        current = outcome.path
    image = _prepend_east(current)
    emit(trace, "prepend-east", current, image)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"F_{n}: {p} 经 {advances} 次推进 -> {image}")
    return AvoidPath(n, image), advances


def _conjugated(p: TiePath, trace: Optional[TraceRecorder]) -> Tuple[AvoidPath, int]:
    if p.n == 0:
        return AvoidPath(0, NEPath()), 0
    if p.path.steps.startswith("E"):
        return _push_below(p, trace)
    mirrored = reflect_diagonal(p.path)
    emit(trace, "reflect-start", p.path, mirrored)
    image, advances = _push_below(TiePath(p.n, mirrored), trace)
    back = reflect_diagonal(image.path)
    emit(trace, "reflect-back", image.path, back)
    return AvoidPath(p.n, back), advances


def big_f(p: TiePath, trace: Optional[TraceRecorder] = None) -> AvoidPath:
    """F_n: X_n -> Y_n；北步开头的路径通过关于 x=y 的反射共轭处理"""
    image, _ = _conjugated(p, trace)
    return image


def count_advances(p: TiePath) -> int:
    """F_n 计算 p 时 f_step 的推进次数，不超过 n"""
    _, advances = _conjugated(p, None)
    return advances


def big_f_inv(u: AvoidPath, trace: Optional[TraceRecorder] = None) -> TiePath:
    n = u.n
    if n == 0:
        return TiePath(0, NEPath())
    if not u.below:
        mirrored = reflect_diagonal(u.path)
        emit(trace, "reflect-start", u.path, mirrored)
        image = big_f_inv(AvoidPath(n, mirrored), trace)
        back = reflect_diagonal(image.path)
        emit(trace, "reflect-back", image.path, back)
        return TiePath(n, back)

    current = _strip_first_step(u.path)
    emit(trace, "strip-first-step", u, current)
    # 终点 (m, 2n-m) 决定恰好需要 m-n 次逆步
    for _ in range(current.k - n):
        current = f_step_inv(current, trace)
    image = _prepend_east(current)
    emit(trace, "prepend-east", current, image)
    return TiePath(n, image)


def soccer_forward(p: NEPath, trace: Optional[TraceRecorder] = None) -> MarkedTiePath:
    """
    4^n 的组合双射: 任意 2n 步路径 -> 带对角标记的 X_n 路径

    以最后一个对角点 N=(i,i) 把 p 分成 p1、p2；p2 之后不再碰对角线，
    平移回原点后用 F_{n-i} 的逆把它变成平局路径，再平移回 (i,i) 拼接
    """
    if p.start != ORIGIN or len(p) % 2:
        raise ContractViolation(f"输入应为从(0,0)出发的偶数步路径: {p}")
    n = len(p) // 2
    last = last_diagonal_touch(p)
    i = last // 2
    emit(trace, "last-diagonal-point", p, f"i={i}")
    prefix, suffix = split_at(p, last)
    emit(trace, f"split-at t={last}", p, Joined(prefix, suffix))
    corner = GridPoint(i, i)
    at_origin = translate(suffix, -corner)
    emit(trace, f"translate v={-corner}", suffix, at_origin)
    tail = big_f_inv(AvoidPath(n - i, at_origin), trace)
    emit(trace, "F-inv", at_origin, tail)
    placed = translate(tail.path, corner)
    emit(trace, f"translate v={corner}", tail.path, placed)
    joined = concat(prefix, placed)
    emit(trace, "concatenate", Joined(prefix, placed), joined)
    result = MarkedTiePath(TiePath(n, joined), i)
    emit(trace, f"mark i={i}", joined, result)
    return result


def soccer_inverse(m: MarkedTiePath, trace: Optional[TraceRecorder] = None) -> NEPath:
    n, i = m.n, m.mark
    path = m.path.path
    # (i,i) 只在下标 2i 处出现，这也就是对它的最后一次访问
    prefix, suffix = split_at(path, 2 * i)
    emit(trace, f"split-at t={2 * i}", path, Joined(prefix, suffix))
    corner = GridPoint(i, i)
    at_origin = translate(suffix, -corner)
    emit(trace, f"translate v={-corner}", suffix, at_origin)
    tail = big_f(TiePath(n - i, at_origin), trace)
    emit(trace, "F", at_origin, tail)
    placed = translate(tail.path, corner)
    emit(trace, f"translate v={corner}", tail.path, placed)
    joined = concat(prefix, placed)
    emit(trace, "concatenate", Joined(prefix, placed), joined)
    return joined
