"""
枚举预言机 - 独立的穷举生成器与精确大整数恒等式检验
所有流按步字典序惰性生成，二项式系数只用整数乘法公式
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, List, Tuple

from lib.HajosWarmup import (
    ANK_START,
    AnkPath,
    AvoidPath,
    MarkedTiePath,
    TiePath,
)
from lib.HockeyBijection import MarkedPath, PathTriple, TripleKind, classify, is_in_i
from lib.PathCore import ContractViolation, NEPath, UDPath, diagonal_touches


def binomial(n: int, k: int) -> int:
    """整数二项式系数 C(n,k)，逐项乘除保持精确"""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - i + 1) // i
    return result


def central_binomials(limit: int) -> List[int]:
    """[C(0,0), C(2,1), ..., C(2·limit,limit)]，由 C(2m,m) = C(2m-2,m-1)·2(2m-1)/m 逐项递推"""
    row = [1]
    for m in range(1, limit + 1):
        row.append(row[-1] * 2 * (2 * m - 1) // m)
    return row


@lru_cache(maxsize=None)
def central_binomial(m: int) -> int:
    """C(2m,m)"""
    return central_binomials(m)[m]


@lru_cache(maxsize=None)
def pair_convolution(m: int) -> int:
    """Σ_{i+j=m} C(2i,i)C(2j,j)"""
    row = central_binomials(m)
    return sum(row[i] * row[m - i] for i in range(m + 1))


def check_identity_soccer(n: int) -> Tuple[int, int]:
    """(4^n, Σ_i C(2i,i)C(2(n-i),n-i))，调用方断言相等"""
    if n < 0:
        raise ContractViolation(f"n 不能为负: {n}")
    return 4 ** n, pair_convolution(n)


def check_identity_hockey(n: int) -> Tuple[int, int]:
    """((2n+1)·C(2n,n), Σ_{i+j+k=n} C(2i,i)C(2j,j)C(2k,k))"""
    if n < 0:
        raise ContractViolation(f"n 不能为负: {n}")
    row = central_binomials(n)
    # 按k分组: Σ_k C(2k,k)·Σ_{i+j=n-k} C(2i,i)C(2j,j)
    rhs = sum(row[k] * pair_convolution(n - k) for k in range(n + 1))
    return (2 * n + 1) * row[n], rhs


def triple_count(n: int) -> int:
    return (2 * n + 1) * central_binomial(n)


def _placements(length: int, count: int, rare: str, common: str) -> Iterator[str]:
    """在 length 个位置中放 count 个 rare 字符；rare 字典序较小时输出按字典序排列"""
    for chosen in itertools.combinations(range(length), count):
        cells = [common] * length
        for index in chosen:
            cells[index] = rare
        yield "".join(cells)


def balanced_paths(m: int) -> Iterator[UDPath]:
    """半长为m的全部平衡UD路径，按 U<D 的字典序"""
    for steps in _placements(2 * m, m, "U", "D"):
        yield UDPath(steps)


def compositions(n: int) -> Iterator[Tuple[int, int, int]]:
    for i in range(n + 1):
        for j in range(n - i + 1):
            yield i, j, n - i - j


def enumerate_t(n: int) -> Iterator[PathTriple]:
    for i, j, k in compositions(n):
        for a in balanced_paths(i):
            for b in balanced_paths(j):
                for c in balanced_paths(k):
                    yield PathTriple(a, b, c)


def enumerate_d(n: int) -> Iterator[MarkedPath]:
    for h in balanced_paths(n):
        for x in range(2 * n + 1):
            yield MarkedPath(h, x)


def enumerate_class(n: int, kind: TripleKind) -> Iterator[PathTriple]:
    return (t for t in enumerate_t(n) if classify(t).kind is kind)


def enumerate_u(n: int) -> Iterator[PathTriple]:
    return enumerate_class(n, TripleKind.U)


def enumerate_v(n: int) -> Iterator[PathTriple]:
    # V_n = (V_n \ U_n) ∪ I_n
    return (t for t in enumerate_t(n) if classify(t).kind is TripleKind.V_MINUS_U or is_in_i(t))


def enumerate_i(n: int) -> Iterator[PathTriple]:
    return (t for t in enumerate_t(n) if is_in_i(t))


def enumerate_d_sign(n: int, sign: int) -> Iterator[MarkedPath]:
    """标记高度符号为 sign(-1/0/1) 的 D_n 子集: D_n^-、D_n^0、D_n^+"""
    for m in enumerate_d(n):
        height = m.mark_height
        if (height > 0) - (height < 0) == sign:
            yield m


def enumerate_free(n: int) -> Iterator[NEPath]:
    for steps in itertools.product("EN", repeat=2 * n):
        yield NEPath(steps="".join(steps))


def enumerate_x(n: int) -> Iterator[TiePath]:
    for steps in _placements(2 * n, n, "E", "N"):
        yield TiePath(n, NEPath(steps=steps))


def enumerate_y(n: int) -> Iterator[AvoidPath]:
    for path in enumerate_free(n):
        if diagonal_touches(path).size == 1:
            yield AvoidPath(n, path)


def enumerate_marked_tie(n: int) -> Iterator[MarkedTiePath]:
    for tie in enumerate_x(n):
        for t in diagonal_touches(tie.path):
            yield MarkedTiePath(tie, int(t) // 2)


def _check_ank_range(n: int, k: int) -> None:
    if n < 1 or not n <= k <= 2 * n:
        raise ContractViolation(f"参数越界: n={n}, k={k} (要求 n>=1 且 n<=k<=2n)")


def enumerate_ank(n: int, k: int) -> Iterator[AnkPath]:
    # 参数在调用时即检查
    _check_ank_range(n, k)
    return (AnkPath(n, k, NEPath(ANK_START, steps)) for steps in _placements(2 * n - 1, k - 1, "E", "N"))


def enumerate_bnk(n: int, k: int) -> Iterator[AnkPath]:
    return (p for p in enumerate_ank(n, k) if p.in_b)
