"""
主双射 g: T_n -> D_n
(2n+1)·C(2n,n) 恒等式的构造性证明，分三步:
    平凡步 r   : C 为空的三元组 -> 标记点在横轴上
    核心步 s/t : U_n -> D_n^+，V_n -> D_n^-
    修正步 z   : J_n -> I_n = U_n ∩ V_n，再交给 t
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from lib.PathCore import (
    ContractViolation,
    PathParseError,
    StepUD,
    UDPath,
    leftmost_extreme_index,
    parse_ud,
    reflect_horizontal,
    split_at,
    subpath,
    unchecked,
)
from lib.TraceRecorder import Joined, TraceRecorder, emit


logger = logging.getLogger("HockeyBijection")

EMPTY = UDPath("")


@dataclass(frozen=True)
class PathTriple:
    """T_n 的元素 (A,B,C)"""

    a: UDPath
    b: UDPath
    c: UDPath

    def __post_init__(self):
        problem = self._problem()
        if problem:
            raise ContractViolation(problem)

    def _problem(self) -> Optional[str]:
        for name, part in (("A", self.a), ("B", self.b), ("C", self.c)):
            if not part.is_balanced:
                return f"三元组分量 {name}='{part}' 不平衡"
        return None

    @property
    def well_formed(self) -> bool:
        return self._problem() is None

    @property
    def n(self) -> int:
        return (len(self.a) + len(self.b) + len(self.c)) // 2

    def __str__(self) -> str:
        return f"{self.a}|{self.b}|{self.c}"


@dataclass(frozen=True)
class MarkedPath:
    """D_n 的元素 (H,X)，X 为点下标 0..2n"""

    h: UDPath
    x: int

    def __post_init__(self):
        problem = self._problem()
        if problem:
            raise ContractViolation(problem)

    def _problem(self) -> Optional[str]:
        if not self.h.is_balanced:
            return f"路径 H='{self.h}' 不平衡"
        if not 0 <= self.x <= len(self.h):
            return f"标记下标越界: {self.x} (要求 0<=x<={len(self.h)})"
        return None

    @property
    def well_formed(self) -> bool:
        return self._problem() is None

    @property
    def n(self) -> int:
        return len(self.h) // 2

    @property
    def mark_height(self) -> int:
        return self.h.height_at(self.x)

    def __str__(self) -> str:
        return f"{self.h}@{self.x}"


def _triple(a: UDPath, b: UDPath, c: UDPath) -> PathTriple:
    # 各分量由平衡路径切分或拼接而来
    return unchecked(PathTriple, a=a, b=b, c=c)


def _marked(h: UDPath, x: int) -> MarkedPath:
    return unchecked(MarkedPath, h=h, x=x)


class TripleKind(str, Enum):
    R = "R"
    U = "U"
    V_MINUS_U = "VminusU"
    J = "J"


@dataclass(frozen=True)
class TripleClass:
    kind: TripleKind
    criterion: Optional[str] = None  # 仅J: "below" | "above"

    def __str__(self) -> str:
        if self.criterion:
            return f"{self.kind.value}({self.criterion})"
        return self.kind.value


def parse_triple(text: str) -> PathTriple:
    parts = text.split("|")
    if len(parts) != 3:
        bad = [i for i, ch in enumerate(text) if ch == "|"]
        raise PathParseError(text, bad[2] if len(bad) > 2 else len(text), "三元组格式应为 A|B|C")
    offset = 0
    paths = []
    for part in parts:
        try:
            paths.append(parse_ud(part))
        except PathParseError as e:
            raise PathParseError(text, offset + e.index)
        offset += len(part) + 1
    return PathTriple(*paths)


def parse_marked(text: str) -> MarkedPath:
    head, sep, mark = text.rpartition("@")
    if not sep:
        raise PathParseError(text, len(text), "缺少 @x 标记")
    if not re.fullmatch(r"[0-9]+", mark):
        raise PathParseError(text, len(head) + 1, "标记必须是非负整数")
    return MarkedPath(parse_ud(head), int(mark))


def reflect_triple(t: PathTriple) -> PathTriple:
    return _triple(reflect_horizontal(t.a), reflect_horizontal(t.b), reflect_horizontal(t.c))


def reflect_marked(m: MarkedPath) -> MarkedPath:
    return _marked(reflect_horizontal(m.h), m.x)


def _rises_above(p: UDPath) -> bool:
    return bool(p.steps) and p.max_height > 0


def _dips_below(p: UDPath) -> bool:
    return bool(p.steps) and p.min_height < 0


def is_in_u(t: PathTriple) -> bool:
    return t.b.last_step in (None, StepUD.DOWN) and _rises_above(t.c)


def is_in_v(t: PathTriple) -> bool:
    return t.b.last_step in (None, StepUD.UP) and _dips_below(t.c)


def is_in_i(t: PathTriple) -> bool:
    """I_n = U_n ∩ V_n: B为空且C同时有严格在轴上方和下方的点"""
    return not t.b.steps and _rises_above(t.c) and _dips_below(t.c)


def classify(t: PathTriple) -> TripleClass:
    if not t.c.steps:
        return TripleClass(TripleKind.R)
    if is_in_u(t):
        return TripleClass(TripleKind.U)
    if is_in_v(t):
        return TripleClass(TripleKind.V_MINUS_U)
    # 非空平衡路径必在某侧离开横轴，因此这里B非空
    if t.b.last_step is StepUD.DOWN:
        return TripleClass(TripleKind.J, "below")
    return TripleClass(TripleKind.J, "above")


def r_map(t: PathTriple, trace: Optional[TraceRecorder] = None) -> MarkedPath:
    if t.c.steps:
        raise ContractViolation(f"r 只作用于C为空的三元组: {t}")
    result = _marked(t.a + t.b, len(t.a))
    emit(trace, "concatenate", t, result)
    return result


def r_inv(m: MarkedPath, trace: Optional[TraceRecorder] = None) -> PathTriple:
    if m.mark_height != 0:
        raise ContractViolation(f"r^-1 要求标记点在横轴上: {m} (高度 {m.mark_height})")
    a, b = split_at(m.h, m.x)
    result = _triple(a, b, EMPTY)
    emit(trace, "r_inv", m, result)
    return result


def s_map(t: PathTriple, trace: Optional[TraceRecorder] = None) -> MarkedPath:
    """
    s: U_n -> D_n^+

    K 为C上最靠左的最高点，把C切成C1、C2；H = C1·A·B·C2，X 为A与B的交点
    """
    if not is_in_u(t):
        raise ContractViolation(f"s 只作用于 U_n: {t}")
    kappa, height = leftmost_extreme_index(t.c, "max")
    c1, c2 = split_at(t.c, kappa)
    emit(trace, f"split-at-K t={kappa}", t.c, Joined(c1, c2))
    result = _marked(c1 + t.a + t.b + c2, kappa + len(t.a))
    emit(trace, "s", t, result)
    return result


def find_k(m: MarkedPath) -> int:
    """H 上与X同高的最靠左点"""
    return int(np.flatnonzero(m.h.profile == m.mark_height)[0])


def find_z(m: MarkedPath) -> Optional[int]:
    """
    X 右侧、X所在水平线上最靠右的"下-下"穿越点(B与C2的交点)

    Returns:
        点下标；不存在时B为空，返回None
    """
    h, x, level = m.h, m.x, m.mark_height
    if len(h) < 2:
        return None
    deltas = h.deltas
    z = np.arange(1, len(h))
    hits = (h.profile[1:-1] == level) & (deltas[:-1] == -1) & (deltas[1:] == -1) & (z > x)
    found = np.flatnonzero(hits)
    return int(z[found[-1]]) if found.size else None


def s_inv(m: MarkedPath, trace: Optional[TraceRecorder] = None) -> PathTriple:
    if m.mark_height <= 0:
        raise ContractViolation(f"s^-1 要求标记点严格在横轴上方: {m} (高度 {m.mark_height})")
    h, x = m.h, m.x
    kappa = find_k(m)
    emit(trace, "find-K", m, f"t={kappa}")
    z = find_z(m)
    emit(trace, "find-Z", m, "none" if z is None else f"t={z}")
    c1 = subpath(h, 0, kappa)
    a = subpath(h, kappa, x)
    if z is None:
        b, c2 = EMPTY, subpath(h, x, len(h))
    else:
        b, c2 = subpath(h, x, z), subpath(h, z, len(h))
    result = _triple(a, b, c1 + c2)
    emit(trace, "s_inv", m, result)
    return result


def t_map(t: PathTriple, trace: Optional[TraceRecorder] = None) -> MarkedPath:
    """t = r_x ∘ s ∘ r_x: V_n -> D_n^-"""
    if not is_in_v(t):
        raise ContractViolation(f"t 只作用于 V_n: {t}")
    mirrored = reflect_triple(t)
    emit(trace, "reflect", t, mirrored)
    image = s_map(mirrored, trace)
    result = reflect_marked(image)
    emit(trace, "reflect", image, result)
    return result


def t_map_direct(t: PathTriple) -> MarkedPath:
    """不经反射的构造: 以C上最靠左的最低点切分"""
    if not is_in_v(t):
        raise ContractViolation(f"t 只作用于 V_n: {t}")
    kappa, _ = leftmost_extreme_index(t.c, "min")
    c1, c2 = split_at(t.c, kappa)
    return _marked(c1 + t.a + t.b + c2, kappa + len(t.a))


def t_inv(m: MarkedPath, trace: Optional[TraceRecorder] = None) -> PathTriple:
    if m.mark_height >= 0:
        raise ContractViolation(f"t^-1 要求标记点严格在横轴下方: {m} (高度 {m.mark_height})")
    mirrored = reflect_marked(m)
    emit(trace, "reflect", m, mirrored)
    preimage = s_inv(mirrored, trace)
    result = reflect_triple(preimage)
    emit(trace, "reflect", preimage, result)
    return result


def z_map(t: PathTriple, trace: Optional[TraceRecorder] = None) -> PathTriple:
    """把B接到C前面，中间路径变为空"""
    if classify(t).kind is not TripleKind.J:
        raise ContractViolation(f"z 只作用于 J_n: {t}")
    result = _triple(t.a, EMPTY, t.b + t.c)
    emit(trace, "z", t, result)
    return result


def rightmost_crossing(c: UDPath) -> Optional[int]:
    """C穿越横轴(前后两步同向)的最靠右的内点"""
    if len(c) < 2:
        return None
    deltas = c.deltas
    hits = (c.profile[1:-1] == 0) & (deltas[:-1] == deltas[1:])
    found = np.flatnonzero(hits)
    return int(found[-1]) + 1 if found.size else None


def z_inv(t: PathTriple, trace: Optional[TraceRecorder] = None) -> PathTriple:
    if not is_in_i(t):
        raise ContractViolation(f"z^-1 只作用于 I_n: {t}")
    y = rightmost_crossing(t.c)
    if y is None:
        raise ContractViolation(f"C='{t.c}' 没有穿越横轴的点")
    emit(trace, "rightmost-crossing", t.c, y)
    b, c = split_at(t.c, y)
    result = _triple(t.a, b, c)
    emit(trace, "z_inv", t, result)
    return result


_DISPATCH = {
    TripleKind.R: "r",
    TripleKind.U: "s",
    TripleKind.V_MINUS_U: "t",
    TripleKind.J: "t∘z",
}


def g_map(t: PathTriple, trace: Optional[TraceRecorder] = None) -> MarkedPath:
    cls = classify(t)
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"g: {t} 属于 {cls}")
    emit(trace, "classify", t, cls)
    emit(trace, "dispatch", cls, _DISPATCH[cls.kind])
    if cls.kind is TripleKind.R:
        return r_map(t, trace)
    if cls.kind is TripleKind.U:
        return s_map(t, trace)
    if cls.kind is TripleKind.V_MINUS_U:
        return t_map(t, trace)
    return t_map(z_map(t, trace), trace)


def g_inv(m: MarkedPath, trace: Optional[TraceRecorder] = None) -> PathTriple:
    height = m.mark_height
    emit(trace, "mark-height", m, height)
    if height == 0:
        return r_inv(m, trace)
    if height > 0:
        return s_inv(m, trace)
    preimage = t_inv(m, trace)
    inside = is_in_i(preimage)
    emit(trace, "is_in_i", preimage, inside)
    if inside:
        return z_inv(preimage, trace)
    return preimage
