"""
路径核心 - 格点路径的表示、几何查询与对称操作
UD路径(上/下步)与NE路径(北/东步)两套字母表，所有值构造后不可变
高度序列等批量计算基于numpy实现，长路径(2*10^5步)也能线性处理
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Iterator, Literal, Optional, Tuple, Type, TypeVar, Union

import numpy as np


logger = logging.getLogger("PathCore")


class PathParseError(ValueError):
    """路径文本不符合语法"""

    def __init__(self, text: str, index: int, reason: str = "非法字符"):
        self.text = text
        self.index = index
        self.reason = reason
        super().__init__(f"解析失败 '{text}': 位置 {index} {reason}")


class ContractViolation(ValueError):
    """输入违反操作的前置条件或类型不变量"""


class StepUD(str, Enum):
    UP = "U"
    DOWN = "D"

    @property
    def delta(self) -> int:
        return 1 if self is StepUD.UP else -1

    def reflected(self) -> "StepUD":
        return StepUD.DOWN if self is StepUD.UP else StepUD.UP


class StepNE(str, Enum):
    NORTH = "N"
    EAST = "E"

    @property
    def vector(self) -> "GridPoint":
        return GridPoint(0, 1) if self is StepNE.NORTH else GridPoint(1, 0)

    def reflected(self) -> "StepNE":
        return StepNE.EAST if self is StepNE.NORTH else StepNE.NORTH


@dataclass(frozen=True)
class GridPoint:
    x: int
    y: int

    def __add__(self, other: "GridPoint") -> "GridPoint":
        return GridPoint(self.x + other.x, self.y + other.y)

    def __neg__(self) -> "GridPoint":
        return GridPoint(-self.x, -self.y)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


ORIGIN = GridPoint(0, 0)

_UD_SWAP = str.maketrans("UD", "DU")
_NE_SWAP = str.maketrans("NE", "EN")
_DROP_UD = str.maketrans("", "", "UD")
_DROP_NE = str.maketrans("", "", "NE")

# 字节 -> 步长增量查表
_UD_DELTA = np.zeros(256, dtype=np.int64)
_UD_DELTA[ord("U")] = 1
_UD_DELTA[ord("D")] = -1
_NE_DIAGONAL_DELTA = np.zeros(256, dtype=np.int64)
_NE_DIAGONAL_DELTA[ord("E")] = 1
_NE_DIAGONAL_DELTA[ord("N")] = -1


def _step_bytes(steps: str) -> np.ndarray:
    return np.frombuffer(steps.encode("ascii"), dtype=np.uint8)


V = TypeVar("V")


def unchecked(cls: Type[V], **values: Any) -> V:
    """跳过 __post_init__ 直接构造；只用于由合法值切分、拼接、反射得到的结果"""
    obj = object.__new__(cls)
    for name, value in values.items():
        object.__setattr__(obj, name, value)
    return obj


def _known_profile(p: "UDPath") -> Optional[np.ndarray]:
    # cached_property 把结果存在实例 __dict__ 中
    return p.__dict__.get("profile")


def _ud(steps: str, profile: Optional[np.ndarray] = None) -> "UDPath":
    path = unchecked(UDPath, steps=steps)
    if profile is not None:
        path.__dict__["profile"] = profile
    return path


@dataclass(frozen=True)
class UDPath:
    """上/下步路径，起点高度固定为0"""

    steps: str = ""

    def __post_init__(self):
        if self.steps.translate(_DROP_UD):
            raise ContractViolation(f"UD路径只能包含 U/D: '{self.steps}'")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[StepUD]:
        return (StepUD(ch) for ch in self.steps)

    def __add__(self, other: "UDPath") -> "UDPath":
        return concat(self, other)

    def __str__(self) -> str:
        return self.steps

    @cached_property
    def profile(self) -> np.ndarray:
        out = np.zeros(len(self.steps) + 1, dtype=np.int64)
        if self.steps:
            np.cumsum(_UD_DELTA[_step_bytes(self.steps)], out=out[1:])
        return out

    @cached_property
    def deltas(self) -> np.ndarray:
        return _UD_DELTA[_step_bytes(self.steps)]

    @property
    def is_balanced(self) -> bool:
        return int(self.profile[-1]) == 0

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    @property
    def max_height(self) -> int:
        return int(self.profile.max())

    @property
    def min_height(self) -> int:
        return int(self.profile.min())

    @property
    def last_step(self) -> Optional[StepUD]:
        return StepUD(self.steps[-1]) if self.steps else None

    def height_at(self, t: int) -> int:
        return int(self.profile[t])


@dataclass(frozen=True)
class NEPath:
    """北/东步路径，显式起点(集合A(n,k)等依赖绝对位置)"""

    start: GridPoint = ORIGIN
    steps: str = ""

    def __post_init__(self):
        if self.steps.translate(_DROP_NE):
            raise ContractViolation(f"NE路径只能包含 N/E: '{self.steps}'")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[StepNE]:
        return (StepNE(ch) for ch in self.steps)

    def __str__(self) -> str:
        return f"{self.start}:{self.steps}"

    @property
    def endpoint(self) -> GridPoint:
        easts = self.steps.count("E")
        return GridPoint(self.start.x + easts, self.start.y + len(self.steps) - easts)

    @cached_property
    def diagonal_offsets(self) -> np.ndarray:
        """第t个点的 x-y 值，长度 |p|+1"""
        out = np.full(len(self.steps) + 1, self.start.x - self.start.y, dtype=np.int64)
        if self.steps:
            out[1:] += np.cumsum(_NE_DIAGONAL_DELTA[_step_bytes(self.steps)])
        return out

    def point(self, t: int) -> GridPoint:
        if not 0 <= t <= len(self.steps):
            raise ContractViolation(f"点下标越界: {t} (路径长度 {len(self.steps)})")
        easts = self.steps.count("E", 0, t)
        return GridPoint(self.start.x + easts, self.start.y + t - easts)

    def points(self) -> Iterator[GridPoint]:
        x, y = self.start.x, self.start.y
        yield GridPoint(x, y)
        for ch in self.steps:
            if ch == "E":
                x += 1
            else:
                y += 1
            yield GridPoint(x, y)


Path = Union[UDPath, NEPath]
P = TypeVar("P", UDPath, NEPath)


def parse_ud(text: str) -> UDPath:
    """解析 `[UD]*`，非法字符报告其下标"""
    for index, ch in enumerate(text):
        if ch not in "UD":
            logger.debug(f"UD路径解析失败: {text!r} @ {index}")
            raise PathParseError(text, index)
    return UDPath(text)


_NE_HEADER = re.compile(r"\((-?\d+),(-?\d+)\):")


def parse_ne(text: str) -> NEPath:
    """
    解析 `(x,y):STEPS`；省略起点时视为从(0,0)出发

    Raises:
        PathParseError: 起点格式或步字符非法
    """
    start = ORIGIN
    offset = 0
    if text.startswith("("):
        match = _NE_HEADER.match(text)
        if match is None:
            close = text.find(":")
            raise PathParseError(text, close if close >= 0 else len(text), "起点格式应为 (x,y):")
        start = GridPoint(int(match.group(1)), int(match.group(2)))
        offset = match.end()
    for index in range(offset, len(text)):
        if text[index] not in "NE":
            raise PathParseError(text, index)
    return NEPath(start, text[offset:])


def format_path(p: Path) -> str:
    return str(p)


def reflect_horizontal(p: UDPath) -> UDPath:
    profile = _known_profile(p)
    return _ud(p.steps.translate(_UD_SWAP), None if profile is None else -profile)


def reflect_diagonal(p: NEPath) -> NEPath:
    return unchecked(NEPath, start=GridPoint(p.start.y, p.start.x), steps=p.steps.translate(_NE_SWAP))


def translate(p: NEPath, v: GridPoint) -> NEPath:
    return unchecked(NEPath, start=p.start + v, steps=p.steps)


def height_profile(p: UDPath) -> np.ndarray:
    """高度序列 h(0)=0, h(t+1)=h(t)±1，返回长度 |p|+1 的整数数组"""
    return p.profile


def leftmost_extreme_index(p: UDPath, mode: Literal["max", "min"]) -> Tuple[int, int]:
    """最高(最低)点中最靠左的下标及其高度；argmax/argmin 取首个出现位置"""
    profile = p.profile
    if mode == "max":
        index = int(np.argmax(profile))
    elif mode == "min":
        index = int(np.argmin(profile))
    else:
        raise ContractViolation(f"未知的极值模式: {mode}")
    return index, int(profile[index])


def diagonal_touches(p: NEPath) -> np.ndarray:
    """所有落在 x=y 上的点下标(含起点)"""
    return np.flatnonzero(p.diagonal_offsets == 0)


def first_diagonal_touch(p: NEPath) -> Optional[int]:
    # 含下标0；需要排除起点的调用方自行过滤
    touches = diagonal_touches(p)
    return int(touches[0]) if touches.size else None


def last_diagonal_touch(p: NEPath) -> Optional[int]:
    touches = diagonal_touches(p)
    return int(touches[-1]) if touches.size else None


def subpath(p: UDPath, begin: int, end: int) -> UDPath:
    """p 的第 begin..end 个点之间的一段，平移到高度0起步"""
    if not 0 <= begin <= end <= len(p):
        raise ContractViolation(f"子路径越界: [{begin},{end}] (路径长度 {len(p)})")
    profile = _known_profile(p)
    if profile is not None:
        profile = profile[begin:end + 1] - profile[begin]
    return _ud(p.steps[begin:end], profile)


def split_at(p: P, t: int) -> Tuple[P, P]:
    if not 0 <= t <= len(p):
        raise ContractViolation(f"切分位置越界: {t} (路径长度 {len(p)})")
    if isinstance(p, UDPath):
        return subpath(p, 0, t), subpath(p, t, len(p))
    return (
        unchecked(NEPath, start=p.start, steps=p.steps[:t]),
        unchecked(NEPath, start=p.point(t), steps=p.steps[t:]),
    )


def concat(first: P, second: P) -> P:
    """首尾相接；NE路径要求第二段从第一段终点出发"""
    if isinstance(first, UDPath):
        head, tail = _known_profile(first), _known_profile(second)
        profile = None if head is None or tail is None else np.concatenate((head, tail[1:] + head[-1]))
        return _ud(first.steps + second.steps, profile)
    if second.start != first.endpoint:
        raise ContractViolation(f"无法拼接: {second} 不从 {first.endpoint} 出发")
    return unchecked(NEPath, start=first.start, steps=first.steps + second.steps)
