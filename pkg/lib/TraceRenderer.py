"""
轨迹渲染 - 把路径画成字符网格，并能按阶段标签重放轨迹事件

UD路径: '/' 与 '\\' 画在高度网格上，横轴画成一行 '-'，标记点用下方的 '^' 指出
NE路径: 每个点画出它的出边('_' 东步, '|' 北步)，终点为 'o'，对角线空格为 '.'，标记点为 '*'
"""

import re
from typing import Callable, Dict, List, Optional

from lib import HajosWarmup as warmup
from lib import HockeyBijection as hockey
from lib.PathCore import (
    GridPoint,
    NEPath,
    PathParseError,
    UDPath,
    concat,
    first_diagonal_touch,
    last_diagonal_touch,
    parse_ne,
    parse_ud,
    reflect_diagonal,
    split_at,
    translate,
)
from lib.TraceRecorder import TraceEvent


def render_ud(path: UDPath, mark: Optional[int] = None) -> str:
    profile = path.profile
    top = int(profile.max())
    bottom = int(profile.min())
    width = len(path)
    rows: List[str] = []
    # 第r行覆盖高度 r..r+1
    for row in range(top - 1, bottom - 1, -1):
        if row == -1:
            rows.append("-" * width)
        cells = [" "] * width
        for t, ch in enumerate(path.steps):
            if ch == "U" and profile[t] == row:
                cells[t] = "/"
            elif ch == "D" and profile[t + 1] == row:
                cells[t] = "\\"
        rows.append("".join(cells).rstrip())
    if bottom >= 0:
        rows.append("-" * width)
    if mark is not None:
        rows.append(" " * mark + "^")
    return "\n".join(rows)


def render_ne(path: NEPath, mark: Optional[GridPoint] = None) -> str:
    cells: Dict[GridPoint, str] = {}
    for t, point in enumerate(path.points()):
        cells[point] = path.steps[t].replace("E", "_").replace("N", "|") if t < len(path) else "o"
    if mark is not None:
        cells[mark] = "*"
    xs = [p.x for p in cells]
    ys = [p.y for p in cells]
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        line = ""
        for x in range(min(xs), max(xs) + 1):
            line += cells.get(GridPoint(x, y), "." if x == y else " ")
        rows.append(line.rstrip())
    return "\n".join(rows)


def render_value(text: str) -> Optional[str]:
    """按序列化格式识别值并作图；无法识别时返回None"""
    text = text.strip()
    if text.startswith(("InB ", "Advanced ")):
        text = text.split(" ", 1)[1]
    if text.startswith("n="):
        text = text.split(",", 2)[2]
    try:
        if "|" in text:
            triple = hockey.parse_triple(text)
            return "\n\n".join(render_ud(part) for part in (triple.a, triple.b, triple.c))
        if text.startswith("(") and "@" in text:
            marked_tie = warmup.parse_marked_tie(text)
            return render_ne(marked_tie.path.path, GridPoint(marked_tie.mark, marked_tie.mark))
        if text.startswith("("):
            return render_ne(parse_ne(text))
        if "@" in text:
            marked = hockey.parse_marked(text)
            return render_ud(marked.h, marked.x)
        if text and set(text) <= set("UD"):
            return render_ud(parse_ud(text))
    except (PathParseError, ValueError):
        return None
    return None


# ---- 重放 ----

def _pair(text: str) -> List[str]:
    return text.split(" + ")


def _stage_value(stage: str, name: str) -> str:
    match = re.search(rf"{name}=(\(-?\d+,-?\d+\)|-?\d+)", stage)
    if match is None:
        raise ValueError(f"阶段标签缺少 {name}: {stage}")
    return match.group(1)


def _replay_translate(stage: str, before: str) -> str:
    vx, vy = (int(v) for v in _stage_value(stage, "v").strip("()").split(","))
    return str(translate(parse_ne(before), GridPoint(vx, vy)))


def _replay_split(stage: str, before: str) -> str:
    t = int(_stage_value(stage, "t"))
    path = parse_ne(before) if before.startswith("(") else parse_ud(before)
    prefix, suffix = split_at(path, t)
    return f"{prefix} + {suffix}"


def _replay_reflect(stage: str, before: str) -> str:
    if before.startswith("("):
        return str(reflect_diagonal(parse_ne(before)))
    if "|" in before:
        return str(hockey.reflect_triple(hockey.parse_triple(before)))
    return str(hockey.reflect_marked(hockey.parse_marked(before)))


def _replay_concatenate(stage: str, before: str) -> str:
    if "|" in before:
        return str(hockey.r_map(hockey.parse_triple(before)))
    first, second = (parse_ne(part) for part in _pair(before))
    return str(concat(first, second))


def _replay_strip(stage: str, before: str) -> str:
    path = parse_ne(before)
    tail = NEPath(warmup.ANK_START, path.steps[1:])
    return str(warmup.AnkPath(len(path) // 2, tail.endpoint.x, tail))


def _replay_touch(stage: str, before: str) -> str:
    return str(first_diagonal_touch(parse_ne(before)))


def _replay_last_point(stage: str, before: str) -> str:
    return f"i={last_diagonal_touch(parse_ne(before)) // 2}"


def _replay_classify(stage: str, before: str) -> str:
    return str(hockey.classify(hockey.parse_triple(before)))


def _replay_dispatch(stage: str, before: str) -> str:
    kind = hockey.TripleKind(before.split("(")[0])
    return {"R": "r", "U": "s", "VminusU": "t", "J": "t∘z"}[kind.value]


def _replay_prepend(stage: str, before: str) -> str:
    return str(NEPath(steps="E" + warmup.parse_ank(before).path.steps))


def _replay_find_z(stage: str, before: str) -> str:
    z = hockey.find_z(hockey.parse_marked(before))
    return "none" if z is None else f"t={z}"


_Replayer = Callable[[str, str], str]

_REPLAYERS: Dict[str, _Replayer] = {
    "translate": _replay_translate,
    "split-at": _replay_split,
    "split-at-K": _replay_split,
    "reflect": _replay_reflect,
    "reflect-start": _replay_reflect,
    "reflect-back": _replay_reflect,
    "reflect-prefix": _replay_reflect,
    "concatenate": _replay_concatenate,
    "strip-first-step": _replay_strip,
    "prepend-east": _replay_prepend,
    "first-diagonal-touch": _replay_touch,
    "last-diagonal-point": _replay_last_point,
    "f_step": lambda stage, before: str(warmup.f_step(warmup.parse_ank(before))),
    "f_step_inv": lambda stage, before: str(warmup.f_step_inv(warmup.parse_ank(before))),
    "F": lambda stage, before: str(warmup.big_f(warmup.tie_path(parse_ne(before)))),
    "F-inv": lambda stage, before: str(warmup.big_f_inv(warmup.avoid_path(parse_ne(before)))),
    "mark": lambda stage, before: f"{before}@{_stage_value(stage, 'i')}",
    "classify": _replay_classify,
    "dispatch": _replay_dispatch,
    "z": lambda stage, before: str(hockey.z_map(hockey.parse_triple(before))),
    "s": lambda stage, before: str(hockey.s_map(hockey.parse_triple(before))),
    "mark-height": lambda stage, before: str(hockey.parse_marked(before).mark_height),
    "r_inv": lambda stage, before: str(hockey.r_inv(hockey.parse_marked(before))),
    "s_inv": lambda stage, before: str(hockey.s_inv(hockey.parse_marked(before))),
    "z_inv": lambda stage, before: str(hockey.z_inv(hockey.parse_triple(before))),
    "find-K": lambda stage, before: f"t={hockey.find_k(hockey.parse_marked(before))}",
    "find-Z": _replay_find_z,
    "is_in_i": lambda stage, before: str(hockey.is_in_i(hockey.parse_triple(before))),
    "rightmost-crossing": lambda stage, before: str(hockey.rightmost_crossing(parse_ud(before))),
}


def replay_event(event: TraceEvent) -> str:
    """对事件的 before 重新调用库函数，结果应与 after 一致"""
    head = event.stage.split(" ", 1)[0]
    replayer = _REPLAYERS.get(head)
    if replayer is None:
        raise ValueError(f"未知的轨迹阶段: {event.stage}")
    return replayer(event.stage, event.before)
