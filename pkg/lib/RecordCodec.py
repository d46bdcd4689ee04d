"""
记录编解码 - 各类路径值与 JSON/JSONL 记录之间的互转

三元组   {"A": "...", "B": "...", "C": "..."}
标记路径 {"H": "...", "X": int}
NE路径   {"start": [x, y], "steps": "..."}，带对角标记时另有 "mark": i
"""

import json
from typing import Any, Dict, Union

from lib.HajosWarmup import AnkPath, AvoidPath, MarkedTiePath, TiePath, tie_path
from lib.HockeyBijection import MarkedPath, PathTriple
from lib.PathCore import NEPath, PathParseError, parse_ne, parse_ud


PathValue = Union[PathTriple, MarkedPath, NEPath, MarkedTiePath]


def encode_record(value: Any) -> Dict[str, Any]:
    if isinstance(value, PathTriple):
        return {"A": value.a.steps, "B": value.b.steps, "C": value.c.steps}
    if isinstance(value, MarkedPath):
        return {"H": value.h.steps, "X": value.x}
    if isinstance(value, MarkedTiePath):
        record = encode_record(value.path.path)
        record["mark"] = value.mark
        return record
    if isinstance(value, (TiePath, AvoidPath, AnkPath)):
        return encode_record(value.path)
    if isinstance(value, NEPath):
        return {"start": [value.start.x, value.start.y], "steps": value.steps}
    raise TypeError(f"无法编码的值类型: {type(value).__name__}")


def to_json(value: Any) -> str:
    return json.dumps(encode_record(value), ensure_ascii=False)


def _field(record: Dict[str, Any], name: str, kind: type, text: str) -> Any:
    value = record.get(name)
    if not isinstance(value, kind) or isinstance(value, bool):
        raise PathParseError(text, 0, f"字段 {name} 缺失或类型错误")
    return value


def decode_record(record: Dict[str, Any], text: str = "") -> PathValue:
    """按字段集合识别记录类型；字段不全或类型不对时抛 PathParseError"""
    text = text or json.dumps(record, ensure_ascii=False)
    if not isinstance(record, dict):
        raise PathParseError(text, 0, "记录必须是 JSON 对象")
    keys = set(record)
    if keys == {"A", "B", "C"}:
        return PathTriple(*(parse_ud(_field(record, name, str, text)) for name in ("A", "B", "C")))
    if keys == {"H", "X"}:
        return MarkedPath(parse_ud(_field(record, "H", str, text)), _field(record, "X", int, text))
    if keys in ({"start", "steps"}, {"start", "steps", "mark"}):
        start = record["start"]
        if not (isinstance(start, list) and len(start) == 2 and all(isinstance(v, int) for v in start)):
            raise PathParseError(text, 0, "start 应为 [x, y] 整数对")
        path = parse_ne(f"({start[0]},{start[1]}):{_field(record, 'steps', str, text)}")
        if "mark" in record:
            return MarkedTiePath(tie_path(path), _field(record, "mark", int, text))
        return path
    raise PathParseError(text, 0, f"无法识别的记录字段: {sorted(keys)}")


def from_json(text: str) -> PathValue:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as e:
        raise PathParseError(text, e.pos, f"JSON 解析失败: {e.msg}")
    return decode_record(record, text)
