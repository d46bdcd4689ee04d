"""
轨迹记录器 - 逐步记录双射算法的每个阶段
各算法接收可选的 trace 参数，为None时不做任何记录
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class TraceEvent:
    stage: str    # 阶段标签，例如 "f_step k=5"、"reflect"、"split-at-K t=3"
    before: str   # 输入值的文本序列化
    after: str    # 输出值的文本序列化

    def to_record(self) -> Dict[str, Any]:
        return {"stage": self.stage, "before": self.before, "after": self.after}


class Joined:
    """按 "a + b" 拼接的延迟文本，只在真正记录时才序列化"""

    def __init__(self, *parts: Any):
        self.parts = parts

    def __str__(self) -> str:
        return " + ".join(str(part) for part in self.parts)


@dataclass
class TraceRecorder:
    events: List[TraceEvent] = field(default_factory=list)

    def emit(self, stage: str, before: Any, after: Any) -> None:
        self.events.append(TraceEvent(stage, str(before), str(after)))

    def stages(self) -> List[str]:
        return [event.stage for event in self.events]

    def __len__(self) -> int:
        return len(self.events)


def emit(trace: Optional[TraceRecorder], stage: str, before: Any, after: Any) -> None:
    if trace is not None:
        trace.emit(stage, before, after)
