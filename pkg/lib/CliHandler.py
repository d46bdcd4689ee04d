"""
命令行处理器 - apply / trace / verify / enumerate 四个子命令的实现
每个命令返回退出码: 0 成功, 1 验证失败, 2 解析错误, 3 前置条件违例
"""

import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, TextIO

from lib import BijectionVerifier as verifier
from lib import EnumerationOracle as oracle
from lib.HajosWarmup import (
    MarkedTiePath,
    avoid_path,
    big_f,
    big_f_inv,
    parse_marked_tie,
    soccer_forward,
    soccer_inverse,
    tie_path,
)
from lib.HockeyBijection import MarkedPath, PathTriple, g_inv, g_map, parse_marked, parse_triple
from lib.PathCore import ContractViolation, NEPath, PathParseError, parse_ne
from lib.RecordCodec import from_json, to_json
from lib.ReportExporter import ReportExporter
from lib.TraceRecorder import TraceRecorder
from lib.TraceRenderer import render_value


EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3

DEFAULT_SETTINGS: Dict[str, Any] = {
    "log_level": "WARNING",
    "parallel": 1,
    "counterexample_limit": verifier.DEFAULT_LIMIT,
    "render": "none",
    "verify": {"soccer_n_max": 7, "hockey_n_max": 8, "identities_n_max": 500},
    "random": {"hockey_n": 100000, "soccer_n": 200, "samples": 1000, "seed": 20240601},
    "errorlog": "errorlog.txt",
    "export": {"path": ""},
}


@dataclass(frozen=True)
class BijectionEntry:
    """一个可由命令行调用的双射: 文本解析、JSON记录类型、映射本身"""

    parse: Callable[[str], Any]
    record_type: type
    coerce: Callable[[Any], Any]
    apply: Callable[..., Any]


def _same(value: Any) -> Any:
    return value


BIJECTIONS: Dict[str, BijectionEntry] = {
    "soccer": BijectionEntry(parse_ne, NEPath, _same, soccer_forward),
    "soccer-inv": BijectionEntry(parse_marked_tie, MarkedTiePath, _same, soccer_inverse),
    "F": BijectionEntry(lambda text: tie_path(parse_ne(text)), NEPath, tie_path, big_f),
    "F-inv": BijectionEntry(lambda text: avoid_path(parse_ne(text)), NEPath, avoid_path, big_f_inv),
    "g": BijectionEntry(parse_triple, PathTriple, _same, g_map),
    "g-inv": BijectionEntry(parse_marked, MarkedPath, _same, g_inv),
}

ENUMERATORS: Dict[str, Callable[..., Iterator[Any]]] = {
    "T": oracle.enumerate_t,
    "D": oracle.enumerate_d,
    "X": oracle.enumerate_x,
    "Y": oracle.enumerate_y,
    "free": oracle.enumerate_free,
    "A": oracle.enumerate_ank,
    "B": oracle.enumerate_bnk,
}

SUITES = ("soccer", "hockey", "identities", "all", "random")


def _merge_settings(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge_settings(merged[key], value)
        else:
            merged[key] = value
    return merged


class CliHandler:
    """命令行子命令的协调器"""

    def __init__(
        self,
        settings: Optional[Dict[str, Any]] = None,
        out: Optional[TextIO] = None,
        err: Optional[TextIO] = None,
    ):
        self.settings = _merge_settings(DEFAULT_SETTINGS, settings or {})
        self._out = out
        self._err = err
        self.logger = logging.getLogger("CliHandler")

    @staticmethod
    def _load_settings(config_path: Optional[str] = None) -> Dict[str, Any]:
        """读取settings.json，读取失败时返回空配置"""
        if config_path is None:
            base_dir = Path(__file__).parent.parent
            config_path = str(base_dir / "config" / "settings.json")

        try:
            with open(config_path, "r", encoding="utf-8") as f:
                return json.load(f)
        except Exception:
            return {}

    @classmethod
    def from_config(cls, config_path: Optional[str] = None) -> "CliHandler":
        return cls(cls._load_settings(config_path))

    # 输出流在调用时才解析，便于测试替换 sys.stdout
    @property
    def out(self) -> TextIO:
        return self._out or sys.stdout

    @property
    def err(self) -> TextIO:
        return self._err or sys.stderr

    def _print(self, text: str = "") -> None:
        print(text, file=self.out)

    def _diagnose(self, code: int, e: Exception) -> int:
        label = "parse error" if code == EXIT_PARSE_ERROR else "precondition violated"
        print(f"{label}: {e}", file=self.err)
        self.logger.debug(f"命令失败 exit={code}: {e!r}")
        return code

    def _inputs(self, value: str) -> List[str]:
        if value != "-":
            return [value]
        return [line.strip() for line in sys.stdin if line.strip()]

    def _parse_input(self, entry: BijectionEntry, text: str) -> Any:
        if not text.lstrip().startswith("{"):
            return entry.parse(text)
        value = from_json(text)
        if not isinstance(value, entry.record_type):
            raise PathParseError(text, 0, f"记录类型应为 {entry.record_type.__name__}")
        return entry.coerce(value)

    def _format_value(self, value: Any, fmt: str) -> str:
        return to_json(value) if fmt == "json" else str(value)

    # ---- apply ----

    def cmd_apply(self, args) -> int:
        entry = BIJECTIONS[args.bijection]
        fmt = args.format or "text"
        try:
            for text in self._inputs(args.input):
                result = entry.apply(self._parse_input(entry, text))
                self._print(self._format_value(result, fmt))
        except PathParseError as e:
            return self._diagnose(EXIT_PARSE_ERROR, e)
        except ContractViolation as e:
            return self._diagnose(EXIT_PRECONDITION, e)
        return EXIT_OK

    # ---- trace ----

    def _emit_trace(self, trace: TraceRecorder, result: Any, fmt: str, render: bool) -> None:
        for event in trace.events:
            drawing = render_value(event.after) if render else None
            if fmt == "json":
                record = event.to_record()
                if drawing is not None:
                    record["render"] = drawing
                self._print(json.dumps(record, ensure_ascii=False))
                continue
            self._print(f"{event.stage}: {event.before} -> {event.after}")
            if drawing:
                self._print(drawing)
                self._print()
        if fmt == "json":
            self._print(json.dumps({"result": str(result)}, ensure_ascii=False))
        else:
            self._print(f"result: {result}")

    def cmd_trace(self, args) -> int:
        entry = BIJECTIONS[args.bijection]
        fmt = args.format or "text"
        render = (args.render or self.settings.get("render", "none")) == "ascii"
        try:
            for text in self._inputs(args.input):
                trace = TraceRecorder()
                result = entry.apply(self._parse_input(entry, text), trace)
                self._emit_trace(trace, result, fmt, render)
        except PathParseError as e:
            return self._diagnose(EXIT_PARSE_ERROR, e)
        except ContractViolation as e:
            return self._diagnose(EXIT_PRECONDITION, e)
        return EXIT_OK

    # ---- verify ----

    def _suite_reports(
        self, suite: str, n_max: Optional[int], parallel: int, seed: Optional[int] = None
    ) -> Iterator[Any]:
        limit = int(self.settings.get("counterexample_limit", verifier.DEFAULT_LIMIT))
        limits = self.settings.get("verify", {})
        if suite in ("soccer", "all"):
            for n in range(int(limits.get("soccer_n_max", 7) if n_max is None else n_max) + 1):
                yield from verifier.soccer_reports(n, parallel, limit)
        if suite in ("hockey", "all"):
            for n in range(int(limits.get("hockey_n_max", 8) if n_max is None else n_max) + 1):
                yield from verifier.hockey_reports(n, parallel, limit)
        if suite in ("identities", "all"):
            for n in range(int(limits.get("identities_n_max", 500) if n_max is None else n_max) + 1):
                yield from verifier.identity_reports(n)
        if suite == "random":
            random_settings = self.settings.get("random", {})
            samples = int(random_settings.get("samples", 1000))
            seed = int(random_settings.get("seed", DEFAULT_SETTINGS["random"]["seed"]) if seed is None else seed)
            hockey_n = int(random_settings.get("hockey_n", 100000) if n_max is None else n_max)
            soccer_n = int(random_settings.get("soccer_n", 200) if n_max is None else n_max)
            yield verifier.check_random_hockey(hockey_n, samples, seed, limit)
            yield verifier.check_random_soccer(soccer_n, samples, seed, limit)

    def cmd_verify(self, args) -> int:
        parallel = int(args.parallel or self.settings.get("parallel", 1))
        reports: List[Any] = []
        failed = 0

        for report in self._suite_reports(args.suite, args.n_max, parallel, args.seed):
            reports.append(report)
            if not report.passed:
                failed += 1
            self._print(report.to_text())
            self._print()

        self._print(f"summary: {len(reports)} reports, {failed} failed")
        export_path = args.export or self.settings.get("export", {}).get("path")
        if export_path:
            exporter = ReportExporter()
            exporter.collect(reports)
            ok, msg = exporter.save_file(export_path)
            print(f"[export] {msg}", file=self.err)
            if not ok:
                self.logger.error(f"报告导出失败: {msg}")
        return EXIT_VERIFY_FAILED if failed else EXIT_OK

    # ---- enumerate ----

    def _enumerate(self, name: str, n: int, k: Optional[int]) -> Iterator[Any]:
        if n < 0:
            raise ContractViolation(f"n 不能为负: {n}")
        if name in ("A", "B"):
            if k is None:
                raise ContractViolation(f"集合 {name} 需要 --k")
            return ENUMERATORS[name](n, k)
        return ENUMERATORS[name](n)

    def cmd_enumerate(self, args) -> int:
        try:
            stream = self._enumerate(args.set, args.n, args.k)
        except ContractViolation as e:
            # 参数错误属于用法错误
            return self._diagnose(EXIT_PARSE_ERROR, e)
        jsonl = (args.format or "text") == "jsonl"
        for value in stream:
            if jsonl:
                self._print(to_json(value))
            elif args.set in ("A", "B"):
                self._print(str(value.path))
            else:
                self._print(str(value))
        return EXIT_OK
