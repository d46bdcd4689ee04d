import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional

PROJECT_ROOT = Path(__file__).resolve().parents[2]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from lib import BijectionVerifier as verifier
from lib import EnumerationOracle as oracle
from lib.HajosWarmup import big_f, tie_path
from lib.PathCore import parse_ne
from lib.TraceRecorder import TraceRecorder


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    elapsed: float = 0.0
    budget: Optional[float] = None
    details: List[str] = field(default_factory=list)

    @property
    def over_budget(self) -> bool:
        return self.budget is not None and self.elapsed > self.budget

    def finish(self, elapsed: float) -> None:
        """记录耗时；超出时间预算同样判为未通过"""
        self.elapsed = elapsed
        if self.over_budget:
            self.passed = False
            self.details.append(f"超出时间预算: {elapsed:.2f}s > {self.budget:.0f}s")


def _absorb(result: CriterionResult, reports) -> None:
    for report in reports:
        if not report.passed:
            result.passed = False
            result.details.append(report.to_text().replace("\n", " "))


def _identities(kind: str, n_max: int) -> Callable[[CriterionResult], None]:
    check = oracle.check_identity_soccer if kind == "soccer" else oracle.check_identity_hockey

    def run(result: CriterionResult) -> None:
        for n in range(n_max + 1):
            lhs, rhs = check(n)
            if lhs != rhs:
                result.passed = False
                result.details.append(f"n={n} 两侧不相等")
    return run


def _hockey_g(n_max: int):
    def run(result: CriterionResult) -> None:
        _absorb(result, (verifier.run_suite("hockey.g", n) for n in range(n_max + 1)))
    return run


def _class_laws(n_max: int):
    def run(result: CriterionResult) -> None:
        for n in range(n_max + 1):
            _absorb(result, [verifier.check_hockey_partition(n), verifier.check_hockey_class_images(n)])
            _absorb(result, (verifier.run_suite(name, n) for name in ("hockey.r", "hockey.s", "hockey.t", "hockey.z")))
    return run


def _warmup(n_max: int):
    def run(result: CriterionResult) -> None:
        for n in range(1, n_max + 1):
            _absorb(result, (verifier.run_suite("soccer.f_step", n, k) for k in range(n, 2 * n + 1)))
        _absorb(result, (verifier.run_suite("soccer.F", n) for n in range(n_max + 1)))
    return run


def _soccer(n_max: int):
    def run(result: CriterionResult) -> None:
        _absorb(result, (verifier.run_suite("soccer.forward", n) for n in range(n_max + 1)))
    return run


def _trace_regression(result: CriterionResult) -> None:
    trace = TraceRecorder()
    image = big_f(tie_path(parse_ne("(0,0):EENNNNEE")), trace)
    steps = [event for event in trace.events if event.stage.startswith("f_step k=")]
    advances = [event.stage for event in steps if event.after.startswith("Advanced")]
    result.details.append(f"stages={[event.stage for event in steps]}")
    if str(image) != "(0,0):EEEENNEE" or len(advances) != 2 or not steps[-1].after.startswith("InB"):
        result.passed = False
        result.details.append(f"输出 {image}，推进 {len(advances)} 次")


def _loop_bound(n_max: int):
    def run(result: CriterionResult) -> None:
        reports = [verifier.check_soccer_loop_bound(n) for n in range(n_max + 1)]
        _absorb(result, reports)
        result.details.append(reports[-1].note)
    return run


def _large_instance(n: int, samples: int, seed: int):
    def run(result: CriterionResult) -> None:
        report = verifier.check_random_hockey(n, samples, seed)
        _absorb(result, [report])
        result.details.append(report.note)
    return run


def build_criteria(args):
    return [
        (1, "恒等式 4^n 精确检验", 5.0, _identities("soccer", 500)),
        (2, "恒等式 (2n+1)C(2n,n) 精确检验", 30.0, _identities("hockey", 500)),
        (3, f"g 在 n<={args.hockey_n_max} 上的双射性", 120.0, _hockey_g(args.hockey_n_max)),
        (4, "分类划分与 r/s/t/z 像集", None, _class_laws(args.hockey_n_max)),
        (5, "f_{n,k} 与 F_n 的双射性", None, _warmup(6)),
        (6, "4^n 组合双射", None, _soccer(7)),
        (7, "EENNNNEE 轨迹回归", None, _trace_regression),
        (8, "F_n 推进次数上界", None, _loop_bound(6)),
        (9, "大实例往返", 10.0, _large_instance(args.large_n, args.samples, args.seed)),
    ]


def run(args) -> List[CriterionResult]:
    wanted = set(args.only or range(1, 10))
    results = []
    for number, title, budget, check in build_criteria(args):
        if number not in wanted:
            continue
        result = CriterionResult(number, title, budget=budget)
        started = time.perf_counter()
        try:
            check(result)
        except Exception as e:
            result.passed = False
            result.details.append(f"异常: {e}")
        result.finish(time.perf_counter() - started)
        status = "PASS" if result.passed else "FAIL"
        limit = f" (限时 {result.budget:.0f}s)" if result.budget is not None else ""
        print(f"[criterion {number}] {status} {title} elapsed={result.elapsed:.2f}s{limit}")
        for detail in result.details[:10]:
            print(f"[criterion {number}]   {detail}")
        results.append(result)
    return results


def main():
    parser = argparse.ArgumentParser(description="逐条运行验收标准并计时")
    parser.add_argument("--only", type=int, nargs="*", help="只运行指定编号的标准")
    parser.add_argument("--hockey-n-max", type=int, default=8, help="g 穷举检验的最大 n")
    parser.add_argument("--large-n", type=int, default=100000, help="大实例往返的 n")
    parser.add_argument("--samples", type=int, default=1000, help="大实例往返的样本数")
    parser.add_argument("--seed", type=int, default=20240601, help="随机种子")
    args = parser.parse_args()
    results = run(args)
    failed = [r.number for r in results if not r.passed]
    print(f"[done] {len(results) - len(failed)}/{len(results)} 通过")
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
