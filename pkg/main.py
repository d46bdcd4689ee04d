import argparse
import logging
import sys
from datetime import datetime
from typing import Optional, Sequence

from lib.CliHandler import BIJECTIONS, ENUMERATORS, SUITES, CliHandler

EXIT_UNEXPECTED = 4


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--bijection", required=True, choices=list(BIJECTIONS), help="要调用的双射")
    parser.add_argument("--input", required=True, help="输入值；'-' 表示从标准输入逐行读取")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="格路径双射: 计算、逆映射、轨迹与穷举验证")
    parser.add_argument("--config", default=None, help="配置文件路径，默认 config/settings.json")
    parser.add_argument("--verbose", action="store_true", help="输出DEBUG日志")
    sub = parser.add_subparsers(dest="command", required=True)

    apply = sub.add_parser("apply", help="对输入施加一个双射")
    _add_input_flags(apply)
    apply.add_argument("--format", choices=["text", "json"], default=None)

    trace = sub.add_parser("trace", help="逐阶段输出双射的计算过程")
    _add_input_flags(trace)
    trace.add_argument("--render", choices=["none", "ascii"], default=None)
    trace.add_argument("--format", choices=["text", "json"], default=None)

    verify = sub.add_parser("verify", help="运行穷举验证套件")
    verify.add_argument("--suite", choices=list(SUITES), default="all")
    verify.add_argument("--n-max", dest="n_max", type=int, default=None)
    verify.add_argument("--parallel", type=int, default=None, help="工作进程数")
    verify.add_argument("--export", default=None, help="把报告导出为 .csv 或 .xlsx")
    verify.add_argument("--seed", type=int, default=None, help="random 套件的随机种子")

    enumerate_ = sub.add_parser("enumerate", help="按字典序列出一个集合的全部元素")
    enumerate_.add_argument("--set", required=True, choices=list(ENUMERATORS))
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--k", type=int, default=None)
    enumerate_.add_argument("--format", choices=["text", "jsonl"], default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = CliHandler.from_config(args.config)

    level = "DEBUG" if args.verbose else str(handler.settings.get("log_level", "WARNING")).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )

    commands = {
        "apply": handler.cmd_apply,
        "trace": handler.cmd_trace,
        "verify": handler.cmd_verify,
        "enumerate": handler.cmd_enumerate,
    }
    try:
        return commands[args.command](args)
    except Exception as e:
        with open(handler.settings.get("errorlog", "errorlog.txt"), "a", encoding="utf-8") as f:
            err_str = f"{datetime.now()}: {e.args}\n"
            f.write(err_str)

        print(e, file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
