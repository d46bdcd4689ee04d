"""
报告导出器 - 把验证报告汇总成表格，写出 csv 或 xlsx
基于pandas实现，xlsx 通过 openpyxl 引擎写出
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Iterable, Optional, Tuple

import pandas as pd


REPORT_COLUMNS = ["suite", "n", "k", "checked", "domain", "codomain", "image", "failures", "passed", "note"]


class ReportExporter:
    """验证报告导出器"""

    def __init__(self):
        self.df: Optional[pd.DataFrame] = None
        self.logger = logging.getLogger("ReportExporter")
        self.last_save_path: Optional[str] = None
        self.last_save_message: str = ""

    def _build_fallback_save_path(self, original_path: Path) -> Path:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        return original_path.with_name(f"{original_path.stem}_saved_{timestamp}{original_path.suffix}")

    def collect(self, reports: Iterable[Any]) -> pd.DataFrame:
        """每份报告一行；报告需提供 to_row()"""
        self.df = pd.DataFrame([report.to_row() for report in reports], columns=REPORT_COLUMNS)
        self.logger.info(f"已汇总 {len(self.df)} 份报告")
        return self.df

    def summary(self) -> pd.DataFrame:
        """按套件统计检查数与失败数"""
        if self.df is None or self.df.empty:
            return pd.DataFrame(columns=["suite", "checked", "failures", "passed"])
        return (
            self.df.groupby("suite", sort=False)
            .agg(checked=("checked", "sum"), failures=("failures", "sum"), passed=("passed", "all"))
            .reset_index()
        )

    def _write(self, path: Path) -> None:
        if path.suffix.lower() == ".csv":
            self.df.to_csv(path, index=False, encoding="utf-8-sig")
        else:
            with pd.ExcelWriter(path, engine="openpyxl") as writer:
                self.df.to_excel(writer, sheet_name="reports", index=False)
                self.summary().to_excel(writer, sheet_name="summary", index=False)

    def _finish(self, saved: Optional[Path], message: str, level: int) -> Tuple[bool, str]:
        self.last_save_path = None if saved is None else str(saved)
        self.last_save_message = message
        self.logger.log(level, message)
        return saved is not None, message

    def save_file(self, file_path: str) -> Tuple[bool, str]:
        """
        保存报告

        Args:
            file_path: .csv 或 .xlsx 路径

        Returns:
            (是否成功, 消息)
        """
        if self.df is None:
            return False, "没有报告可导出"

        path = Path(file_path)
        if path.suffix.lower() not in (".csv", ".xlsx"):
            return False, f"不支持的文件格式: {path.suffix}"

        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            self._write(path)
        except PermissionError:
            # 目标文件被其他程序占用时另存一份
            fallback = self._build_fallback_save_path(path)
            try:
                self._write(fallback)
            except Exception as e:
                return self._finish(None, f"导出失败(原文件占用且另存失败): {e}", logging.ERROR)
            return self._finish(fallback, f"原文件被占用，已另存为: {fallback}", logging.WARNING)
        except Exception as e:
            return self._finish(None, f"导出失败: {e}", logging.ERROR)
        return self._finish(path, f"已导出报告: {path}", logging.INFO)
