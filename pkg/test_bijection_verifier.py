"""
测试脚本 - 穷举双射验证、性质检验与报告导出
"""
import sys
import os

# 添加项目路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pandas as pd
import pytest

from lib import BijectionVerifier as verifier
from lib import EnumerationOracle as oracle
from lib.HajosWarmup import big_f, big_f_inv
from lib.HockeyBijection import g_inv, g_map
from lib.ReportExporter import ReportExporter


def test_g_n1_report():
    report = verifier.verify_bijection(
        oracle.enumerate_t(1), g_map, g_inv, oracle.enumerate_d(1), suite="hockey.g", n=1
    )
    assert (report.domain, report.codomain, report.image) == (6, 6, 6)
    assert report.round_trip_failures == 0
    assert report.passed


def test_big_f_n1_report():
    report = verifier.verify_bijection(oracle.enumerate_x(1), big_f, big_f_inv, oracle.enumerate_y(1))
    assert (report.domain, report.codomain, report.image) == (2, 2, 2)
    assert report.passed


def test_identity_map_is_reported_as_broken():
    report = verifier.verify_bijection(
        oracle.enumerate_t(1), lambda t: t, lambda m: m, oracle.enumerate_d(1), limit=3
    )
    assert not report.passed
    assert report.round_trip_failures > 0
    assert len(report.counterexamples) == 3
    assert report.counterexamples[0].direction == "forward"
    assert "status=FAIL" in report.to_text()


def test_report_text_block():
    report = verifier.run_suite("hockey.g", 1)
    lines = report.to_text().splitlines()
    assert lines[:2] == ["suite=hockey.g", "n=1"]
    assert "domain=6" in lines
    assert "round_trip_failures=0" in lines
    assert "counterexamples=[]" in lines
    assert lines[-1] == "status=PASS"


@pytest.mark.parametrize("name", ["hockey.r", "hockey.s", "hockey.t", "hockey.z", "hockey.g"])
@pytest.mark.parametrize("n", range(0, 6))
def test_hockey_suites(name, n):
    assert verifier.run_suite(name, n).passed


@pytest.mark.parametrize("n", range(1, 7))
def test_f_step_suites(n):
    for k in range(n, 2 * n + 1):
        report = verifier.run_suite("soccer.f_step", n, k)
        assert report.passed, report.to_text()
        assert report.domain == oracle.binomial(2 * n - 1, k - 1)


@pytest.mark.parametrize("n", range(0, 7))
def test_big_f_suite(n):
    report = verifier.run_suite("soccer.F", n)
    assert report.passed
    assert report.domain == report.codomain == oracle.central_binomial(n)


@pytest.mark.parametrize("n", range(0, 7))
def test_soccer_forward_suite(n):
    report = verifier.run_suite("soccer.forward", n)
    assert report.passed
    assert report.domain == 4 ** n


@pytest.mark.parametrize("n", range(0, 6))
def test_hockey_property_checks(n):
    for report in (
        verifier.check_hockey_counts(n),
        verifier.check_hockey_partition(n),
        verifier.check_hockey_class_images(n),
        verifier.check_hockey_conjugation(n),
    ):
        assert report.passed, report.to_text()


@pytest.mark.parametrize("n", range(0, 7))
def test_soccer_property_checks(n):
    bound = verifier.check_soccer_loop_bound(n)
    assert bound.passed
    assert int(bound.note.split("=")[1]) <= n
    assert verifier.check_soccer_symmetry(n).passed
    assert verifier.check_soccer_counts(n).passed


def test_identity_reports():
    reports = verifier.identity_reports(500)
    assert [r.suite for r in reports] == ["identities.soccer", "identities.hockey"]
    assert all(r.passed for r in reports)


def test_random_spot_checks():
    assert verifier.check_random_hockey(200, 50, seed=7).passed
    assert verifier.check_random_soccer(40, 50, seed=7).passed


def test_random_triple_has_requested_size():
    import numpy as np

    rng = np.random.default_rng(3)
    for _ in range(20):
        assert verifier.random_triple(rng, 12).n == 12


def test_parallel_report_matches_single():
    single = verifier.run_suite("hockey.g", 4)
    fanned = verifier.run_suite("hockey.g", 4, parallel=3)
    assert fanned.to_text() == single.to_text()


def test_four_workers_report_like_single():
    single = verifier.run_suite("soccer.forward", 3)
    fanned = verifier.run_suite("soccer.forward", 3, parallel=4)
    assert fanned.to_text() == single.to_text()


def test_export_csv_and_xlsx(tmp_path):
    reports = verifier.hockey_reports(2) + verifier.identity_reports(3)
    exporter = ReportExporter()
    frame = exporter.collect(reports)
    assert len(frame) == len(reports)
    assert frame["passed"].all()

    ok, msg = exporter.save_file(str(tmp_path / "reports.csv"))
    assert ok, msg
    loaded = pd.read_csv(tmp_path / "reports.csv", encoding="utf-8-sig")
    assert list(loaded["suite"]) == [r.suite for r in reports]

    ok, msg = exporter.save_file(str(tmp_path / "reports.xlsx"))
    assert ok, msg
    summary = pd.read_excel(tmp_path / "reports.xlsx", sheet_name="summary")
    assert "hockey.g" in set(summary["suite"])


def test_export_rejects_unknown_suffix(tmp_path):
    exporter = ReportExporter()
    exporter.collect(verifier.identity_reports(1))
    ok, msg = exporter.save_file(str(tmp_path / "reports.txt"))
    assert not ok
    assert ".txt" in msg


def test_export_falls_back_when_target_locked(tmp_path, monkeypatch):
    exporter = ReportExporter()
    exporter.collect(verifier.identity_reports(1))
    target = tmp_path / "reports.csv"
    original = ReportExporter._write

    def locked(self, path):
        if path == target:
            raise PermissionError("locked")
        original(self, path)

    monkeypatch.setattr(ReportExporter, "_write", locked)
    ok, msg = exporter.save_file(str(target))
    assert ok
    assert "_saved_" in exporter.last_save_path
    assert os.path.exists(exporter.last_save_path)
    assert not target.exists()


@pytest.mark.slow
def test_hockey_g_n8_exhaustive():
    report = verifier.run_suite("hockey.g", 8)
    assert report.passed
    assert report.domain == report.codomain == report.image == 218790


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7, 8])
def test_hockey_properties_large(n):
    for report in verifier.hockey_reports(n):
        assert report.passed, report.to_text()


@pytest.mark.slow
def test_soccer_forward_n7():
    report = verifier.run_suite("soccer.forward", 7)
    assert report.passed
    assert report.domain == 16384


@pytest.mark.slow
def test_large_instance_round_trip():
    report = verifier.check_random_hockey(100000, 1000, seed=20240601)
    assert report.passed
    assert report.checked == 1000
