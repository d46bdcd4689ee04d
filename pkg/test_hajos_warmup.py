"""
测试脚本 - 单步反射 f_step、F_n 及 4^n 组合双射
"""
import sys
import os

# 添加项目路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pytest
from hypothesis import given, strategies as st

from lib import EnumerationOracle as oracle
from lib.HajosWarmup import (
    ANK_START,
    Advanced,
    AnkPath,
    AvoidPath,
    InB,
    MarkedTiePath,
    TiePath,
    avoid_path,
    big_f,
    big_f_inv,
    count_advances,
    f_step,
    f_step_inv,
    parse_ank,
    parse_marked_tie,
    soccer_forward,
    soccer_inverse,
    tie_path,
)
from lib.PathCore import ContractViolation, GridPoint, NEPath, PathParseError, parse_ne
from lib.TraceRecorder import TraceRecorder


def ank(n, k, steps):
    return AnkPath(n, k, NEPath(ANK_START, steps))


def tie(text):
    return tie_path(parse_ne(text))


tie_paths = st.integers(0, 10).flatmap(
    lambda n: st.permutations("E" * n + "N" * n).map(lambda cells: TiePath(n, NEPath(steps="".join(cells))))
)
free_paths = st.integers(0, 15).flatmap(
    lambda n: st.text(alphabet="EN", min_size=2 * n, max_size=2 * n).map(lambda s: NEPath(steps=s))
)


def test_f_step_examples():
    assert f_step(ank(1, 1, "N")) == Advanced(ank(1, 2, "E"))
    assert f_step(ank(4, 4, "ENNNNEE")) == Advanced(ank(4, 5, "NEENNEE"))


def test_f_step_keeps_paths_in_b():
    p = ank(4, 6, "EEENNEE")
    assert p.in_b
    assert f_step(p) == InB(p)
    top = ank(2, 4, "EEE")
    assert f_step(top) == InB(top)


def test_f_step_inv_examples():
    assert f_step_inv(ank(1, 2, "E")) == ank(1, 1, "N")
    assert f_step_inv(ank(4, 5, "NEENNEE")) == ank(4, 4, "ENNNNEE")


def test_f_step_inv_rejects_lowest_parameter():
    with pytest.raises(ContractViolation):
        f_step_inv(ank(1, 1, "N"))


@pytest.mark.parametrize("n", range(1, 6))
def test_f_step_inverse_on_advanced_branch(n):
    for k in range(n, 2 * n):
        for p in oracle.enumerate_ank(n, k):
            outcome = f_step(p)
            if isinstance(outcome, Advanced):
                assert outcome.path.k == k + 1
                assert f_step_inv(outcome.path) == p
            else:
                assert outcome.path is p


def test_ank_invariants():
    with pytest.raises(ContractViolation):
        AnkPath(1, 1, NEPath(GridPoint(0, 1), "E"))
    with pytest.raises(ContractViolation):
        ank(2, 5, "EEE")
    with pytest.raises(ContractViolation):
        ank(2, 3, "EE")


def test_big_f_examples():
    assert big_f(tie("EN")).path == parse_ne("EE")
    assert big_f(tie("NE")).path == parse_ne("NN")
    assert big_f(tie("EENNNNEE")).path == parse_ne("EEEENNEE")
    assert big_f(TiePath(0, NEPath())) == AvoidPath(0, NEPath())


def test_big_f_inv_examples():
    assert big_f_inv(avoid_path(parse_ne("EE"))) == tie("EN")
    assert big_f_inv(avoid_path(parse_ne("NN"))) == tie("NE")
    assert big_f_inv(avoid_path(parse_ne("EEEENNEE"))) == tie("EENNNNEE")


def test_avoid_path_rejects_diagonal_touch():
    with pytest.raises(ContractViolation):
        avoid_path(parse_ne("EN"))


def test_big_f_trace_of_eennnnee():
    trace = TraceRecorder()
    big_f(tie("EENNNNEE"), trace)
    steps = [e for e in trace.events if e.stage.startswith("f_step k=")]
    assert [e.stage for e in steps] == ["f_step k=4", "f_step k=5", "f_step k=6"]
    assert [e.after.split(" ", 1)[0] for e in steps] == ["Advanced", "Advanced", "InB"]
    assert trace.stages()[0] == "strip-first-step"
    assert trace.stages()[-1] == "prepend-east"
    assert count_advances(tie("EENNNNEE")) == 2


def test_north_start_is_conjugated():
    trace = TraceRecorder()
    image = big_f(tie("NNEEEENN"), trace)
    assert image.path == parse_ne("NNNNEENN")
    assert trace.stages()[0] == "reflect-start"
    assert trace.stages()[-1] == "reflect-back"


def test_soccer_examples():
    assert str(soccer_forward(parse_ne("EE"))) == "(0,0):EN@0"
    assert str(soccer_forward(parse_ne("NE"))) == "(0,0):NE@1"
    assert str(soccer_forward(NEPath())) == "(0,0):@0"
    assert soccer_inverse(parse_marked_tie("(0,0):EN@0")) == parse_ne("EE")
    assert soccer_inverse(parse_marked_tie("(0,0):NE@1")) == parse_ne("NE")


def test_soccer_forward_rejects_odd_length():
    with pytest.raises(ContractViolation):
        soccer_forward(parse_ne("E"))


def test_marked_tie_requires_visited_mark():
    MarkedTiePath(tie("ENEN"), 1)
    with pytest.raises(ContractViolation):
        MarkedTiePath(tie("EENN"), 1)
    with pytest.raises(ContractViolation):
        MarkedTiePath(tie("EN"), 2)


def test_parse_ank_and_marked_tie():
    assert parse_ank("n=1,k=2,(1,0):E") == ank(1, 2, "E")
    with pytest.raises(PathParseError):
        parse_ank("n=1;k=2,(1,0):E")
    with pytest.raises(PathParseError):
        parse_marked_tie("(0,0):EN")
    with pytest.raises(PathParseError):
        parse_marked_tie("(0,0):EN@x")
    with pytest.raises(PathParseError):
        parse_marked_tie("(0,0):EN@²")


@pytest.mark.parametrize("n", range(0, 6))
def test_big_f_round_trip_exhaustive(n):
    images = set()
    for p in oracle.enumerate_x(n):
        image = big_f(p)
        images.add(str(image))
        assert big_f_inv(image) == p
    assert len(images) == oracle.central_binomial(n)


@given(tie_paths)
def test_big_f_properties(p):
    image = big_f(p)
    offsets = image.path.diagonal_offsets[1:]
    if p.path.steps.startswith("E"):
        assert (offsets > 0).all()
    elif p.n:
        assert (offsets < 0).all()
    assert count_advances(p) <= p.n
    assert big_f_inv(image) == p


@given(free_paths)
def test_soccer_round_trip(p):
    marked = soccer_forward(p)
    assert marked.n == len(p) // 2
    assert soccer_inverse(marked) == p
