"""
测试脚本 - 轨迹事件重放与字符画
"""
import sys
import os

# 添加项目路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pytest

from lib import EnumerationOracle as oracle
from lib.HajosWarmup import big_f, big_f_inv, soccer_forward, soccer_inverse, tie_path
from lib.HockeyBijection import g_inv, g_map, parse_marked, parse_triple
from lib.PathCore import GridPoint, UDPath, parse_ne
from lib.TraceRecorder import Joined, TraceEvent, TraceRecorder, emit
from lib.TraceRenderer import render_ne, render_ud, render_value, replay_event


def traced(fn, value):
    trace = TraceRecorder()
    result = fn(value, trace)
    return trace, result


def assert_replayable(trace):
    for event in trace.events:
        assert replay_event(event) == event.after, event


def test_emit_without_recorder_is_noop():
    emit(None, "stage", 1, 2)
    trace = TraceRecorder()
    emit(trace, "stage", 1, 2)
    assert trace.events == [TraceEvent("stage", "1", "2")]
    assert len(trace) == 1


class Unprintable:
    def __str__(self):
        raise AssertionError("不应被序列化")


def test_joined_is_serialized_only_when_recorded():
    emit(None, "split", "UD", Joined(Unprintable(), Unprintable()))
    trace = TraceRecorder()
    emit(trace, "split", "UDDU", Joined("UD", "DU"))
    assert trace.events[-1].after == "UD + DU"


def test_g_trace_of_j_triple():
    trace, result = traced(g_map, parse_triple("|UD|DU"))
    assert str(result) == "UDDU@3"
    assert trace.stages() == ["classify", "dispatch", "z", "reflect", "split-at-K t=3", "s", "reflect"]
    assert trace.events[0].after == "J(below)"
    assert trace.events[1].after == "t∘z"
    assert_replayable(trace)


def test_g_trace_of_r_triple():
    trace, result = traced(g_map, parse_triple("UD||"))
    assert str(result) == "UD@2"
    assert trace.stages() == ["classify", "dispatch", "concatenate"]
    assert trace.events[0].after == "R"


def test_g_inv_trace_recovers_points():
    trace, result = traced(g_inv, parse_marked("UDDU@3"))
    assert str(result) == "|UD|DU"
    stages = trace.stages()
    assert stages[0] == "mark-height"
    assert "find-K" in stages and "find-Z" in stages
    assert stages[-2:] == ["rightmost-crossing", "z_inv"]
    assert_replayable(trace)


def test_f_trace_two_advances():
    trace, result = traced(big_f, tie_path(parse_ne("(0,0):EENNNNEE")))
    assert str(result) == "(0,0):EEEENNEE"
    stages = trace.stages()
    assert stages.count("reflect-prefix") == 2
    assert stages.count("translate v=(1,-1)") == 2
    assert_replayable(trace)


@pytest.mark.parametrize("n", range(0, 5))
def test_every_warmup_trace_replays(n):
    for p in oracle.enumerate_x(n):
        trace, image = traced(big_f, p)
        assert_replayable(trace)
        back_trace, _ = traced(big_f_inv, image)
        assert_replayable(back_trace)
    for p in oracle.enumerate_free(n):
        trace, marked = traced(soccer_forward, p)
        assert_replayable(trace)
        back_trace, _ = traced(soccer_inverse, marked)
        assert_replayable(back_trace)


@pytest.mark.parametrize("n", range(0, 5))
def test_every_hockey_trace_replays(n):
    for t in oracle.enumerate_t(n):
        trace, m = traced(g_map, t)
        assert_replayable(trace)
        back_trace, _ = traced(g_inv, m)
        assert_replayable(back_trace)


def test_replay_rejects_unknown_stage():
    with pytest.raises(ValueError):
        replay_event(TraceEvent("teleport", "UD", "DU"))


def test_render_ud_goldens():
    assert render_ud(UDPath("UD")) == "/\\\n--"
    assert render_ud(UDPath("DU")) == "--\n\\/"
    assert render_ud(UDPath("UUDD"), mark=3) == " /\\\n/  \\\n----\n   ^"
    assert render_ud(UDPath("UDDU")) == "/\\\n----\n  \\/"


def test_render_ne_goldens():
    assert render_ne(parse_ne("(0,0):EN")) == " o\n_|"
    assert render_ne(parse_ne("(0,0):EEEENNEE")) == "  . __o\n .  |\n____|"
    assert render_ne(parse_ne("(0,0):EN"), mark=GridPoint(1, 1)) == " *\n_|"


def test_render_value_dispatch():
    assert render_value("UDDU@3") == "/\\\n----\n  \\/\n   ^"
    assert render_value("(0,0):EN@1") == " *\n_|"
    assert render_value("InB n=1,k=2,(1,0):E") == "_o"
    assert render_value("UD||") == "/\\\n--\n\n\n\n"
    assert render_value("t=3") is None
