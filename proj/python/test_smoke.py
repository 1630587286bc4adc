"""Smoke tests for the python bindings."""

import json

import pytest

import ppbox


def test_counts():
    assert ppbox.count("pp", 2, 2, 2) == "20"
    assert ppbox.count("pp", 2, 2, 2, route="det") == "20"
    assert ppbox.count("pp", 2, 2, 2, route="oracle") == "20"
    assert ppbox.count("cspp", 3, 3, 3) == "20"
    assert ppbox.count("tcpp", 2, 2, 2) == "2"
    assert ppbox.count("cstcpp", 2, 2, 2, route="det") == "1"


def test_qcount():
    assert ppbox.qcount(1, 1, 1) == "1 + q"
    assert ppbox.qcount(1, 1, 2) == "1 + q + q^2"
    assert ppbox.qcount(2, 2, 2, route="det") == ppbox.qcount(2, 2, 2, route="oracle")


def test_routes_agree():
    assert ppbox.routes_agree("pp", 2, 2, 3)
    assert ppbox.routes_agree("cspp", 2, 2, 2)


def test_dims_validation():
    with pytest.raises(ValueError):
        ppbox.count("cspp", 2, 2, 3)
    with pytest.raises(ValueError):
        ppbox.count("nope", 1, 1, 1)


def test_matrix_json():
    blk = json.loads(ppbox.matrix_json("pp", 2, 2, 3))
    assert blk["factors"] == [3, 4, 4]
    assert len(blk["col_weights"]) == 16
    assert len(blk["entries"]) == 41


def test_graph_and_render():
    g = json.loads(ppbox.graph_json("pp", 1, 1, 2))
    assert len(g["ups"]) == 5 and len(g["downs"]) == 5
    svg = ppbox.render_svg(1, 1, 1, 0)
    assert svg.startswith("<svg") and svg.count("<polygon") == 3
    assert ppbox.render_svg(1, 1, 1, 0) == svg
