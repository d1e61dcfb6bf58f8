import dataclasses
import json
import math
import re

import pytest

from trilength.embedding import Placement, psi_closed_form
from trilength.graph import Graph
from trilength.hstar import Corner, CornerRef, proper_encoding
from trilength.pipeline import draw_graph, draw_tstar, place_graph
from trilength.realize import (
    THETA_MARGIN,
    THETA_SEPARATION,
    Drawing,
    TorusParams,
    VerificationError,
    emit_json,
    emit_svg,
    parse_drawing_json,
    realize,
    sample_params,
    solve_params,
    verify_drawing,
)

from conftest import cycle


def test_sample_params_bounds():
    for seed in range(1000):
        t = sample_params(seed)
        for th in (t.theta0, t.theta1):
            assert THETA_MARGIN <= th <= 2 * math.pi - THETA_MARGIN
        assert abs(t.theta0 - t.theta1) >= THETA_SEPARATION
        assert t.scale == 1.0
    assert sample_params(5) == sample_params(5)


def test_torus_params_validation():
    with pytest.raises(ValueError):
        TorusParams(0.0, 1.0)
    with pytest.raises(ValueError):
        TorusParams(1.0, 2 * math.pi)
    with pytest.raises(ValueError):
        TorusParams(1.0, 2.0, 0.0)


@pytest.mark.parametrize("lengths", [(1, 0.8, 0.55), (0.55, 1, 0.8), (2, 2, 2), (3, 0.1, 5.9)])
def test_solve_params_recovers_lengths(lengths):
    t = solve_params(*lengths)
    assert sorted(t.class_lengths()) == pytest.approx(sorted(lengths), rel=1e-12)


def test_solve_params_rejects_impossible():
    with pytest.raises(ValueError):
        solve_params(1, 0, 0.5)
    with pytest.raises(ValueError):
        solve_params(1, math.inf, 0.5)


def test_triangle_at_right_angle():
    g = cycle(3)
    res = draw_graph(g, TorusParams(math.pi / 2, 1.0))
    pts = sorted((round(x, 12) + 0.0, round(y, 12) + 0.0) for x, y in res.drawing.points.values())
    assert pts == [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0)]
    assert res.report.passed


def test_scale_equivariance():
    g = cycle(7).with_edges([(0, 3), (3, 5)])
    t = TorusParams(1.1, 2.3, 1.0)
    a = draw_graph(g, t).drawing
    b = draw_graph(g, dataclasses.replace(t, scale=3.5)).drawing
    for v in range(g.n):
        assert b.points[v][0] == pytest.approx(3.5 * a.points[v][0], abs=1e-12)
        assert b.points[v][1] == pytest.approx(3.5 * a.points[v][1], abs=1e-12)
    assert [e.cls for e in a.edges] == [e.cls for e in b.edges]


def test_verify_flags_coincident_and_perturbed():
    g = cycle(5)
    res = draw_graph(g, seed=1)
    d = res.drawing
    moved = dict(d.points)
    x, y = moved[2]
    moved[2] = (x * 1.01, y * 1.01 + 0.01)
    bad = dataclasses.replace(d, points=moved)
    assert not verify_drawing(bad, d.params).passed
    same = dict(d.points)
    same[3] = same[4]
    report = verify_drawing(dataclasses.replace(d, points=same), d.params)
    assert not report.passed and report.min_distance == 0 and report.near_coincident


def test_realize_refuses_off_class_edges():
    g = Graph.from_edges([(0, 1)])
    p = Placement({0: psi_closed_form(proper_encoding(CornerRef((), Corner.V0))),
                   1: psi_closed_form(proper_encoding(CornerRef((), Corner.V3)))})
    with pytest.raises(VerificationError):
        realize(p, TorusParams(1.0, 2.0), g)


def test_svg_structure():
    res = draw_graph(cycle(3), TorusParams(1.0, 2.0))
    svg = emit_svg(res.drawing)
    assert svg.count("<circle") == 3 and svg.count("<line") == 3
    assert len(set(re.findall(r'stroke="(#[0-9a-f]{6})"', svg))) == 2
    assert emit_svg(res.drawing) == svg


def test_svg_of_empty_and_single_vertex():
    for n in (0, 1):
        svg = emit_svg(draw_graph(Graph(n)).drawing)
        assert svg.startswith("<?xml") and svg.count("<circle") == n and "<line" not in svg


def test_show_added_edges_are_dashed():
    g = cycle(6)
    res = draw_graph(g, seed=2, show_added=True)
    extra = [e for e in res.drawing.edges if not e.original]
    assert len(extra) == 3
    assert emit_svg(res.drawing).count("stroke-dasharray") == 3
    assert res.report.passed


def test_json_round_trip_and_schema():
    g = cycle(4).with_edges([(0, 2)])
    res = draw_graph(g, seed=4)
    text = emit_json(res.drawing, res.placement)
    doc = json.loads(text)
    assert set(doc) == {"params", "class_lengths", "vertices", "edges"}
    d2, p2 = parse_drawing_json(text)
    assert d2 == res.drawing
    assert p2.positions == res.placement.positions


def test_json_keeps_labels():
    from trilength.graph import parse_graph

    g = parse_graph("a b\nb c\nc a\n")
    res = draw_graph(g, seed=0)
    doc = json.loads(emit_json(res.drawing, res.placement))
    assert sorted(v["label"] for v in doc["vertices"]) == ["a", "b", "c"]
    assert parse_drawing_json(emit_json(res.drawing, res.placement))[0] == res.drawing


def test_root_v3_polynomial_in_json():
    res = draw_tstar(0, seed=0)
    doc = json.loads(emit_json(res.drawing, res.placement))
    polys = sorted(v["poly"] for v in doc["vertices"])
    assert [[0, 0, 1], [1, 0, 1]] in polys


def test_drawing_is_deterministic():
    g = cycle(9).with_edges([(0, 4), (4, 7)])
    a, b = draw_graph(g, seed=8), draw_graph(g, seed=8)
    assert emit_json(a.drawing, a.placement) == emit_json(b.drawing, b.placement)


def test_place_graph_drops_padding():
    p, dt = place_graph(Graph.from_edges([(0, 1)]))
    assert set(p.positions) == {0, 1} and dt.synthetic == {2}


def test_drawing_dataclass_is_frozen():
    d = draw_graph(cycle(3), seed=0).drawing
    assert isinstance(d, Drawing)
    with pytest.raises(dataclasses.FrozenInstanceError):
        d.params = None
