"""Numeric realisation of a symbolic placement, verification, SVG/JSON output."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .bipoly import poly_eval
from .embedding import Placement
from .graph import Graph, canonical_edge
from .rng import SplitMix64

THETA_MARGIN = 0.05
THETA_SEPARATION = 1e-3
DEFAULT_TOL = 1e-9
NEAR_COINCIDENCE = 1e-12
CLASS_COLORS = ("#1f77b4", "#d62728", "#2ca02c")


class VerificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class TorusParams:
    theta0: float
    theta1: float
    scale: float = 1.0

    def __post_init__(self) -> None:
        for name in ("theta0", "theta1"):
            t = getattr(self, name)
            if not 0.0 < t < 2 * math.pi:
                raise ValueError(f"{name}={t} must lie in (0, 2*pi)")
        if not self.scale > 0:
            raise ValueError("scale must be positive")

    def class_lengths(self) -> tuple[float, float, float]:
        # |exp(i t) - 1| = 2 |sin(t / 2)|
        s = self.scale
        return (
            s,
            s * 2 * abs(math.sin(self.theta0 / 2)),
            s * 2 * abs(math.sin(self.theta1 / 2)),
        )


def sample_params(seed: int) -> TorusParams:
    rng = SplitMix64(seed)
    lo, hi = THETA_MARGIN, 2 * math.pi - THETA_MARGIN
    t0 = rng.uniform(lo, hi)
    t1 = rng.uniform(lo, hi)
    while abs(t0 - t1) < THETA_SEPARATION:
        t1 = rng.uniform(lo, hi)
    return TorusParams(t0, t1, 1.0)


def solve_params(a: float, b: float, c: float) -> TorusParams:
    """Angles and scale whose three class lengths are ``{a, b, c}``.

    The longest length becomes the unit class (``scale``); the other two are
    chords ``2 s sin(theta / 2)`` of the scaled unit circle, in input order.
    """
    lengths = [a, b, c]
    if not all(x > 0 and math.isfinite(x) for x in lengths):
        raise ValueError("lengths must be positive and finite")
    s = max(lengths)
    rest = list(lengths)
    rest.remove(s)
    t0, t1 = (2 * math.asin(x / (2 * s)) for x in rest)
    return TorusParams(t0, t1, s)


@dataclass(frozen=True)
class DrawnEdge:
    u: int
    v: int
    cls: int
    original: bool = True


@dataclass(frozen=True)
class Drawing:
    params: TorusParams
    points: dict[int, tuple[float, float]]
    edges: tuple[DrawnEdge, ...]
    class_lengths: tuple[float, float, float]
    labels: dict[int, str] | None = None

    def edge_length(self, e: DrawnEdge) -> float:
        (x1, y1), (x2, y2) = self.points[e.u], self.points[e.v]
        return math.hypot(x1 - x2, y1 - y2)


def _nearest_class(length: float, classes) -> tuple[int, float]:
    devs = [abs(length - c) / c for c in classes]
    best = min(range(3), key=lambda i: (devs[i], i))
    return best, devs[best]


def realize(
    p: Placement,
    t: TorusParams,
    g: Graph,
    *,
    extra_edges=(),
    tol: float = DEFAULT_TOL,
) -> Drawing:
    """Evaluate ``scale * psi(v)`` at ``(theta0, theta1)`` for every vertex of ``g``.

    ``g``'s edges are listed as original; ``extra_edges`` (e.g. augmentation
    chords) are listed with ``original=False``.
    """
    missing = [v for v in range(g.n) if v not in p.positions]
    if missing:
        raise ValueError(f"placement lacks vertices {missing[:5]}")
    points = {}
    for v in range(g.n):
        z = t.scale * poly_eval(p.positions[v], t.theta0, t.theta1)
        points[v] = (z.real, z.imag)
    classes = t.class_lengths()
    edges = []
    listed = [(e, True) for e in g.sorted_edges()]
    listed += [(canonical_edge(*e), False) for e in sorted(extra_edges) if canonical_edge(*e) not in g.edges]
    for (u, v), original in listed:
        (x1, y1), (x2, y2) = points[u], points[v]
        cls, dev = _nearest_class(math.hypot(x1 - x2, y1 - y2), classes)
        if dev > tol:
            raise VerificationError(
                f"edge {u}-{v} deviates {dev:.3g} from the nearest class length"
            )
        edges.append(DrawnEdge(u, v, cls, original))
    labels = dict(enumerate(g.labels)) if g.labels is not None else None
    return Drawing(t, points, tuple(edges), classes, labels)


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    max_deviation: float
    min_distance: float
    diameter: float
    distinct_lengths: int
    near_coincident: bool

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}: max relative deviation {self.max_deviation:.3g}, "
            f"min vertex distance {self.min_distance:.6g}, "
            f"{self.distinct_lengths} distinct edge length(s)"
        )


def _spread(d: Drawing) -> tuple[float, float]:
    if len(d.points) < 2:
        return math.inf, 0.0
    xy = np.array([d.points[v] for v in sorted(d.points)])
    dist, _ = cKDTree(xy).query(xy, k=2)
    lo, hi = xy.min(axis=0), xy.max(axis=0)
    return float(dist[:, 1].min()), float(np.hypot(*(hi - lo)))


def verify_drawing(d: Drawing, t: TorusParams, tol: float = DEFAULT_TOL) -> VerifyReport:
    """Recheck every edge against class lengths recomputed from ``t``.

    Only vertex distinctness and edge lengths are checked; edges passing
    through other vertices are allowed.
    """
    classes = t.class_lengths()
    worst = 0.0
    used = set()
    for e in d.edges:
        dev = abs(d.edge_length(e) - classes[e.cls]) / classes[e.cls]
        worst = max(worst, dev)
        used.add(e.cls)
    distinct: list[float] = []
    for c in sorted(classes[i] for i in used):
        if not distinct or abs(c - distinct[-1]) > tol * c:
            distinct.append(c)
    min_dist, diameter = _spread(d)
    near = min_dist < NEAR_COINCIDENCE * diameter
    return VerifyReport(
        passed=worst <= tol and min_dist > 0,
        max_deviation=worst,
        min_distance=min_dist,
        diameter=diameter,
        distinct_lengths=len(distinct),
        near_coincident=near,
    )


def _fmt(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def emit_svg(d: Drawing) -> str:
    """Vertices as circles, edges as lines coloured by length class (y axis up)."""
    pts = {v: (x, -y) for v, (x, y) in d.points.items()}
    if pts:
        xs = [x for x, _ in pts.values()]
        ys = [y for _, y in pts.values()]
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        size = max(w, h, min(d.class_lengths) if d.edges else 0.0, 1e-9)
        margin = 0.05 * size
        x0, y0 = min(xs) - margin, min(ys) - margin
        vw, vh = w + 2 * margin, h + 2 * margin
        if w == 0:
            x0, vw = x0 - size / 2, vw + size
        if h == 0:
            y0, vh = y0 - size / 2, vh + size
    else:
        size, x0, y0, vw, vh = 1.0, 0.0, 0.0, 1.0, 1.0
    r = size / 150
    stroke = size / 400
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(vw)} {_fmt(vh)}">',
        f'<g stroke-width="{_fmt(stroke)}" stroke-linecap="round">',
    ]
    for e in d.edges:
        (ax, ay), (bx, by) = pts[e.u], pts[e.v]
        dash = "" if e.original else ' stroke-dasharray="2 2"'
        out.append(
            f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
            f'stroke="{CLASS_COLORS[e.cls]}"{dash}/>'
        )
    out.append("</g>")
    out.append('<g fill="#000">')
    for v in sorted(pts):
        x, y = pts[v]
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}"><title>{v}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_json(d: Drawing, p: Placement) -> str:
    vertices = []
    for v in sorted(d.points):
        x, y = d.points[v]
        entry = {"id": v, "x": x, "y": y, "poly": p.positions[v].to_triples()}
        if d.labels is not None:
            entry["label"] = d.labels[v]
        vertices.append(entry)
    doc = {
        "params": {"theta0": d.params.theta0, "theta1": d.params.theta1, "scale": d.params.scale},
        "class_lengths": list(d.class_lengths),
        "vertices": vertices,
        "edges": [{"u": e.u, "v": e.v, "class": e.cls, "original": e.original} for e in d.edges],
    }
    return json.dumps(doc, indent=1) + "\n"


def parse_drawing_json(text: str) -> tuple[Drawing, Placement]:
    from .bipoly import BiPoly

    doc = json.loads(text)
    pr = doc["params"]
    params = TorusParams(pr["theta0"], pr["theta1"], pr["scale"])
    cl = doc["class_lengths"]
    if len(cl) != 3:
        raise ValueError("class_lengths must have three entries")
    points, polys, labels = {}, {}, {}
    for entry in doc["vertices"]:
        v = entry["id"]
        points[v] = (entry["x"], entry["y"])
        polys[v] = BiPoly.from_triples(entry["poly"])
        if "label" in entry:
            labels[v] = entry["label"]
    edges = tuple(DrawnEdge(e["u"], e["v"], e["class"], e["original"]) for e in doc["edges"])
    drawing = Drawing(params, points, edges, tuple(cl), labels or None)
    return drawing, Placement(polys)
