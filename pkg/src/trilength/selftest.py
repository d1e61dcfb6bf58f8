"""Named property checks run by ``trilength selftest``.

Each check returns ``None`` on success or a short failure description.
"""

from __future__ import annotations

import time
from typing import Callable, Iterator

from .bipoly import BiPoly
from .embedding import (
    certify_injective,
    corner_poly,
    edge_class,
    embed_face_tree,
    psi_closed_form,
    state_at,
    tstar_portion,
)
from .hstar import F, L, Corner, CornerRef, QREncoding, proper_encoding, qr_decode, qr_encode, ty, ty_sequence
from .oracle import GenSpec, all_graphs, enumerate_addresses, has_k4_or_k23_minor, random_delta_tree, random_outerplanar
from .outerplanar import build_delta_tree, face_tree, is_outerplanar, pluck_check
from .pipeline import draw_graph
from .realize import emit_json, parse_drawing_json
from .rng import SplitMix64

Check = Callable[[], "str | None"]


def _poly(triples) -> BiPoly:
    return BiPoly.from_triples(triples)


def check_figure_encodings() -> str | None:
    got = (qr_encode((L, F, L, L)), qr_encode((L, F, F)))
    want = (QREncoding((0, 1, 0, 0), (0, 0, 0), 3), QREncoding((0, 2), (0,), 1))
    return None if got == want else f"got {got[0]} and {got[1]}"


def check_root_chain() -> str | None:
    x0 = _poly([[1, 0, 1]])
    root = state_at(()).corners()
    if list(root) != [BiPoly(), BiPoly.constant(1), x0, x0 + 1]:
        return f"root rhombus is {[str(p) for p in root]}"
    fwd = state_at((F,)).corners()
    if (fwd[2], fwd[3]) != (_poly([[1, 0, 2]]), _poly([[0, 0, 1], [1, 0, 2]])):
        return "F child corners differ from 2x0, 2x0+1"
    fl = state_at((F, L))
    z = fl.corners()
    if fl.ty != 1 or z[2] != _poly([[1, 0, 1], [1, 1, 1]]) or z[3] != _poly([[1, 0, 2], [1, 1, 1]]):
        return "F,L node should be an x1 rhombus with corners x0+x0x1, 2x0+x0x1"
    if state_at((F, L, F)).corners()[3] != _poly([[1, 0, 2], [1, 1, 2]]):
        return "F,L,F v3 should be 2x0+2x0x1"
    return None


def check_qr_roundtrip(depth: int) -> str | None:
    for a in enumerate_addresses(depth):
        if qr_decode(qr_encode(a)) != a:
            return f"round trip fails at {a}"
    return None


def check_ty_recurrence(depth: int) -> str | None:
    for a in enumerate_addresses(depth):
        e = qr_encode(a)
        if ty(a) != ty_sequence(e)[-1]:
            return f"run-counter ty differs from recurrence at {a}"
    return None


def check_closed_form(depth: int) -> str | None:
    for a in enumerate_addresses(depth):
        if psi_closed_form(qr_encode(a)) != state_at(a).z0:
            return f"closed form differs from recursion at {a}"
    return None


def check_proper_encodings(depth: int) -> str | None:
    for a in enumerate_addresses(depth):
        for k in Corner:
            c = CornerRef(a, k)
            e = proper_encoding(c)
            if psi_closed_form(e) != corner_poly(c):
                return f"proper encoding of {a}/{k.name} evaluates wrongly"
    return None


def check_tstar_injective(depth: int) -> str | None:
    g, p = tstar_portion(depth)
    cert = certify_injective(p)
    if not cert:
        return f"collision {cert.collision}"
    for u, v in g.edges:
        if edge_class(p.positions[u], p.positions[v]) is None:
            return f"edge {u}-{v} has no three-length shape"
    return None


def check_oracle_agreement(max_n: int) -> str | None:
    for n in range(max_n + 1):
        for g in all_graphs(n):
            if bool(is_outerplanar(g)) == has_k4_or_k23_minor(g):
                return f"recogniser and minor oracle disagree on n={n} edges={sorted(g.edges)}"
    return None


def check_delta_trees(samples: int) -> str | None:
    rng = SplitMix64(7)
    for i in range(samples):
        dt = random_delta_tree(3 + rng.below(120), rng.next_u64())
        if not pluck_check(dt.graph):
            return f"random Δ-tree {i} fails the pluck test"
        p = embed_face_tree(face_tree(dt))
        if not certify_injective(p):
            return f"random Δ-tree {i} embeds non-injectively"
        for u, v in dt.graph.edges:
            if edge_class(p.positions[u], p.positions[v]) is None:
                return f"random Δ-tree {i}: edge {u}-{v} has no three-length shape"
    return None


def check_end_to_end(samples: int) -> str | None:
    rng = SplitMix64(11)
    for i in range(samples):
        g = random_outerplanar(GenSpec(rng.below(80), rng.random(), rng.next_u64()))
        dt, orig = build_delta_tree(g)
        if not pluck_check(dt.graph) or not orig <= dt.graph.edges:
            return f"sample {i}: bad Δ-tree"
        res = draw_graph(g, seed=i)
        if not res.report.passed or res.report.distinct_lengths > 3:
            return f"sample {i}: {res.report.summary()}"
        d2, p2 = parse_drawing_json(emit_json(res.drawing, res.placement))
        if d2 != res.drawing or p2.positions != res.placement.positions:
            return f"sample {i}: JSON round trip changed the drawing"
    return None


def checks(max_n: int = 6, depth: int = 8, samples: int = 40) -> Iterator[tuple[str, Check]]:
    yield "figure-encodings", check_figure_encodings
    yield "root-rhombus-chain", check_root_chain
    yield "qr-roundtrip", lambda: check_qr_roundtrip(depth + 1)
    yield "ty-recurrence", lambda: check_ty_recurrence(depth + 1)
    yield "closed-form-vs-recursive", lambda: check_closed_form(depth)
    yield "proper-encodings", lambda: check_proper_encodings(max(depth - 1, 0))
    yield "tstar-injective", lambda: check_tstar_injective(depth)
    yield "oracle-agreement", lambda: check_oracle_agreement(max_n)
    yield "random-delta-trees", lambda: check_delta_trees(samples)
    yield "end-to-end", lambda: check_end_to_end(samples)


def run(max_n: int = 6, depth: int = 8, samples: int = 40, out=print) -> bool:
    ok = True
    for name, fn in checks(max_n, depth, samples):
        start = time.perf_counter()
        try:
            problem = fn()
        except Exception as exc:  # a crash is a failed property, not a selftest crash
            problem = f"{type(exc).__name__}: {exc}"
        took = time.perf_counter() - start
        if problem is None:
            out(f"PASS {name} ({took:.2f}s)")
        else:
            ok = False
            out(f"FAIL {name}: {problem}")
    return ok

