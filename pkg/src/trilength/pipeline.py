"""End-to-end: graph -> Δ-tree -> face tree -> polynomials -> certified drawing."""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import EmbeddingError, Placement, certify_injective, embed_face_tree, tstar_portion
from .graph import Graph
from .outerplanar import DeltaTree, build_delta_tree, face_tree
from .realize import (
    DEFAULT_TOL,
    Drawing,
    TorusParams,
    VerificationError,
    VerifyReport,
    realize,
    sample_params,
    verify_drawing,
)

MAX_ATTEMPTS = 16


@dataclass(frozen=True)
class DrawResult:
    drawing: Drawing
    placement: Placement
    report: VerifyReport
    attempts: int


def place_graph(g: Graph) -> tuple[Placement, DeltaTree]:
    """Certified symbolic placement of an outerplanar graph (synthetic padding dropped)."""
    dt, _ = build_delta_tree(g)
    placement = embed_face_tree(face_tree(dt))
    cert = certify_injective(placement)
    if not cert:
        u, w = cert.collision
        raise EmbeddingError(f"vertices {u} and {w} received the same polynomial")
    return placement.restrict(range(g.n)), dt


def _draw(g: Graph, placement: Placement, params, seed, tol, extra_edges) -> DrawResult:
    if params is not None:
        d = realize(placement, params, g, extra_edges=extra_edges, tol=tol)
        return DrawResult(d, placement, verify_drawing(d, params, tol), 1)
    for k in range(MAX_ATTEMPTS):
        t = sample_params(seed + k)
        d = realize(placement, t, g, extra_edges=extra_edges, tol=tol)
        report = verify_drawing(d, t, tol)
        if not report.near_coincident:
            return DrawResult(d, placement, report, k + 1)
    raise VerificationError(
        f"{MAX_ATTEMPTS} sampled parameter pairs all gave near-coincident vertices"
    )


def draw_graph(
    g: Graph,
    params: TorusParams | None = None,
    *,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    show_added: bool = False,
) -> DrawResult:
    """Draw ``g`` with at most three edge lengths.

    With explicit ``params`` the drawing is made once. Otherwise parameters
    come from ``sample_params(seed)``, moving to ``seed + 1`` and so on while
    two vertices land within ``1e-12 * diameter`` of each other.
    """
    placement, dt = place_graph(g)
    extra = [e for e in dt.added_edges if max(e) < g.n] if show_added else ()
    return _draw(g, placement, params, seed, tol, extra)


def draw_tstar(
    depth: int,
    params: TorusParams | None = None,
    *,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> DrawResult:
    g, placement = tstar_portion(depth)
    cert = certify_injective(placement)
    if not cert:
        raise EmbeddingError(f"T* portion collision at {cert.collision}")
    return _draw(g, placement, params, seed, tol, ())
