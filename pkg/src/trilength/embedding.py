"""Symbolic placement of vertices as polynomials in two unit complex numbers.

Each rhombus node is a translated, rotated copy of the unit rhombus with
corners ``0, 1, x, x + 1`` where ``x`` is ``x0`` or ``x1`` depending on the
node's parity bit. Vertex positions therefore live in Z[x0, x1], and every
edge is a unit monomial or a monomial times ``(x_b - 1)``, i.e. one of the
three lengths ``1, |x0 - 1|, |x1 - 1|`` once evaluated on the torus.

Two independent routes compute a node's base vertex: folding
:func:`rhombus_child` down the address, and :func:`psi_closed_form` on its
(q, rho, m) encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bipoly import ONE, BiPoly, Monomial
from .graph import Graph, canonical_edge
from .hstar import (
    Address,
    Corner,
    CornerRef,
    Label,
    QREncoding,
    creator,
    ty_sequence,
)
from .outerplanar import FaceTree

_STEP = (Monomial(1, 0), Monomial(0, 1))


class EmbeddingError(RuntimeError):
    pass


def _times(m: Monomial, bit: int) -> Monomial:
    return Monomial(m.e0 + 1, m.e1) if bit == 0 else Monomial(m.e0, m.e1 + 1)


@dataclass(frozen=True)
class RhombusState:
    """Positions of v0, v1 of one node, plus what its children need.

    ``direction`` caches the unit monomial ``z1 - z0``.
    """

    z0: BiPoly
    z1: BiPoly
    ty: int
    fwd_run: int
    direction: Monomial = field(default=ONE, compare=False)

    def corners(self) -> tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
        side = _times(self.direction, self.ty)
        z2 = self.z0 + BiPoly.monomial(side)
        z3 = self.z1 + BiPoly.monomial(side)
        return self.z0, self.z1, z2, z3


def rhombus_root() -> RhombusState:
    return RhombusState(BiPoly(), BiPoly.constant(1), 0, 0, ONE)


def _turn_parity(ty: int, fwd_run: int, right: bool) -> int:
    return ty ^ (fwd_run & 1) ^ int(right)


def rhombus_child(s: RhombusState, label: Label) -> RhombusState:
    z0, z1, z2, z3 = s.corners()
    side = _times(s.direction, s.ty)
    if label is Label.FWD:
        return RhombusState(z2, z3, s.ty, s.fwd_run + 1, s.direction)
    if label is Label.LEFT:
        return RhombusState(z0, z2, _turn_parity(s.ty, s.fwd_run, False), 0, side)
    return RhombusState(z1, z3, _turn_parity(s.ty, s.fwd_run, True), 0, side)


def state_at(a: Address) -> RhombusState:
    s = rhombus_root()
    for label in a:
        s = rhombus_child(s, label)
    return s


def corner_poly(c: CornerRef) -> BiPoly:
    return state_at(c.address).corners()[c.corner]


def psi_closed_form(e: QREncoding) -> BiPoly:
    """Base-vertex position of the node encoded by ``e``.

    ``sum_{i=0..m} (q_i + rho_{i+1}) P_i`` with ``q_0 = rho_{m+1} = 0`` and
    ``P_i = P_{i-1} * x_{nu_{i-1}}``. Trailing forwards add ``q_{m+1} P_{m+1}``;
    for proper encodings that term is zero.
    """
    if not isinstance(e, QREncoding):
        raise EmbeddingError(f"expected a QREncoding, got {type(e).__name__}")
    nu = ty_sequence(e)
    terms: dict[Monomial, int] = {}
    p = ONE
    for i in range(e.m + 1):
        if i > 0:
            p = _times(p, nu[i - 1])
        c = e.q_at(i) + e.rho_at(i + 1)
        if c:
            terms[p] = terms.get(p, 0) + c
    trailing = e.q_at(e.m + 1)
    if trailing:
        p = _times(p, nu[e.m])
        terms[p] = terms.get(p, 0) + trailing
    return BiPoly(terms)


@dataclass(frozen=True)
class Placement:
    """Vertex id -> polynomial position; ``corners`` records where each came from."""

    positions: dict[int, BiPoly]
    corners: dict[int, CornerRef] = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.positions)

    def restrict(self, keep) -> Placement:
        keep = set(keep)
        return Placement(
            {v: p for v, p in self.positions.items() if v in keep},
            {v: c for v, c in self.corners.items() if v in keep},
        )

    def to_json(self) -> dict[str, list[list[int]]]:
        return {str(v): self.positions[v].to_triples() for v in sorted(self.positions)}

    @classmethod
    def from_json(cls, doc: dict[str, list[list[int]]]) -> Placement:
        return cls({int(k): BiPoly.from_triples(v) for k, v in doc.items()})


def embed_face_tree(ft: FaceTree) -> Placement:
    """Walk the face tree in step with the tree of rhombus triangles.

    A node contributes two triangles: A = (v0, v1, v2) and B = (v1, v2, v3).
    From A, edge v0v2 leads to the A triangle of the LEFT child and v1v2 to B
    of the same node; from B, v1v3 leads to the RIGHT child and v2v3 to the
    FWD child. Face roles ``(a, b, c)`` line up with these corners.
    """
    positions: dict[int, BiPoly] = {}
    origin: dict[int, CornerRef] = {}

    def place(v: int, addr: Address, corner: Corner, poly: BiPoly) -> None:
        old = positions.get(v)
        if old is None:
            positions[v] = poly
            origin[v] = CornerRef(addr, corner)
        elif old != poly:
            raise EmbeddingError(
                f"vertex {v} re-encountered at {addr}/{corner.name} with {poly}, placed earlier at {old}"
            )

    stack: list[tuple[int, Address, RhombusState, bool]] = [(ft.root, (), rhombus_root(), True)]
    while stack:
        f, addr, state, is_a = stack.pop()
        a, b, c = ft.vertex_roles[f]
        z = state.corners()
        slots = (Corner.V0, Corner.V1, Corner.V2) if is_a else (Corner.V1, Corner.V2, Corner.V3)
        for v, k in zip((a, b, c), slots):
            place(v, addr, k, z[k])
        for child, edge in ft.children[f]:
            via_ac = set(edge) == {a, c}
            if is_a and via_ac:
                stack.append((child, addr + (Label.LEFT,), rhombus_child(state, Label.LEFT), True))
            elif is_a:
                stack.append((child, addr, state, False))
            else:
                label = Label.RIGHT if via_ac else Label.FWD
                stack.append((child, addr + (label,), rhombus_child(state, label), True))
    return Placement(positions, origin)


_RHOMBUS_EDGES = ((0, 1), (0, 2), (2, 3), (1, 3), (1, 2))


def tstar_portion(depth: int) -> tuple[Graph, Placement]:
    """All vertices and edges covered by nodes at address length <= ``depth``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    ids: dict[CornerRef, int] = {}
    positions: dict[int, BiPoly] = {}
    origin: dict[int, CornerRef] = {}
    edges: set[tuple[int, int]] = set()
    frontier: list[tuple[Address, RhombusState]] = [((), rhombus_root())]
    for level in range(depth + 1):
        nxt = []
        for addr, state in frontier:
            z = state.corners()
            local = []
            for k in Corner:
                home = creator(CornerRef(addr, k))
                vid = ids.get(home)
                if vid is None:
                    vid = ids[home] = len(ids)
                    positions[vid] = z[k]
                    origin[vid] = home
                local.append(vid)
            edges.update(canonical_edge(local[i], local[j]) for i, j in _RHOMBUS_EDGES)
            if level < depth:
                for label in (Label.FWD, Label.LEFT, Label.RIGHT):
                    nxt.append((addr + (label,), rhombus_child(state, label)))
        frontier = nxt
    return Graph(len(ids), frozenset(edges)), Placement(positions, origin)


def embed_tstar(depth: int) -> Placement:
    return tstar_portion(depth)[1]


@dataclass(frozen=True)
class Certificate:
    ok: bool
    collision: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def certify_injective(p: Placement) -> Certificate:
    """Exact check that no two vertices share a polynomial."""
    seen: dict[BiPoly, int] = {}
    for v in sorted(p.positions):
        poly = p.positions[v]
        if poly in seen:
            return Certificate(False, (seen[poly], v))
        seen[poly] = v
    return Certificate(True)


def edge_class(pu: BiPoly, pw: BiPoly) -> int | None:
    """Symbolic length class of an edge, or None if it has neither shape.

    0: ``±m`` (length 1); 1 or 2: ``±m (x_b - 1)`` (length ``|x_b - 1|``).
    """
    d = (pu - pw).terms
    if len(d) == 1:
        (c,) = d.values()
        return 0 if abs(c) == 1 else None
    if len(d) == 2:
        (m1, c1), (m2, c2) = sorted(d.items(), key=lambda t: t[0].degree)
        if abs(c1) != 1 or c1 != -c2:
            return None
        if m2 == Monomial(m1.e0 + 1, m1.e1):
            return 1
        if m2 == Monomial(m1.e0, m1.e1 + 1):
            return 2
    return None


def has_embedding_coefficient_shape(p: BiPoly) -> bool:
    """At most one term per total degree, every coefficient positive."""
    degs = [m.degree for m in p.terms]
    return len(degs) == len(set(degs)) and all(c > 0 for c in p.terms.values())
