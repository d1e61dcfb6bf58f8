"""Outerplanarity recognition, biconnected augmentation and Δ-tree construction.

Everything here is driven by one primitive, :func:`_ear_reduce`: repeatedly
remove the smallest degree-2 vertex ``v`` (neighbours ``u``, ``w``), insert the
chord ``uw`` if it is missing, and charge one ear to ``uw``. In a maximal
outerplanar graph an edge borders at most two triangles, and an edge that
survives a removal will border one more triangle later, so an edge may carry
at most one ear. Without that counter the reduction would happily accept
K_{2,3}.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import Edge, Graph, blocks, canonical_edge, is_biconnected


class NotOuterplanarError(ValueError):
    pass


class AugmentationError(RuntimeError):
    """No admissible edge was found; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class _Reduction:
    ok: bool
    reason: str = ""
    faces: list[tuple[int, int, int]] = field(default_factory=list)
    added: list[Edge] = field(default_factory=list)


def _ear_reduce(adj: dict[int, set[int]], allow_add: bool) -> _Reduction:
    """Reduce a graph (given as a mutable adjacency dict) to a single triangle.

    ``adj`` is consumed. With ``allow_add`` false this is the pluck test; with
    it true, it recognises and triangulates a biconnected outerplanar graph.
    """
    if len(adj) < 3:
        return _Reduction(False, "fewer than three vertices")
    ears: dict[Edge, int] = {}
    faces: list[tuple[int, int, int]] = []
    added: list[Edge] = []
    heap = [v for v, nb in adj.items() if len(nb) == 2]
    heapq.heapify(heap)

    while len(adj) > 3:
        v = None
        while heap:
            c = heapq.heappop(heap)
            if c in adj and len(adj[c]) == 2:
                v = c
                break
        if v is None:
            return _Reduction(False, "no removable degree-2 vertex remains", faces, added)
        u, w = sorted(adj[v])
        e = (u, w)
        if w not in adj[u]:
            if not allow_add:
                return _Reduction(False, f"neighbours {u} and {w} of degree-2 vertex {v} are not adjacent", faces, added)
            adj[u].add(w)
            adj[w].add(u)
            added.append(e)
        ears[e] = ears.get(e, 0) + 1
        if ears[e] > 1:
            return _Reduction(False, f"edge {u}-{w} would border three triangles", faces, added)
        faces.append(tuple(sorted((u, v, w))))
        adj[u].discard(v)
        adj[w].discard(v)
        del adj[v]
        for x in (u, w):
            d = len(adj[x])
            if d < 2:
                return _Reduction(False, f"vertex {x} became a leaf; graph is not biconnected", faces, added)
            if d == 2:
                heapq.heappush(heap, x)

    a, b, c = sorted(adj)
    missing = [e for e in ((a, b), (a, c), (b, c)) if e[1] not in adj[e[0]]]
    if missing:
        return _Reduction(False, "final three vertices do not form a triangle", faces, added)
    faces.append((a, b, c))
    return _Reduction(True, "", faces, added)


def _adjacency_dict(g: Graph, vertices=None) -> dict[int, set[int]]:
    keep = range(g.n) if vertices is None else vertices
    keep_set = set(keep)
    return {v: {w for w in g.adjacency[v] if w in keep_set} for v in keep}


def _check_block(g: Graph, verts: tuple[int, ...], nedges: int) -> Verdict:
    k = len(verts)
    if k <= 2:
        return Verdict(True)
    if nedges > 2 * k - 3:
        return Verdict(False, f"block {list(verts)} has {nedges} edges > 2n-3 = {2 * k - 3}")
    red = _ear_reduce(_adjacency_dict(g, verts), allow_add=True)
    if not red.ok:
        return Verdict(False, f"block {list(verts)}: {red.reason}")
    return Verdict(True)


def is_outerplanar(g: Graph) -> Verdict:
    """Decide outerplanarity block by block."""
    if g.n >= 2 and len(g.edges) > 2 * g.n - 3:
        return Verdict(False, f"{len(g.edges)} edges > 2n-3 = {2 * g.n - 3}")
    d = blocks(g)
    for verts, es in zip(d.blocks, d.block_edges):
        v = _check_block(g, verts, len(es))
        if not v:
            return v
    return Verdict(True)


def pluck_check(g: Graph) -> bool:
    """True iff ``g`` is a Δ-tree (maximal outerplanar graph).

    Repeatedly plucks a degree-2 vertex whose neighbours are adjacent; the
    ear counter rejects edges shared by three triangles.
    """
    if g.n < 3 or len(g.edges) != 2 * g.n - 3:
        return False
    return _ear_reduce(_adjacency_dict(g), allow_add=False).ok


@dataclass(frozen=True)
class DeltaTree:
    """A maximal outerplanar graph with its triangles.

    ``faces`` are sorted vertex triples in sorted order; face ids index this
    list. ``synthetic`` names padding vertices that are not part of the input.
    """

    graph: Graph
    faces: tuple[tuple[int, int, int], ...]
    face_adjacency: tuple[tuple[int, int], ...]
    boundary: tuple[int, ...]
    added_edges: frozenset[Edge]
    synthetic: frozenset[int] = frozenset()


def _delta_tree(g: Graph, faces, added_edges, synthetic=frozenset()) -> DeltaTree:
    faces = tuple(sorted(tuple(sorted(f)) for f in faces))
    by_edge: dict[Edge, list[int]] = {}
    for i, (a, b, c) in enumerate(faces):
        for e in ((a, b), (a, c), (b, c)):
            by_edge.setdefault(e, []).append(i)
    adjacency = tuple(sorted(tuple(fs) for fs in by_edge.values() if len(fs) == 2))
    outer: dict[int, list[int]] = {}
    for (u, v), fs in by_edge.items():
        if len(fs) == 1:
            outer.setdefault(u, []).append(v)
            outer.setdefault(v, []).append(u)
    boundary: list[int] = []
    if outer:
        start = min(outer)
        prev, cur = start, min(outer[start])
        boundary.append(start)
        while cur != start:
            boundary.append(cur)
            a, b = outer[cur]
            prev, cur = cur, (b if a == prev else a)
    return DeltaTree(g, faces, adjacency, tuple(boundary), frozenset(added_edges), frozenset(synthetic))


def triangulate_block(g: Graph) -> DeltaTree:
    """Triangulate a biconnected outerplanar graph into a Δ-tree."""
    if not is_biconnected(g):
        raise NotOuterplanarError("triangulate_block needs a biconnected graph with n >= 3")
    if len(g.edges) > 2 * g.n - 3:
        raise NotOuterplanarError(f"{len(g.edges)} edges > 2n-3")
    red = _ear_reduce(_adjacency_dict(g), allow_add=True)
    if not red.ok:
        raise NotOuterplanarError(red.reason)
    return _delta_tree(g.with_edges(red.added), red.faces, red.added)


def _outer_cycle(g: Graph, verts: tuple[int, ...]) -> list[int]:
    """Hamiltonian outer cycle of one block (a bridge gives a 2-cycle)."""
    if len(verts) == 2:
        return list(verts)
    sub, order = g.induced(verts)
    dt = triangulate_block(sub)
    return [order[v] for v in dt.boundary]


def _merge_cycles(cyc_a: list[int], cyc_b: list[int], c: int) -> tuple[list[int], Edge]:
    """Glue two outer cycles that share only ``c``.

    With ``x`` a cycle-neighbour of ``c`` in ``a`` and ``y`` one in ``b``, the
    chord ``xy`` closes the walk ``c .. x y .. c`` into one cycle; the old
    edges ``cx`` and ``cy`` become chords fanning from ``c``, so no crossing
    is introduced.
    """
    def rotated(cyc: list[int]) -> list[int]:
        i = cyc.index(c)
        return cyc[i:] + cyc[:i]

    ra, rb = rotated(cyc_a), rotated(cyc_b)
    # ra = [c, a1, ..., ak]; pick x = min(a1, ak) and put it last.
    x_first, x_last = ra[1], ra[-1]
    if x_first < x_last:
        ra = [c] + ra[1:][::-1]
    x = ra[-1]
    y_first, y_last = rb[1], rb[-1]
    if y_last < y_first:
        rb = [c] + rb[1:][::-1]
    y = rb[1]
    return ra + rb[1:], canonical_edge(x, y)


def augment_biconnected(g: Graph) -> Graph:
    """Add edges until ``g`` is biconnected, keeping it outerplanar.

    Components are first chained through their smallest vertices. Then, at
    each cut vertex in ascending order, the incident blocks are merged pairwise
    by a chord between cycle-neighbours of the cut vertex. The result is
    re-validated with the recogniser.
    """
    if g.n < 3:
        raise AugmentationError("augmentation needs n >= 3")
    comps = g.components()
    extra: list[Edge] = [canonical_edge(a[0], b[0]) for a, b in zip(comps, comps[1:])]
    h = g.with_edges(extra)

    d = blocks(h)
    cycles: list[list[int]] = [_outer_cycle(h, verts) for verts in d.blocks]
    parent = list(range(len(cycles)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    incident: dict[int, list[int]] = {}
    for bi, v in d.block_cut_tree:
        incident.setdefault(v, []).append(bi)

    for c in sorted(d.cut_vertices):
        groups: list[int] = []
        for bi in incident[c]:
            r = find(bi)
            if r not in groups:
                groups.append(r)
        head = groups[0]
        for other in groups[1:]:
            merged, chord = _merge_cycles(cycles[head], cycles[other], c)
            extra.append(chord)
            parent[other] = head
            cycles[head] = merged
            cycles[other] = []

    out = g.with_edges(extra)
    if not is_biconnected(out):
        raise AugmentationError("augmented graph is not biconnected")
    verdict = is_outerplanar(out)
    if not verdict:
        raise AugmentationError(f"augmentation broke outerplanarity: {verdict.reason}")
    return out


def build_delta_tree(g: Graph) -> tuple[DeltaTree, frozenset[Edge]]:
    """Embed an outerplanar graph in a Δ-tree; returns it with the original edge set.

    Inputs with fewer than three vertices are padded with synthetic vertices
    ``n, n+1, ...`` up to a triangle; the padding is listed in ``synthetic``.
    """
    verdict = is_outerplanar(g)
    if not verdict:
        raise NotOuterplanarError(verdict.reason)
    synthetic = frozenset(range(g.n, 3))
    padded = Graph(max(g.n, 3), g.edges)
    if padded.n == 3:
        aug = padded.with_edges([(0, 1), (0, 2), (1, 2)])
    else:
        aug = augment_biconnected(padded)
    dt = triangulate_block(aug)
    added = dt.graph.edges - g.edges
    dt = DeltaTree(dt.graph, dt.faces, dt.face_adjacency, dt.boundary, frozenset(added), synthetic)
    return dt, g.edges


@dataclass(frozen=True)
class FaceTree:
    """Rooted face-adjacency tree of a Δ-tree.

    ``vertex_roles[f] = (a, b, c)``: ``ab`` is the edge shared with the parent
    face (for the root, ``a`` is the vertex off its child edge) and ``c`` is
    the apex. A child across ``ac`` takes roles ``(a, c, new)``, a child
    across ``bc`` takes ``(b, c, new)``.
    """

    root: int
    children: tuple[tuple[tuple[int, Edge], ...], ...]
    vertex_roles: tuple[tuple[int, int, int], ...]


def face_tree(dt: DeltaTree) -> FaceTree:
    nf = len(dt.faces)
    nbrs: list[list[int]] = [[] for _ in range(nf)]
    for i, j in dt.face_adjacency:
        nbrs[i].append(j)
        nbrs[j].append(i)
    root = min(i for i in range(nf) if len(nbrs[i]) <= 1)

    def shared(i: int, j: int) -> Edge:
        common = sorted(set(dt.faces[i]) & set(dt.faces[j]))
        return (common[0], common[1])

    roles: list[tuple[int, int, int] | None] = [None] * nf
    children: list[list[tuple[int, Edge]]] = [[] for _ in range(nf)]
    rf = dt.faces[root]
    if nbrs[root]:
        a, b = shared(root, nbrs[root][0])
        (off,) = set(rf) - {a, b}
        roles[root] = (off, a, b)
    else:
        roles[root] = rf

    stack = [root]
    visited = {root}
    while stack:
        f = stack.pop()
        a, b, c = roles[f]
        for g_ in sorted(nbrs[f]):
            if g_ in visited:
                continue
            visited.add(g_)
            e = shared(f, g_)
            (new,) = set(dt.faces[g_]) - set(e)
            if set(e) == {a, c}:
                roles[g_] = (a, c, new)
            elif set(e) == {b, c}:
                roles[g_] = (b, c, new)
            else:
                raise AssertionError(f"face {g_} hangs off the parent edge of face {f}")
            children[f].append((g_, e))
            stack.append(g_)
    return FaceTree(root, tuple(tuple(c) for c in children), tuple(roles))
