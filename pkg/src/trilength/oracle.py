"""Brute-force references and seeded generators for tests and the selftest.

Nothing in here is used by the drawing pipeline itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graph import Graph, canonical_edge
from .hstar import Address, Label
from .outerplanar import DeltaTree, _delta_tree
from .rng import SplitMix64

MAX_MINOR_N = 10
MAX_ENUM_DEPTH = 12


class OracleRefusal(ValueError):
    pass


def _has_k4_or_k23_subgraph(k: int, adj: tuple[int, ...]) -> bool:
    # adj[i] is a neighbour bitmask.
    for a, b in itertools.combinations(range(k), 2):
        common = adj[a] & adj[b]
        if bin(common).count("1") >= 3:
            return True
        if adj[a] >> b & 1:
            # K4 needs two more vertices adjacent to a, b and to each other.
            rest = common
            while rest:
                c = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if common & adj[c]:
                    return True
    return False


@lru_cache(maxsize=None)
def _minor_search(k: int, edges: frozenset[tuple[int, int]], prune: bool) -> bool:
    if k < 4:
        return False
    if prune and len(edges) > 2 * k - 3:
        return True
    adj = [0] * k
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if _has_k4_or_k23_subgraph(k, tuple(adj)):
        return True
    for u, v in edges:
        # contract v into u, then close the gap in the labels above v
        def relabel(x: int) -> int:
            x = u if x == v else x
            return x - 1 if x > v else x

        merged = frozenset(
            canonical_edge(relabel(a), relabel(b))
            for a, b in edges
            if relabel(a) != relabel(b)
        )
        if _minor_search(k - 1, merged, prune):
            return True
    return False


def has_k4_or_k23_minor(g: Graph, *, prune: bool = True) -> bool:
    """Exhaustive contraction search for a K4 or K_{2,3} minor.

    Every minor is a subgraph of some contraction, so it suffices to walk all
    contraction sequences and look for K4 or K_{2,3} as a subgraph. Results
    are memoised on the relabelled edge set. With ``prune`` a graph with more
    than ``2n-3`` edges is accepted immediately.
    """
    if g.n > MAX_MINOR_N:
        raise OracleRefusal(f"minor search is limited to n <= {MAX_MINOR_N}")
    # isolated vertices cannot take part in a 2-connected minor
    used = sorted({x for e in g.edges for x in e})
    index = {v: i for i, v in enumerate(used)}
    edges = frozenset(canonical_edge(index[u], index[v]) for u, v in g.edges)
    return _minor_search(len(used), edges, prune)


@dataclass(frozen=True)
class GenSpec:
    n: int
    keep_prob: float
    seed: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.keep_prob <= 1.0:
            raise ValueError("keep_prob must lie in [0, 1]")
        if self.n < 0:
            raise ValueError("n must be non-negative")


def random_delta_tree(n: int, seed: int | SplitMix64) -> DeltaTree:
    """Grow a Δ-tree from the triangle 0-1-2 (base edge 0-1).

    Each step picks a uniformly random external edge other than the base and
    attaches a new vertex to both of its ends.
    """
    if n < 3:
        raise ValueError("a Δ-tree has at least three vertices")
    rng = seed if isinstance(seed, SplitMix64) else SplitMix64(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    external = [(0, 2), (1, 2)]
    faces = [(0, 1, 2)]
    for v in range(3, n):
        i = rng.below(len(external))
        a, b = external[i]
        external[i] = (a, v)
        external.append((b, v))
        edges += [(a, v), (b, v)]
        faces.append(tuple(sorted((a, b, v))))
    return _delta_tree(Graph(n, frozenset(edges)), faces, ())


def random_outerplanar(spec: GenSpec) -> Graph:
    """A random Δ-tree with each edge kept independently with ``keep_prob``.

    Edges are visited in sorted order; for ``n < 3`` the complete graph on
    ``n`` vertices stands in for the Δ-tree.
    """
    rng = SplitMix64(spec.seed)
    if spec.n < 3:
        base = sorted(itertools.combinations(range(spec.n), 2))
    else:
        base = random_delta_tree(spec.n, rng).graph.sorted_edges()
    kept = [e for e in base if rng.random() < spec.keep_prob]
    return Graph(spec.n, frozenset(kept))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) using the shared generator."""
    rng = SplitMix64(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, frozenset(edges))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def enumerate_addresses(depth: int) -> Iterator[Address]:
    """All addresses of length <= ``depth`` in lexicographic order (F < L < R)."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if depth > MAX_ENUM_DEPTH:
        raise OracleRefusal(f"enumeration is limited to depth <= {MAX_ENUM_DEPTH}")
    letters = sorted(Label, key=lambda l: l.value)

    def walk(prefix: tuple[Label, ...]) -> Iterator[Address]:
        yield prefix
        if len(prefix) < depth:
            for l in letters:
                yield from walk(prefix + (l,))

    yield from walk(())
