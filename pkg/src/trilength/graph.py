"""Simple undirected graphs, the edge-list file format, and block decomposition."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]

_INT_RE = re.compile(r"[+-]?\d+")
_HEADER_RE = re.compile(r"n\s*=\s*(\S+)")


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Vertices are ``0..n-1``; ``edges`` holds each pair once as ``(lo, hi)``.

    ``labels`` is set only when the graph was read from a file with string
    vertex names; ``labels[i]`` is the external name of vertex ``i``.
    """

    n: int
    edges: frozenset[Edge] = frozenset()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("negative vertex count")
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e} is not canonical or out of range for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must name every vertex")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        """Build a graph from raw pairs, rejecting loops and duplicates."""
        seen: set[Edge] = set()
        top = -1
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            e = canonical_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            top = max(top, e[1])
        if n is None:
            n = top + 1
        return cls(n, frozenset(seen))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_edges(self, extra: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        """Return a supergraph with ``extra`` edges added (already-present ones are ignored)."""
        edges = set(self.edges)
        edges.update(canonical_edge(u, v) for u, v in extra)
        return Graph(self.n if n is None else n, frozenset(edges))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the local-to-global map."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = frozenset(
            canonical_edge(index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        )
        return Graph(len(order), edges), order

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format or its JSON equivalent.

    Edge-list: optional ``n=<int>`` header, then ``<u> <v>`` per line; ``#``
    starts a comment and blank lines are skipped. If any endpoint is not an
    integer literal the file is read in label mode: every token is a vertex
    name and ids are assigned in order of first appearance.
    """
    if text.lstrip().startswith("{"):
        return _parse_json_graph(text)

    header_n: int | None = None
    rows: list[tuple[int, str, str]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER_RE.fullmatch(line)
        if m:
            if seen_content:
                raise GraphParseError(lineno, "header must precede edges")
            try:
                header_n = int(m.group(1))
            except ValueError:
                raise GraphParseError(lineno, f"bad vertex count {m.group(1)!r}") from None
            if header_n < 0:
                raise GraphParseError(lineno, "negative vertex count")
            seen_content = True
            continue
        seen_content = True
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(lineno, f"expected two endpoints, got {len(parts)} fields")
        rows.append((lineno, parts[0], parts[1]))

    label_mode = any(not _INT_RE.fullmatch(tok) for _, a, b in rows for tok in (a, b))
    if label_mode:
        if header_n is not None:
            raise GraphParseError(1, "n= header cannot be combined with string labels")
        ids: dict[str, int] = {}
        pairs = []
        for lineno, a, b in rows:
            pairs.append((lineno, ids.setdefault(a, len(ids)), ids.setdefault(b, len(ids))))
        labels: tuple[str, ...] | None = tuple(ids)
        n = len(ids)
    else:
        pairs = []
        for lineno, a, b in rows:
            u, v = int(a), int(b)
            if u < 0 or v < 0:
                raise GraphParseError(lineno, "negative vertex id")
            pairs.append((lineno, u, v))
        labels = None
        n = max((max(u, v) for _, u, v in pairs), default=-1) + 1
        if header_n is not None:
            if header_n < n:
                raise GraphParseError(1, f"header n={header_n} but vertex {n - 1} is referenced")
            n = header_n

    edges: set[Edge] = set()
    for lineno, u, v in pairs:
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in edges:
            raise GraphParseError(lineno, f"duplicate edge {u} {v}")
        edges.add(e)
    return Graph(n, frozenset(edges), labels)


def _parse_json_graph(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.lineno, f"invalid JSON: {exc.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("edges", []), list):
        raise GraphParseError(1, "expected an object with an 'edges' list")
    edges: set[Edge] = set()
    top = -1
    for i, pair in enumerate(doc.get("edges", [])):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise GraphParseError(1, f"edges[{i}] is not a pair of integers")
        u, v = pair
        if u < 0 or v < 0:
            raise GraphParseError(1, f"edges[{i}]: negative vertex id")
        if u == v:
            raise GraphParseError(1, f"edges[{i}]: self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in edges:
            raise GraphParseError(1, f"edges[{i}]: duplicate edge {u} {v}")
        edges.add(e)
        top = max(top, e[1])
    n = doc.get("n", top + 1)
    if not isinstance(n, int) or n < top + 1:
        raise GraphParseError(1, f"'n' must be an integer >= {top + 1}")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (biconnected components, bridges, isolated vertices) of a graph.

    ``blocks`` is sorted by vertex tuple. ``block_cut_tree`` lists the
    ``(block index, cut vertex)`` incidences; it is a forest with one tree per
    connected component.
    """

    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[frozenset[Edge], ...]
    cut_vertices: frozenset[int]
    block_cut_tree: tuple[tuple[int, int], ...]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def blocks(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan block decomposition (iterative, edge stack)."""
    adj = [sorted(a) for a in g.adjacency]
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[frozenset[Edge]] = []
    isolated: list[int] = []
    timer = 0

    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not adj[root]:
            disc[root] = timer
            timer += 1
            isolated.append(root)
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[Edge] = []
        # frames: (vertex, parent, next neighbour index)
        stack: list[list[int]] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, parent, i = frame
            if i < len(adj[u]):
                frame[2] += 1
                w = adj[u][i]
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, u, 0])
                elif w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                comp: set[Edge] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(canonical_edge(a, b))
                    if (a, b) == (parent, u):
                        break
                found.append(frozenset(comp))

    entries = []
    for es in found:
        verts = tuple(sorted({x for e in es for x in e}))
        entries.append((verts, es))
    entries.extend(((v,), frozenset()) for v in isolated)
    entries.sort(key=lambda t: t[0])

    count: dict[int, int] = {}
    for verts, _ in entries:
        for v in verts:
            count[v] = count.get(v, 0) + 1
    cuts = frozenset(v for v, c in count.items() if c > 1)
    tree = tuple(
        (i, v) for i, (verts, _) in enumerate(entries) for v in verts if v in cuts
    )
    return BlockDecomposition(
        blocks=tuple(v for v, _ in entries),
        block_edges=tuple(e for _, e in entries),
        cut_vertices=cuts,
        block_cut_tree=tree,
    )


def is_biconnected(g: Graph) -> bool:
    """True for connected graphs on >= 3 vertices without cut vertices."""
    if g.n < 3:
        return False
    d = blocks(g)
    return len(d.blocks) == 1
