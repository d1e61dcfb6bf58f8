import pytest

from trilength.graph import Graph
from trilength.oracle import (
    GenSpec,
    OracleRefusal,
    all_graphs,
    enumerate_addresses,
    has_k4_or_k23_minor,
    random_delta_tree,
    random_outerplanar,
)
from trilength.outerplanar import is_outerplanar, pluck_check
from trilength.rng import SplitMix64

from conftest import complete, cycle, k23


def test_splitmix_reference_vectors():
    r = SplitMix64(1234567)
    assert [r.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_minor_examples():
    assert has_k4_or_k23_minor(complete(4))
    assert not has_k4_or_k23_minor(cycle(5))
    pendant = k23().with_edges([(4, 5)], n=6)
    assert has_k4_or_k23_minor(pendant)


def test_minor_search_finds_subdivided_k4():
    # K4 with every edge subdivided once: sparse (12 edges on 10 vertices)
    # so the edge-count shortcut does not fire.
    edges = []
    nxt = 4
    for a in range(4):
        for b in range(a + 1, 4):
            edges += [(a, nxt), (nxt, b)]
            nxt += 1
    g = Graph.from_edges(edges, 10)
    assert len(g.edges) <= 2 * g.n - 3
    assert has_k4_or_k23_minor(g)


def test_minor_refuses_large_graphs():
    with pytest.raises(OracleRefusal):
        has_k4_or_k23_minor(Graph(11))


def test_pruning_does_not_change_answers():
    for n in range(7):
        for g in all_graphs(n) if n <= 5 else list(all_graphs(n))[::7]:
            assert has_k4_or_k23_minor(g) == has_k4_or_k23_minor(g, prune=False)


def test_random_delta_tree_basics():
    t3 = random_delta_tree(3, 0)
    assert t3.graph.edges == {(0, 1), (0, 2), (1, 2)}
    t = random_delta_tree(10, 42)
    assert len(t.faces) == 8
    assert t == random_delta_tree(10, 42)
    assert pluck_check(t.graph)


def test_random_delta_trees_are_outerplanar():
    for seed in range(1000):
        t = random_delta_tree(50, seed)
        assert pluck_check(t.graph)
        assert is_outerplanar(t.graph)


def test_random_outerplanar_extremes():
    full = random_outerplanar(GenSpec(20, 1.0, 3))
    assert full == random_delta_tree(20, 3).graph
    empty = random_outerplanar(GenSpec(20, 0.0, 3))
    assert empty == Graph(20)
    with pytest.raises(ValueError):
        GenSpec(5, 1.5, 0)


def test_generator_soundness():
    rng = SplitMix64(99)
    for _ in range(10_000):
        spec = GenSpec(rng.below(51), rng.random(), rng.next_u64())
        assert is_outerplanar(random_outerplanar(spec))


def test_enumerate_addresses_counts():
    assert list(enumerate_addresses(0)) == [()]
    assert len(list(enumerate_addresses(1))) == 4
    addrs = list(enumerate_addresses(8))
    assert len(addrs) == 9841 == (3**9 - 1) // 2
    assert len(set(addrs)) == len(addrs)
    keys = ["".join(l.value for l in a) for a in addrs]
    assert keys == sorted(keys)
    with pytest.raises(OracleRefusal):
        next(enumerate_addresses(13))
