import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from degpath import (
    PathWitness,
    avoids,
    build_graph,
    complete_bipartite,
    exact_length_path,
    find_equal_degree_path,
    graph6_decode,
    half_graph,
)
from degpath.errors import BadArgsError
from degpath.extremal import iso_classes
from degpath.graph import complete_graph, cycle_graph, empty_graph, path_graph

from oracles import naive_contains, naive_least_path, naive_paths, sweep, to_mask


def test_hamiltonian_path():
    assert exact_length_path(path_graph(6), 0, 5, 5) == [0, 1, 2, 3, 4, 5]


def test_long_way_round_c6():
    assert exact_length_path(cycle_graph(6), 0, 1, 5) == [0, 5, 4, 3, 2, 1]


def test_bipartite_parity_blocks_same_side():
    g = complete_bipartite(3, 4)
    assert exact_length_path(g, 0, 1, 5) is None
    assert exact_length_path(g, 3, 4, 5) is None
    assert exact_length_path(g, 0, 1, 4) == [0, 3, 2, 4, 1]


@pytest.mark.parametrize("u, v, l", [(0, 0, 2), (0, 1, 0), (0, 1, 6), (0, 9, 1)])
def test_bad_args(u, v, l):
    with pytest.raises(BadArgsError):
        exact_length_path(path_graph(6), u, v, l)
    with pytest.raises(BadArgsError):
        find_equal_degree_path(path_graph(6), 0)


def test_c6_witness():
    w = find_equal_degree_path(cycle_graph(6), 5)
    assert w is not None and w.length == 5
    assert w.is_valid_in(cycle_graph(6))
    assert w.vertices == (0, 5, 4, 3, 2, 1)


def test_k11_12_avoids_length_five():
    assert find_equal_degree_path(complete_bipartite(11, 12), 5) is None


def test_k23_avoids_length_three():
    assert find_equal_degree_path(complete_bipartite(2, 3), 3) is None


def test_k4_contains_length_three():
    assert not avoids(complete_graph(4), 3)


def test_empty_graph_avoids():
    assert avoids(empty_graph(7), 5)


def test_half_graph_six_length_four():
    # frozen from the injective-sequence oracle
    assert naive_contains(half_graph(6), 4) is False
    assert avoids(half_graph(6), 4) is True


def test_lengths_beyond_n_minus_one_never_occur():
    assert find_equal_degree_path(complete_graph(5), 5) is None
    assert find_equal_degree_path(complete_graph(5), 4) is not None


def random_graph(rng, n, p):
    return build_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_least_path_matches_oracle():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 7)
        g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.8]))
        u, v = rng.sample(range(n), 2)
        l = rng.randint(1, n - 1)
        expected = naive_least_path(g, u, v, l)
        assert exact_length_path(g, u, v, l) == expected
        assert exact_length_path(g, u, v, l, prune=False) == expected


def test_first_witness_follows_class_and_pair_order():
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(3, 7)
        g = random_graph(rng, n, 0.5)
        l = rng.randint(1, n - 1)
        deg = g.degrees()
        pairs = sorted(
            ((deg[u], u, v) for u, v in itertools.combinations(range(n), 2) if deg[u] == deg[v] and deg[u] > 0)
        )
        expected = None
        for _, u, v in pairs:
            path = naive_least_path(g, u, v, l)
            if path is not None:
                expected = tuple(path)
                break
        w = find_equal_degree_path(g, l)
        assert (w.vertices if w else None) == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_complete_agreement_with_labeled_sweep(n):
    s = sweep(n)
    for l in range(1, 7):
        ok = s.avoiding(l)
        for form in iso_classes(n):
            g = form.to_graph()
            assert avoids(g, l) == bool(ok[to_mask(g)]), (form.graph6, l)


def test_bipartite_parity_for_odd_lengths():
    for a in range(1, 40):
        for b in range(1, 41 - a):
            if a == b:
                continue
            g = complete_bipartite(a, b)
            for l in range(1, a + b, 2):
                assert avoids(g, l), (a, b, l)


# (G, G + e) pairs found by exhaustive search over n <= 6 with the labeled sweep
FLIPS = [
    # l, G, G + e, avoids(G), avoids(G + e)
    (2, "B_", "Bo", True, False),
    (2, "Co", "Cq", False, True),
    (3, "Co", "Cq", True, False),
    (3, "Ck", "C{", False, True),
    (4, "Dk?", "DkG", True, False),
    (4, "DY_", "D]_", False, True),
    (5, "EY_?", "EY_O", True, False),
    (5, "ELQ?", "ELq?", False, True),
]


@pytest.mark.parametrize("l, before, after, ok_before, ok_after", FLIPS)
def test_adding_an_edge_can_flip_either_way(l, before, after, ok_before, ok_after):
    g, h = graph6_decode(before), graph6_decode(after)
    assert h.num_edges == g.num_edges + 1
    assert set(g.edges()) < set(h.edges())
    assert avoids(g, l) == ok_before == (not naive_contains(g, l))
    assert avoids(h, l) == ok_after == (not naive_contains(h, l))


@st.composite
def graph_and_length(draw):
    n = draw(st.integers(2, 9))
    rnd = draw(st.randoms(use_true_random=False))
    p = draw(st.sampled_from([0.2, 0.4, 0.6, 0.9]))
    g = random_graph(rnd, n, p)
    return g, draw(st.integers(1, n - 1))


@settings(max_examples=300, deadline=None)
@given(graph_and_length())
def test_witness_soundness_and_oracle(case):
    g, l = case
    w = find_equal_degree_path(g, l)
    assert (w is None) == (not naive_contains(g, l))
    if w is not None:
        assert isinstance(w, PathWitness)
        assert w.length == l
        assert w.is_valid_in(g)
        assert tuple(w.vertices) in set(naive_paths(g, l))


def test_witness_rejects_bad_paths():
    g = path_graph(4)
    assert PathWitness((0, 1, 2, 3)).is_valid_in(g)
    assert not PathWitness((0, 2, 3)).is_valid_in(g)
    assert not PathWitness((0, 1, 0)).is_valid_in(g)
    assert not PathWitness((0, 1, 2)).is_valid_in(g)
