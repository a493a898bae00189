import itertools
import random

import pytest
from hypothesis import given, strategies as st

from degpath import LambdaParams, audit_dudv, build_graph, complete_bipartite, decompose, lambda_closed, lambda_oracle
from degpath.errors import BadArgsError, BadParamsError, SizeError
from degpath.extremal import iso_classes
from degpath.graph import complete_graph, cycle_graph
from degpath.structure import choose2

from oracles import naive_contains


def sets_by_hand(g, u, v):
    nu, nv = set(g.neighbors(u)), set(g.neighbors(v))
    common = nu & nv
    return (nu - {v} - common, nv - {u} - common, common, set(range(g.n)) - nu - nv - {u, v})


def test_k23_same_side():
    d = decompose(complete_bipartite(2, 3), 2, 3)
    assert (len(d.common), len(d.neither), d.adjacent) == (2, 1, 0)
    assert d.identity_rhs() == 2 + 2 + 1 - 5 + 2 == 2


def test_k4_adjacent_pair():
    d = decompose(complete_graph(4), 0, 1)
    assert (len(d.common), len(d.neither), d.adjacent) == (2, 0, 1)
    assert d.identity_rhs() == 3 + 3 + 0 - 4 + 0 == 2


def test_decompose_rejects_equal_vertices():
    with pytest.raises(BadArgsError):
        decompose(complete_graph(3), 1, 1)


def test_random_graphs_identity_and_sets():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(2, 16)
        p = rng.choice([0.2, 0.5, 0.8])
        g = build_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        for u, v in itertools.permutations(range(n), 2):
            d = decompose(g, u, v)
            assert (set(d.only_u), set(d.only_v), set(d.common), set(d.neither)) == sets_by_hand(g, u, v)
            assert d.is_partition() and d.identity_holds()


@pytest.mark.parametrize("n", range(2, 9))
def test_partition_on_every_class(n):
    for form in iso_classes(n):
        g = form.to_graph()
        for u, v in itertools.combinations(range(n), 2):
            d = decompose(g, u, v)
            sizes = 2 + len(d.only_u) + len(d.only_v) + len(d.common) + len(d.neither)
            assert sizes == n and d.is_partition() and d.identity_holds()


def test_audit_k34():
    report = audit_dudv(complete_bipartite(3, 4))
    assert report.applicable and report.violations == ()


def test_audit_c7_not_applicable():
    assert naive_contains(cycle_graph(7), 5)
    report = audit_dudv(cycle_graph(7))
    assert not report.applicable and report.violations == ()


def test_audit_hub_over_three_edges():
    # hub joined to three disjoint edges; every path is too short for length five
    g = build_graph(7, [(0, i) for i in range(1, 7)] + [(1, 2), (3, 4), (5, 6)])
    assert not naive_contains(g, 5)
    report = audit_dudv(g)
    assert report.applicable
    # bound for u, v of degree 2: 7 - 2 + 2 + [uv] >= 7 > 6
    assert report.violations == ()


def test_choose2_convention():
    assert [choose2(x) for x in (-3, -1, 0, 1, 2, 3, 5)] == [0, 0, 0, 0, 1, 3, 10]


@pytest.mark.parametrize("delta, beta", [(d, b) for d in range(1, 7) for b in range(1, 9)])
def test_lambda_empty_sequences(delta, beta):
    assert lambda_closed(LambdaParams(delta + 1, delta, beta, delta)) == 0


@pytest.mark.parametrize("params, value", [((6, 4, 3, 2), 8), ((6, 5, 1, 3), 7)])
def test_lambda_examples(params, value):
    p = LambdaParams(*params)
    assert lambda_oracle(p) == value
    assert lambda_closed(p) == value


def grid(max_nu=9):
    for nu in range(2, max_nu + 1):
        for delta in range(1, nu):
            for b in range(1, delta + 1):
                for beta in range(1, delta + 1):
                    yield LambdaParams(nu, delta, beta, b)


def test_lambda_agrees_with_oracle_below_max_degree():
    checked = 0
    for p in grid():
        if p.beta < p.delta:
            assert lambda_closed(p) == lambda_oracle(p), p
            checked += 1
    assert checked > 400


def test_lambda_overshoots_when_beta_equals_max_degree():
    # every allowed value is below delta, so the closed form's beta term overshoots
    for p in grid():
        if p.beta == p.delta:
            spare = p.nu - 1 - p.delta
            assert lambda_closed(p) - lambda_oracle(p) == spare, p


@pytest.mark.parametrize("args", [(0, 1, 1, 1), (5, 2, 1, 3), (3, 3, 1, 1)])
def test_lambda_bad_params(args):
    with pytest.raises(BadParamsError):
        LambdaParams(*args)


def test_lambda_oracle_budget():
    with pytest.raises(SizeError):
        lambda_oracle(LambdaParams(13, 5, 2, 3))


@given(st.integers(2, 40).flatmap(lambda nu: st.tuples(st.just(nu), st.integers(1, nu - 1)))
       .flatmap(lambda t: st.tuples(st.just(t[0]), st.just(t[1]), st.integers(1, t[1]), st.integers(1, t[1]))))
def test_lambda_closed_cases_consistent(t):
    nu, delta, beta, b = t
    lambda_closed(LambdaParams(nu, delta, beta, b))  # internal case check asserts
