"""Neighbourhood decomposition of vertex pairs, the common-neighbour degree
audit for graphs avoiding length-5 equal-degree paths, and the lambda bound
on degree sums."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .errors import BadArgsError, BadParamsError, SizeError
from .graph import Graph, _bits
from .predicate import avoids

LAMBDA_ORACLE_MAX_NU = 12


@dataclass(frozen=True)
class PairDecomposition:
    """Split of ``V(G)`` relative to two distinct vertices ``u`` and ``v``.

    ``common`` holds the shared neighbours, ``only_u``/``only_v`` the private
    neighbours (excluding the other endpoint) and ``neither`` everything
    outside both neighbourhoods and ``{u, v}``.
    """

    u: int
    v: int
    adjacent: int
    only_u: frozenset[int]
    only_v: frozenset[int]
    common: frozenset[int]
    neither: frozenset[int]
    n: int = field(repr=False)
    degree_u: int = field(repr=False)
    degree_v: int = field(repr=False)

    def is_partition(self) -> bool:
        parts = [{self.u, self.v}, self.only_u, self.only_v, self.common, self.neither]
        union = set().union(*parts)
        return union == set(range(self.n)) and sum(map(len, parts)) == self.n

    def identity_rhs(self) -> int:
        """``d(u) + d(v) + |neither| - n + 2(1 - adjacent)``, which must equal ``|common|``."""
        return self.degree_u + self.degree_v + len(self.neither) - self.n + 2 * (1 - self.adjacent)

    def identity_holds(self) -> bool:
        return len(self.common) == self.identity_rhs()


def decompose(g: Graph, u: int, v: int) -> PairDecomposition:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise BadArgsError(f"vertices ({u}, {v}) out of range for n={g.n}")
    if u == v:
        raise BadArgsError("decompose needs two distinct vertices")
    nu, nv = g.adj[u], g.adj[v]
    pair = 1 << u | 1 << v
    common = nu & nv
    full = (1 << g.n) - 1
    dec = PairDecomposition(
        u=u,
        v=v,
        adjacent=int(g.has_edge(u, v)),
        only_u=frozenset(_bits(nu & ~common & ~(1 << v))),
        only_v=frozenset(_bits(nv & ~common & ~(1 << u))),
        common=frozenset(_bits(common)),
        neither=frozenset(_bits(full & ~(nu | nv | pair))),
        n=g.n,
        degree_u=nu.bit_count(),
        degree_v=nv.bit_count(),
    )
    assert dec.is_partition(), dec
    assert dec.identity_holds(), dec
    return dec


@dataclass(frozen=True)
class AuditReport:
    """Result of checking ``d(w) <= n - d(u) + 2 + [uv in E]`` on an avoiding graph.

    ``violations`` lists ``(u, v, w)`` with ``u < v``, ``d(u) = d(v)`` and
    ``w`` a common neighbour breaking the bound. It is always empty when
    ``applicable`` is False.
    """

    applicable: bool
    violations: tuple[tuple[int, int, int], ...] = ()


def audit_dudv(g: Graph) -> AuditReport:
    if not avoids(g, 5):
        return AuditReport(applicable=False)
    deg = g.degrees()
    found = []
    for u, v in combinations(range(g.n), 2):
        if deg[u] != deg[v]:
            continue
        bound = g.n - deg[u] + 2 + int(g.has_edge(u, v))
        found.extend((u, v, w) for w in _bits(g.adj[u] & g.adj[v]) if deg[w] > bound)
    return AuditReport(applicable=True, violations=tuple(sorted(found)))


def choose2(x: int) -> int:
    """Binomial ``C(x, 2)``, taken as 0 for every integer ``x < 2``."""
    return x * (x - 1) // 2 if x >= 2 else 0


@dataclass(frozen=True)
class LambdaParams:
    nu: int
    delta: int
    beta: int
    b: int

    def __post_init__(self) -> None:
        if min(self.nu, self.delta, self.beta, self.b) < 1:
            raise BadParamsError(f"all parameters must be positive: {self}")
        if self.delta < self.b:
            raise BadParamsError(f"need delta >= b: {self}")
        if self.nu < self.delta + 1:
            raise BadParamsError(f"need nu >= delta + 1: {self}")


def lambda_closed(p: LambdaParams) -> int:
    """Closed form for the largest value sum of the two constrained sequences.

    The three regimes of ``b - beta`` are evaluated separately and checked
    against the unified expression before returning.
    """
    nu, delta, beta, b = p.nu, p.delta, p.beta, p.b
    spare = nu - 1 - delta  # length of the second sequence
    gap = b - beta
    unified = sum(range(b, delta)) + spare * beta + choose2(gap) - choose2(gap - spare)
    if gap <= 0:
        by_case = sum(range(b, delta)) + spare * beta
    elif gap >= nu - delta:
        by_case = sum(range(delta + b - (nu - 1), delta))
    else:
        by_case = sum(range(beta + 1, delta)) + ((nu - 1) - b - delta + beta + 1) * beta
    assert by_case == unified, (p, by_case, unified)
    return unified


def lambda_oracle(p: LambdaParams) -> int:
    """Exhaustive maximum over all admissible sequence pairs (``nu <= 12``).

    The first sequence takes ``delta - b`` distinct values in
    ``1..delta-1``; the second is a multiset of ``nu - delta - 1`` values in
    ``0..delta-1``; no value above ``beta`` may occur twice overall.
    """
    if p.nu > LAMBDA_ORACLE_MAX_NU:
        raise SizeError(f"oracle is limited to nu <= {LAMBDA_ORACLE_MAX_NU}")
    spare = p.nu - p.delta - 1
    best = None
    for first in combinations(range(1, p.delta), p.delta - p.b):
        used_high = {x for x in first if x > p.beta}
        for second in combinations_with_replacement(range(p.delta), spare):
            high = [x for x in second if x > p.beta]
            if len(set(high)) != len(high) or used_high.intersection(high):
                continue
            total = sum(first) + sum(second)
            if best is None or total > best:
                best = total
    if best is None:
        raise BadParamsError(f"no admissible sequences for {p}")
    return best
