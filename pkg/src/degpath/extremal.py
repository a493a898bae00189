"""Exact and heuristic computation of the extremal edge count p_l(n).

``p_l(n)`` is the largest number of edges in an ``n``-vertex graph with no
two equal-degree vertices joined by a path of exactly ``l`` edges.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Literal, Optional, Sequence

import numpy as np

from .canon import MAX_CANON_VERTICES, CanonicalForm, canonical_form
from .errors import BadArgsError, SizeError
from .graph import MAX_VERTICES, Graph, complete_bipartite, complete_graph, empty_graph
from .graph6 import graph6_encode
from .predicate import avoids

log = logging.getLogger(__name__)

TSV_HEADER = ("n", "l", "p", "exact", "count_extremal")


@dataclass
class ExtremalReport:
    n: int
    l: int
    p: int
    extremal_graphs: list[str]
    exact: bool
    graphs_examined: int = 0
    seconds: float = field(default=0.0, compare=False)
    seed: Optional[int] = None

    def tsv(self, header: bool = True) -> str:
        row = (self.n, self.l, self.p, str(self.exact).lower(), len(self.extremal_graphs))
        lines = ["\t".join(TSV_HEADER)] if header else []
        lines.append("\t".join(map(str, row)))
        return "\n".join(lines) + "\n"

    def sidecar(self) -> str:
        return "".join(g6 + "\n" for g6 in self.extremal_graphs)


# -- isomorph-free generation ------------------------------------------------

_levels: dict[int, dict[int, list[CanonicalForm]]] = {}


def _children(forms: Sequence[CanonicalForm]) -> set[CanonicalForm]:
    out: set[CanonicalForm] = set()
    for form in forms:
        g = form.to_graph()
        for u, v in g.edges():
            out.add(canonical_form(g.without_edge(u, v)))
    return out


def _chunks(items: Sequence, k: int) -> list[Sequence]:
    size = max(1, -(-len(items) // k))
    return [items[i:i + size] for i in range(0, len(items), size)]


def iso_levels(n: int, workers: int = 1) -> Iterator[tuple[int, list[CanonicalForm]]]:
    """Yield ``(edge count, iso-classes)`` from ``C(n, 2)`` edges down to 0.

    Each level is obtained by deleting one edge from every class of the level
    above and deduplicating by canonical form. Levels are sorted by code and
    cached per ``n``.
    """
    if not 1 <= n <= MAX_CANON_VERTICES:
        raise SizeError(f"exhaustive generation is limited to n <= {MAX_CANON_VERTICES}")
    cache = _levels.setdefault(n, {})
    top = n * (n - 1) // 2
    if top not in cache:
        cache[top] = [canonical_form(complete_graph(n))]
    for k in range(top, -1, -1):
        if k not in cache:
            parents = cache[k + 1]
            if workers > 1 and len(parents) > 64:
                with ProcessPoolExecutor(workers) as pool:
                    found = set().union(*pool.map(_children, _chunks(parents, 4 * workers)))
            else:
                found = _children(parents)
            cache[k] = sorted(found)
        yield k, cache[k]


def iso_classes(n: int, workers: int = 1) -> list[CanonicalForm]:
    """All iso-classes of ``n``-vertex graphs, by decreasing edge count."""
    return [form for _, level in iso_levels(n, workers) for form in level]


def _avoiding(args: tuple[Sequence[CanonicalForm], int]) -> list[CanonicalForm]:
    forms, l = args
    return [f for f in forms if avoids(f.to_graph(), l)]


def enumerate_exact(n: int, l: int, workers: int = 1) -> ExtremalReport:
    """Exact ``p_l(n)`` with every extremal graph up to isomorphism.

    Levels are scanned from the complete graph downwards and the scan stops at
    the first level holding an avoiding graph, so no property of the predicate
    under edge addition is assumed.
    """
    if n > MAX_CANON_VERTICES:
        raise SizeError(f"exact enumeration is limited to n <= {MAX_CANON_VERTICES}")
    if n < 2:
        raise BadArgsError("exact enumeration needs n >= 2")
    if l < 1:
        raise BadArgsError("path length must be at least 1")
    start = time.perf_counter()
    examined = 0
    for k, level in iso_levels(n, workers):
        if workers > 1 and len(level) > 64:
            with ProcessPoolExecutor(workers) as pool:
                parts = pool.map(_avoiding, [(c, l) for c in _chunks(level, 4 * workers)])
                winners = [f for part in parts for f in part]
        else:
            winners = _avoiding((level, l))
        examined += len(level)
        if winners:
            report = ExtremalReport(
                n=n,
                l=l,
                p=k,
                extremal_graphs=[f.graph6 for f in sorted(winners)],
                exact=True,
                graphs_examined=examined,
                seconds=time.perf_counter() - start,
            )
            log.info("p_%d(%d) = %d after %d classes", l, n, k, examined)
            return report
    raise AssertionError("the empty graph always avoids")  # pragma: no cover


# -- heuristic lower bounds ----------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    """Hill-climbing settings.

    Every run starts from the empty graph ``restarts`` times and, when
    ``bipartite_starts`` is set, once from each avoiding ``K_{a, n-a}``.
    ``moves_per_restart`` caps predicate evaluations per start; ``patience``
    caps consecutive edge swaps without an improvement.
    """

    seed: int = 0
    restarts: int = 4
    moves_per_restart: int = 300
    patience: int = 20
    bipartite_starts: bool = True
    objective: Literal["edges"] = "edges"

    def __post_init__(self) -> None:
        if self.restarts < 0 or self.moves_per_restart < 0 or self.patience < 0:
            raise BadArgsError("search budgets must be non-negative")
        if self.objective != "edges":
            raise BadArgsError(f"unsupported objective {self.objective!r}")
        if not 0 <= self.seed < 2**64:
            raise BadArgsError("seed must fit in 64 bits")


def _climb(args: tuple[Graph, int, SearchConfig, np.random.SeedSequence]) -> tuple[Graph, int]:
    g, l, cfg, seq = args
    rng = np.random.Generator(np.random.PCG64(seq))
    moves = 0
    stale = 0
    while moves < cfg.moves_per_restart:
        missing = g.non_edges()
        if not missing:
            break
        improved = False
        for idx in rng.permutation(len(missing)):
            if moves >= cfg.moves_per_restart:
                break
            moves += 1
            cand = g.with_edge(*missing[idx])
            if avoids(cand, l):
                g, improved = cand, True
                break
        if improved:
            stale = 0
            continue
        present = g.edges()
        if not present or stale >= cfg.patience or moves >= cfg.moves_per_restart:
            break
        stale += 1
        moves += 1
        drop = present[rng.integers(len(present))]
        add = missing[rng.integers(len(missing))]
        cand = g.without_edge(*drop).with_edge(*add)
        if avoids(cand, l):
            g = cand
    return g, moves


def search_lower_bound(n: int, l: int, cfg: SearchConfig = SearchConfig(), workers: int = 1) -> ExtremalReport:
    """Best avoiding graph found by randomized hill climbing; a lower bound on ``p_l(n)``."""
    if not 1 <= n <= MAX_VERTICES:
        raise BadArgsError(f"n must lie in [1, {MAX_VERTICES}]")
    if l < 1:
        raise BadArgsError("path length must be at least 1")
    start = time.perf_counter()
    starts = [empty_graph(n)] * cfg.restarts
    if cfg.bipartite_starts:
        starts += [g for g in (complete_bipartite(a, n - a) for a in range(1, n // 2 + 1)) if avoids(g, l)]
    if not starts:
        starts = [empty_graph(n)]
    seqs = np.random.SeedSequence(cfg.seed).spawn(len(starts))
    jobs = [(g, l, cfg, s) for g, s in zip(starts, seqs)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_climb, jobs))
    else:
        results = [_climb(job) for job in jobs]
    best = max(g.num_edges for g, _ in results)
    keys = set()
    for g, _ in results:
        if g.num_edges == best:
            keys.add(canonical_form(g).graph6 if n <= MAX_CANON_VERTICES else graph6_encode(g).decode())
    return ExtremalReport(
        n=n,
        l=l,
        p=best,
        extremal_graphs=sorted(keys),
        exact=False,
        graphs_examined=sum(m for _, m in results),
        seconds=time.perf_counter() - start,
        seed=cfg.seed,
    )


def verify_construction(n_half: int, l: int, kind: Literal["odd", "even"]) -> bool:
    """Check that ``K_{n,n+1}`` (odd) or ``K_{n-1,n+1}`` (even) avoids ``l`` with the expected size.

    The expected edge counts are ``n^2 + n`` and ``n^2 - 1`` respectively.
    """
    if kind == "odd":
        if n_half < 1:
            raise BadArgsError("odd construction needs n >= 1")
        g, expected = complete_bipartite(n_half, n_half + 1), n_half * n_half + n_half
    elif kind == "even":
        if n_half < 2:
            raise BadArgsError("even construction needs n >= 2")
        g, expected = complete_bipartite(n_half - 1, n_half + 1), n_half * n_half - 1
    else:
        raise BadArgsError(f"unknown construction kind {kind!r}")
    return g.num_edges == expected and avoids(g, l)
