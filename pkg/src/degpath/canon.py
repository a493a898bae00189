"""Canonical labeling for small graphs.

Vertices are first split by degree, the ordered partition is refined to an
equitable one, and remaining ties are broken by individualizing vertices in
a search tree. The canonical code is the smallest upper-triangle bit string
over all leaves of that tree. Automorphisms found at the leaves prune
sibling branches that lie in the same orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import SizeError
from .graph import Graph
from .graph6 import graph6_encode

MAX_CANON_VERTICES = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Canonical code of an isomorphism class.

    ``code`` holds the upper-triangle bits of the canonically relabeled graph
    in graph6 order, pair ``(0, 1)`` being the most significant bit.
    """

    n: int
    code: int

    def to_graph(self) -> Graph:
        m = self.n * (self.n - 1) // 2
        adj = [0] * self.n
        k = m - 1
        for j in range(1, self.n):
            for i in range(j):
                if self.code >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                k -= 1
        return Graph(self.n, tuple(adj))

    @cached_property
    def bytes(self) -> bytes:
        return graph6_encode(self.to_graph())

    @property
    def graph6(self) -> str:
        return self.bytes.decode("ascii")

    @property
    def num_edges(self) -> int:
        return self.code.bit_count()


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until every cell is equitable."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                new_cells.extend(groups[s] for s in sorted(groups))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _code(adj: tuple[int, ...], lab: list[int], top: int) -> int:
    code = 0
    for v, row in enumerate(adj):
        a = lab[v]
        while row:
            low = row & -row
            w = low.bit_length() - 1
            row ^= low
            b = lab[w]
            if a < b:
                code |= 1 << (top - (b * (b - 1) // 2 + a))
    return code


def _orbit_rep(v: int, gens: list[list[int]], cache: dict[int, int]) -> int:
    """Smallest vertex in the orbit of ``v`` under the group generated by ``gens``."""
    if v in cache:
        return cache[v]
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    rep = min(orbit)
    for x in orbit:
        cache[x] = rep
    return rep


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return ``(lab, code)`` where ``g.relabel(lab)`` is the canonical graph."""
    n = g.n
    if n > MAX_CANON_VERTICES:
        raise SizeError(f"canonical form is exact only for n <= {MAX_CANON_VERTICES}")
    adj = g.adj
    top = n * (n - 1) // 2 - 1
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    best: list = [None, None]  # code, lab
    first: list = [None, None]
    autos: list[list[int]] = []

    def leaf(cells: list[list[int]]) -> None:
        lab = [0] * n
        for i, cell in enumerate(cells):
            lab[cell[0]] = i
        code = _code(adj, lab, top)
        if first[0] is None:
            first[0], first[1] = code, lab
            best[0], best[1] = code, lab
            return
        for ref_code, ref_lab in (first, best):
            if code == ref_code:
                inv = [0] * n
                for v, x in enumerate(ref_lab):
                    inv[x] = v
                autos.append([inv[lab[v]] for v in range(n)])
                return
        if code < best[0]:
            best[0], best[1] = code, lab

    def recurse(cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(adj, cells)
        t = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if t is None:
            leaf(cells)
            return
        cell = cells[t]
        seen: set[int] = set()
        for v in cell:
            gens = [a for a in autos if all(a[p] == p for p in prefix)]
            reps: dict[int, int] = {}
            if _orbit_rep(v, gens, reps) in {_orbit_rep(u, gens, reps) for u in seen}:
                continue
            seen.add(v)
            rest = [w for w in cell if w != v]
            recurse(cells[:t] + [[v], rest] + cells[t + 1:], prefix + [v])

    recurse(start, [])
    return best[1], best[0]


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical code of ``g``; isomorphic graphs give equal results (n <= 10)."""
    _, code = canonical_labeling(g)
    return CanonicalForm(g.n, code)


def canonical_graph(g: Graph) -> Graph:
    lab, _ = canonical_labeling(g)
    return g.relabel(lab)
