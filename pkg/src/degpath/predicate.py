"""Detect two equal-degree vertices joined by a simple path of exactly ``l`` edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadArgsError
from .graph import DegreeProfile, Graph, _bits


@dataclass(frozen=True)
class PathWitness:
    """A simple path whose two ends have the same degree."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= x < g.n for x in vs):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        return g.degree(vs[0]) == g.degree(vs[-1])

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


def _walk_layers(adj: tuple[int, ...], target: int, l: int, allowed: int) -> list[int]:
    """``layers[r]`` = vertices of ``allowed`` with a walk of exactly ``r`` edges to ``target``."""
    layers = [1 << target]
    while len(layers) <= l:
        nxt = 0
        for x in _bits(layers[-1]):
            nxt |= adj[x]
        layers.append(nxt & allowed)
        if len(layers) >= 3 and layers[-1] == layers[-3]:
            # the sequence is 2-periodic from here on
            while len(layers) <= l:
                layers.append(layers[-2])
    return layers


def exact_length_path(g: Graph, u: int, v: int, l: int, *, prune: bool = True) -> Optional[list[int]]:
    """Lexicographically least simple ``u``-``v`` path with exactly ``l`` edges, or None.

    Neighbors are tried in increasing id order. With ``prune`` set, a branch
    is cut when its endpoint has no walk of the remaining length to ``v``
    avoiding ``u``; this never changes the answer.
    """
    n = g.n
    if not (0 <= u < n and 0 <= v < n):
        raise BadArgsError(f"vertices ({u}, {v}) out of range for n={n}")
    if u == v:
        raise BadArgsError("endpoints must differ")
    if not 1 <= l <= n - 1:
        raise BadArgsError(f"path length must lie in [1, {n - 1}], got {l}")
    return _search(g.adj, n, u, v, l, prune)


def _search(adj: tuple[int, ...], n: int, u: int, v: int, l: int, prune: bool) -> Optional[list[int]]:
    full = (1 << n) - 1
    if prune:
        layers = _walk_layers(adj, v, l, full & ~(1 << u))
    else:
        layers = [full] * (l + 1)
    if prune and not (adj[u] & layers[l - 1]):
        return None
    vbit = 1 << v
    dead: set[tuple[int, int]] = set()
    path = [u]

    def step(x: int, visited: int, r: int) -> bool:
        # r edges still to place, ending at v
        if r == 1:
            if adj[x] & vbit:
                path.append(v)
                return True
            return False
        # r - 1 fresh interior vertices are still needed
        if n - visited.bit_count() - 1 < r - 1:
            return False
        key = (x, visited)
        if key in dead:
            return False
        for y in _bits(adj[x] & ~visited & ~vbit & layers[r - 1]):
            path.append(y)
            if step(y, visited | 1 << y, r - 1):
                return True
            path.pop()
        dead.add(key)
        return False

    if step(u, 1 << u, l):
        return path
    return None


def find_equal_degree_path(g: Graph, l: int, *, prune: bool = True) -> Optional[PathWitness]:
    """First equal-degree path of exactly ``l`` edges, or None if ``g`` avoids it.

    Degree classes are scanned by ascending degree and pairs ``u < v``
    lexicographically within a class. For ``l >= n`` no simple path of that
    length exists and the result is None.
    """
    if l < 1:
        raise BadArgsError(f"path length must be at least 1, got {l}")
    if l > g.n - 1:
        return None
    adj, n = g.adj, g.n
    full = (1 << n) - 1
    reach: dict[int, int] = {}
    for degree, members in DegreeProfile.of(g).classes.items():
        if len(members) < 2 or degree == 0:
            continue
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if prune:
                    # cheap parity/distance filter on the whole graph first
                    if v not in reach:
                        reach[v] = _walk_layers(adj, v, l, full)[l]
                    if not reach[v] >> u & 1:
                        continue
                found = _search(adj, n, u, v, l, prune)
                if found is not None:
                    return PathWitness(tuple(found))
    return None


def avoids(g: Graph, l: int) -> bool:
    """True iff no two equal-degree vertices of ``g`` are joined by a path of ``l`` edges."""
    return find_equal_degree_path(g, l) is None
