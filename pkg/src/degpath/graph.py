"""Simple undirected graphs stored as per-vertex adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BadArgsError, LoopError, OutOfRangeError, SizeError

MAX_VERTICES = 64


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer whose bit ``w`` is set iff ``v`` and ``w`` are
    adjacent. Instances are hashable and compare by labeled structure.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise BadArgsError(f"expected {self.n} adjacency rows, got {len(self.adj)}")

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.adj[u] >> v & 1]

    def with_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise BadArgsError("perm must be a permutation of range(n)")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for w in _bits(row):
                new |= 1 << perm[w]
            adj[perm[v]] = new
        return Graph(self.n, tuple(adj))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def is_valid(self) -> bool:
        """Check symmetry and loop-freeness of the adjacency rows."""
        for v, row in enumerate(self.adj):
            if row >> v & 1 or row >> self.n:
                return False
            for w in _bits(row):
                if not self.adj[w] >> v & 1:
                    return False
        return True

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeProfile:
    """Degree data of a graph.

    ``beta`` is the largest degree value shared by at least two vertices,
    or ``None`` when all degrees are distinct; ``delta`` is the maximum
    degree.
    """

    degrees: tuple[int, ...]
    classes: dict[int, list[int]] = field(compare=False)
    delta: int
    beta: Optional[int]

    @classmethod
    def of(cls, g: Graph) -> "DegreeProfile":
        degrees = tuple(g.degrees())
        classes: dict[int, list[int]] = {}
        for v, d in enumerate(degrees):
            classes.setdefault(d, []).append(v)
        classes = dict(sorted(classes.items()))
        repeated = [d for d, vs in classes.items() if len(vs) >= 2]
        return cls(
            degrees=degrees,
            classes=classes,
            delta=max(degrees, default=0),
            beta=max(repeated) if repeated else None,
        )


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise OutOfRangeError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
    if u == v:
        raise LoopError(f"loop at vertex {u}")


def _check_size(n: int) -> None:
    if n < 1:
        raise BadArgsError(f"need at least one vertex, got n={n}")
    if n > MAX_VERTICES:
        raise SizeError(f"n={n} exceeds the {MAX_VERTICES}-vertex limit")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list; duplicates collapse."""
    _check_size(n)
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    _check_size(n)
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    _check_size(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadArgsError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A = ``0..a-1`` and side B = ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise BadArgsError("both parts must be non-empty")
    _check_size(a + b)
    side_a = (1 << a) - 1
    side_b = ((1 << b) - 1) << a
    return Graph(a + b, (side_b,) * a + (side_a,) * b)


def half_graph(n: int) -> Graph:
    """Half graph: ``a_i ~ b_j`` iff ``i <= j``, with ``a_i = i-1`` and ``b_j = n+j-1``."""
    if n < 1:
        raise BadArgsError("half graph needs n >= 1")
    _check_size(2 * n)
    return build_graph(2 * n, [(i, n + j) for i in range(n) for j in range(i, n)])
