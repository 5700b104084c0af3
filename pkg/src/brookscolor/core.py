"""Graph data model: finite graphs, lazily presented bounded graphs, colorings.

Vertices are natural numbers.  All "least"/"first" choices elsewhere in the
package resolve by numeric vertex order, so everything built on top of this
module is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Optional, Sequence


class IntegrityError(Exception):
    """An oracle graph answered inconsistently (asymmetric edge observed)."""


class HypothesisError(Exception):
    """Input violates a precondition; carries the offending witness."""

    def __init__(self, message: str, kind: str = "", witness=None):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class IncompleteColoringError(Exception):
    """A vertex in the checked set has no assigned color."""


class BudgetError(Exception):
    """An exploration or stage budget was exceeded."""


class NoColoringError(Exception):
    """No proper coloring exists within the requested palette cap."""


class InternalInvariantError(Exception):
    """An invariant the algorithm guarantees was observed to fail."""


class _Exhausted:
    """Sentinel returned when a bounded exploration runs out of budget."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EXHAUSTED"

    def __bool__(self):
        return False


EXHAUSTED = _Exhausted()


class FiniteGraph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "_edge_count")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(a) for a in adj)
        self._edge_count = sum(len(a) for a in self.adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "FiniteGraph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, [sorted(a) for a in adj])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def induced(self, vertices: Iterable[int]) -> tuple["FiniteGraph", list[int]]:
        """Induced subgraph plus the list mapping new ids to old ids."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        adj = [[index[u] for u in self.adj[v] if u in index] for v in old]
        return FiniteGraph(len(old), adj), old

    def __eq__(self, other):
        return isinstance(other, FiniteGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"FiniteGraph(n={self.n}, m={self._edge_count})"


class OracleGraph:
    """Lazily presented bounded graph: a total neighbor-listing function.

    The universe is either all naturals (``n_vertices=None``) or 0..n-1.
    Symmetry is checked on every pair of vertices actually queried; an
    inconsistency raises :class:`IntegrityError`.
    """

    def __init__(self, neighbor_fn: Callable[[int], Sequence[int]],
                 n_vertices: Optional[int] = None):
        self._fn = neighbor_fn
        self.n_vertices = n_vertices
        self._cache: dict[int, tuple[int, ...]] = {}
        # vertices u that some cached neighbor list claims are adjacent to key
        self._expected: dict[int, set[int]] = {}

    def neighbors(self, v: int) -> tuple[int, ...]:
        cached = self._cache.get(v)
        if cached is not None:
            return cached
        if v < 0 or (self.n_vertices is not None and v >= self.n_vertices):
            raise ValueError(f"vertex {v} outside the oracle universe")
        result = tuple(self._fn(v))
        if any(result[i] >= result[i + 1] for i in range(len(result) - 1)):
            raise IntegrityError(f"neighbor list of {v} not sorted strictly ascending")
        if v in result:
            raise IntegrityError(f"self-loop reported at vertex {v}")
        nbset = set(result)
        for u in result:
            known = self._cache.get(u)
            if known is not None and v not in known:
                raise IntegrityError(f"asymmetric edge observed: {v}->{u} but not {u}->{v}")
        for u in self._expected.get(v, ()):
            if u not in nbset:
                raise IntegrityError(f"asymmetric edge observed: {u}->{v} but not {v}->{u}")
        self._cache[v] = result
        self._expected.pop(v, None)
        for u in result:
            if u not in self._cache:
                self._expected.setdefault(u, set()).add(v)
        return result

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    @classmethod
    def from_finite(cls, g: FiniteGraph) -> "OracleGraph":
        return cls(lambda v: g.adj[v], n_vertices=g.n)


class DeletionView:
    """Read-only view of a graph with a set of vertices deleted.

    Shares the removed set by reference, so a live view tracks updates to it.
    """

    __slots__ = ("base", "removed")

    def __init__(self, base, removed: set[int]):
        self.base = base
        self.removed = removed

    def neighbors(self, v: int) -> tuple[int, ...]:
        if v in self.removed:
            raise ValueError(f"vertex {v} was deleted from this view")
        return tuple(u for u in self.base.neighbors(v) if u not in self.removed)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def __contains__(self, v: int) -> bool:
        return v not in self.removed


@dataclass
class Coloring:
    """Partial or total vertex coloring with a fixed palette size."""

    assignment: dict[int, int]
    palette: int

    def __post_init__(self):
        for v, c in self.assignment.items():
            if not 0 <= c < self.palette:
                raise ValueError(f"color {c} of vertex {v} outside palette of size {self.palette}")

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __contains__(self, v: int) -> bool:
        return v in self.assignment

    def colors_used(self) -> int:
        return len(set(self.assignment.values()))


def n_neighborhood(g, seed: Iterable[int], n: int) -> frozenset[int]:
    """N_n(seed): seed itself for n=0, then n rounds of closed 1-neighborhoods."""
    if n < 0:
        raise ValueError("n must be >= 0")
    current = frozenset(seed)
    for _ in range(n):
        grown = set(current)
        for v in current:
            grown.update(g.neighbors(v))
        if len(grown) == len(current):
            return frozenset(grown)
        current = frozenset(grown)
    return current


def component_of_bounded(g, v: int, budget: int):
    """Connected component of v (the fixed point N_i = N_{i+1}), or EXHAUSTED.

    Returns EXHAUSTED as soon as the explored neighborhood exceeds ``budget``
    vertices; the result is never wrong, only possibly undecided.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    current = frozenset((v,))
    while True:
        grown = set(current)
        for u in current:
            grown.update(g.neighbors(u))
        if len(grown) == len(current):
            return current
        if len(grown) > budget:
            return EXHAUSTED
        current = frozenset(grown)


def is_proper(g, coloring: Coloring, vertices: Optional[Iterable[int]] = None) -> bool:
    """True iff no edge inside the checked vertex set is monochromatic.

    For finite graphs the whole vertex set is checked by default; oracle
    graphs require an explicit finite vertex set.
    """
    if vertices is None:
        if not isinstance(g, FiniteGraph):
            raise ValueError("an explicit vertex set is required for oracle graphs")
        vertices = g.vertices
    vset = set(vertices)
    for v in vset:
        if v not in coloring:
            raise IncompleteColoringError(f"vertex {v} has no color")
    for v in vset:
        cv = coloring[v]
        for u in g.neighbors(v):
            if u in vset and coloring[u] == cv:
                return False
    return True


def degree(g, v: int) -> int:
    return len(g.neighbors(v))


def max_degree(g: FiniteGraph) -> int:
    if g.n == 0:
        raise ValueError("max_degree of the empty graph is undefined")
    return max(len(a) for a in g.adj)
