"""Regularization: embed a graph of maximum degree <= d into a d-regular
graph with no (d+1)-clique, without adding edges between original vertices.

The target lives on V x {0,1}^d.  Each bit vector b indexes a copy of the
original graph; copies are glued along hypercube directions, but vertex
(v, b) keeps direction i only while deg(v) + i < d, which tops every vertex
up to degree exactly d.  Cross edges form matchings between copies, so any
clique stays inside one copy: the target has no (d+1)-clique when the
source has none.

The vertex (v, b) is encoded as the integer v * 2**d + int(b).  Beware the
2**d blow-up in vertex count; prefer the oracle variant for large d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import FiniteGraph, HypothesisError, OracleGraph


@dataclass(frozen=True)
class RegularEmbedding:
    """The d-regular supergraph together with the vertex translation."""

    graph: object  # FiniteGraph or OracleGraph
    d: int
    source_n: int

    def embed(self, v: int) -> int:
        """Image of an original vertex (its copy in block b = 0...0)."""
        if self.source_n >= 0 and not 0 <= v < self.source_n:
            raise ValueError(f"vertex {v} out of range")
        return v << self.d

    def project(self, x: int) -> int:
        """Original vertex underlying any target vertex."""
        return x >> self.d

    def bits(self, x: int) -> int:
        return x & ((1 << self.d) - 1)

    def is_original(self, x: int) -> bool:
        return self.bits(x) == 0

    def pull_back(self, coloring: dict[int, int]) -> dict[int, int]:
        """Restrict a target coloring to the embedded original vertices."""
        return {v: coloring[self.embed(v)]
                for v in range(self.source_n) if self.embed(v) in coloring}


def _target_neighbors(source_degree: Callable[[int], int],
                      source_neighbors: Callable[[int], tuple[int, ...]],
                      d: int, x: int) -> list[int]:
    mask = (1 << d) - 1
    v, b = x >> d, x & mask
    out = [(u << d) | b for u in source_neighbors(v)]
    k = source_degree(v)
    for i in range(d - k):
        out.append((v << d) | (b ^ (1 << i)))
    return sorted(out)


def regularize(g: FiniteGraph, d: int) -> RegularEmbedding:
    """d-regular, (d+1)-clique-free supergraph of a finite graph.

    Raises HypothesisError if some vertex already exceeds degree d.  The
    result has exactly 2**d * n vertices.
    """
    n = g.n
    for v in range(n):
        if g.degree(v) > d:
            raise HypothesisError(
                f"vertex {v} has degree {g.degree(v)} > {d}",
                kind="degree", witness=v)
    from .basic import find_clique
    clique = find_clique(g, d + 1)
    if clique is not None:
        raise HypothesisError(f"contains a {d + 1}-clique {clique}",
                              kind="clique", witness=clique)
    edges = set()
    for x in range(n << d):
        for y in _target_neighbors(g.degree, g.neighbors, d, x):
            edges.add((min(x, y), max(x, y)))
    target = FiniteGraph.from_edges(n << d, sorted(edges))
    return RegularEmbedding(graph=target, d=d, source_n=n)


def regularize_oracle(g, d: int, source_n: int | None = None) -> RegularEmbedding:
    """Lazy variant: target neighborhoods are computed on demand and the
    degree-<= d hypothesis is checked per visited vertex only."""
    if isinstance(g, FiniteGraph):
        source_n = g.n
    if source_n is None and getattr(g, "n_vertices", None) is not None:
        source_n = g.n_vertices

    checked: set[int] = set()

    def src_neighbors(v: int) -> tuple[int, ...]:
        nbrs = tuple(g.neighbors(v))
        if v not in checked:
            if len(nbrs) > d:
                raise HypothesisError(
                    f"vertex {v} has degree {len(nbrs)} > {d}",
                    kind="degree", witness=v)
            checked.add(v)
        return nbrs

    def neighbor_fn(x: int):
        return _target_neighbors(lambda v: len(src_neighbors(v)),
                                 src_neighbors, d, x)

    n_target = None if source_n is None else source_n << d
    target = OracleGraph(neighbor_fn, n_vertices=n_target)
    return RegularEmbedding(graph=target, d=d,
                            source_n=-1 if source_n is None else source_n)
