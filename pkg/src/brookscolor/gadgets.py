"""Reversal gadgets: graphs whose proper colorings separate the ranges of
two injections.

Given injective sequences f and g with disjoint ranges, each builder emits
a graph in which any proper coloring (2 colors for h2 and the ladder, d
colors for hd) forces a relation between the column vertices a_n/b_n (or
the rail feet l_{n,0}/r_{n,0}) exactly on ran(f) versus ran(g); extracting
X = {n : relation holds} yields ran(f) <= X and ran(g) disjoint from X.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Coloring, FiniteGraph, OracleGraph, is_proper

Label = tuple


@dataclass(frozen=True)
class InjectionPair:
    """Finite prefixes of two injections with disjoint ranges, plus the
    column horizon N (all values must lie below it)."""

    f: tuple[int, ...]
    g: tuple[int, ...]
    horizon: int

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(self.f))
        object.__setattr__(self, "g", tuple(self.g))
        if self.horizon < 0:
            raise ValueError("horizon must be >= 0")
        if len(set(self.f)) != len(self.f):
            raise ValueError("f is not injective")
        if len(set(self.g)) != len(self.g):
            raise ValueError("g is not injective")
        if set(self.f) & set(self.g):
            raise ValueError(f"ranges overlap: {sorted(set(self.f) & set(self.g))}")
        for x in self.f + self.g:
            if not 0 <= x < self.horizon:
                raise ValueError(f"value {x} outside horizon {self.horizon}")
        if max(len(self.f), len(self.g)) > self.horizon:
            raise ValueError("more pairs than rows below the horizon")


@dataclass
class GadgetGraph:
    """A built gadget: the graph, its label <-> vertex-id maps, and enough
    metadata to extract a separating set from a coloring."""

    graph: object                   # FiniteGraph or OracleGraph
    kind: str                       # "h2" | "hd" | "ladder"
    pair: InjectionPair
    d: Optional[int] = None
    ids: dict[Label, int] = field(default_factory=dict)
    _by_id: dict[int, Label] = field(default_factory=dict, repr=False)
    id_fn: Optional[object] = None  # label -> id, for oracle variants

    def id_of(self, label: Label) -> int:
        if self.id_fn is not None:
            return self.id_fn(label)
        return self.ids[label]

    def label_of(self, vid: int) -> Optional[Label]:
        return self._by_id.get(vid)


def _register(gg: GadgetGraph, labels) -> None:
    for i, lab in enumerate(labels):
        gg.ids[lab] = i
        gg._by_id[i] = lab


def build_h2(p: InjectionPair) -> GadgetGraph:
    """Max-degree-2 acyclic gadget: f(m)=n hangs c_m under column n (even
    path a_n-c_m-b_n forces equal colors); g(m)=k hangs the odd path
    a_k-c'_m-d'_m-b_k (forces unequal colors)."""
    n_cols = p.horizon
    labels = [("a", n) for n in range(n_cols)] + [("b", n) for n in range(n_cols)]
    labels += [("c", m) for m in range(len(p.f))]
    for m in range(len(p.g)):
        labels += [("cp", m), ("dp", m)]
    gg = GadgetGraph(None, "h2", p)
    _register(gg, labels)
    edges = []
    for m, n in enumerate(p.f):
        edges.append((gg.ids[("a", n)], gg.ids[("c", m)]))
        edges.append((gg.ids[("b", n)], gg.ids[("c", m)]))
    for m, k in enumerate(p.g):
        edges.append((gg.ids[("a", k)], gg.ids[("cp", m)]))
        edges.append((gg.ids[("b", k)], gg.ids[("dp", m)]))
        edges.append((gg.ids[("cp", m)], gg.ids[("dp", m)]))
    gg.graph = FiniteGraph.from_edges(len(labels), edges)
    return gg


def build_hd(p: InjectionPair, d: int) -> GadgetGraph:
    """Max-degree-d gadget with no (d+1)-clique: a (d-1)-clique pins the
    color of everything joined to it.

    f(m)=n: a_n and b_n are each joined to all of a clique G_m, forcing
    them both onto the one leftover color.  g(m)=n: a_n is joined to all of
    a clique G'_m, as is the extra vertex e'_m, so c(a_n) = c(e'_m); the
    edge e'_m-b_n then forces c(a_n) != c(b_n).
    """
    if d < 3:
        raise ValueError("hd gadget needs d >= 3")
    n_cols = p.horizon
    labels = [("a", n) for n in range(n_cols)] + [("b", n) for n in range(n_cols)]
    for m in range(len(p.f)):
        labels += [("G", m, j) for j in range(d - 1)]
    for m in range(len(p.g)):
        labels += [("Gp", m, j) for j in range(d - 1)] + [("ep", m)]
    gg = GadgetGraph(None, "hd", p, d=d)
    _register(gg, labels)
    edges = []
    for m, n in enumerate(p.f):
        block = [gg.ids[("G", m, j)] for j in range(d - 1)]
        for i, x in enumerate(block):
            for y in block[i + 1:]:
                edges.append((x, y))
        for x in block:
            edges.append((gg.ids[("a", n)], x))
            edges.append((gg.ids[("b", n)], x))
    for m, n in enumerate(p.g):
        block = [gg.ids[("Gp", m, j)] for j in range(d - 1)]
        for i, x in enumerate(block):
            for y in block[i + 1:]:
                edges.append((x, y))
        for x in block:
            edges.append((gg.ids[("a", n)], x))
            edges.append((gg.ids[("ep", m)], x))
        edges.append((gg.ids[("ep", m)], gg.ids[("b", n)]))
    gg.graph = FiniteGraph.from_edges(len(labels), edges)
    return gg


def _ladder_hit(p: InjectionPair, n: int) -> Optional[tuple[str, int]]:
    """Which injection hits column n, and at which row."""
    for m, v in enumerate(p.f):
        if v == n:
            return ("f", m)
    for m, v in enumerate(p.g):
        if v == n:
            return ("g", m)
    return None


def build_ladder(p: InjectionPair) -> GadgetGraph:
    """Max-degree-2 acyclic ladder: column n grows two rails l and r until
    the row where f or g hits it; f(m)=n closes them with a rung (odd path
    between the feet), g(m)=n with a two-edge bridge through m_{n,m} (even
    path).  Untouched columns keep two disjoint rails up to the horizon."""
    labels: list[Label] = []
    edge_labels: list[tuple[Label, Label]] = []
    for n in range(p.horizon):
        hit = _ladder_hit(p, n)
        top = hit[1] if hit is not None else p.horizon - 1
        for k in range(top + 1):
            labels += [("l", n, k), ("r", n, k)]
            if k:
                edge_labels.append((("l", n, k - 1), ("l", n, k)))
                edge_labels.append((("r", n, k - 1), ("r", n, k)))
        if hit is not None:
            which, m = hit
            if which == "f":
                edge_labels.append((("l", n, m), ("r", n, m)))
            else:
                labels.append(("m", n, m))
                edge_labels.append((("l", n, m), ("m", n, m)))
                edge_labels.append((("m", n, m), ("r", n, m)))
    gg = GadgetGraph(None, "ladder", p)
    _register(gg, labels)
    gg.graph = FiniteGraph.from_edges(
        len(labels), [(gg.ids[x], gg.ids[y]) for x, y in edge_labels])
    return gg


# ---------------------------------------------------------------------------
# oracle (unbounded-horizon) variants
# ---------------------------------------------------------------------------


def _cantor(n: int, k: int) -> int:
    return (n + k) * (n + k + 1) // 2 + n


def build_ladder_oracle(p: InjectionPair) -> GadgetGraph:
    """Infinite-horizon ladder: columns outside ran(f) and ran(g) carry two
    infinite rails (their feet are never decided by any finite search).

    Vertex ids: 3 * cantor(n, k) + kind with kind 0/1/2 for l/m/r; ids not
    naming a constructed vertex are isolated.
    """
    hits = {n: ("f", m) for m, n in enumerate(p.f)}
    hits.update({n: ("g", m) for m, n in enumerate(p.g)})

    def id_of(label: Label) -> int:
        kind, n, k = label
        return 3 * _cantor(n, k) + {"l": 0, "m": 1, "r": 2}[kind]

    def label_of(vid: int):
        kind = ("l", "m", "r")[vid % 3]
        code = vid // 3
        # invert the pairing function
        w = 0
        while (w + 1) * (w + 2) // 2 <= code:
            w += 1
        n = code - w * (w + 1) // 2
        return (kind, n, w - n)

    def exists(label: Label) -> bool:
        kind, n, k = label
        if k < 0:
            return False
        hit = hits.get(n)
        if kind == "m":
            return hit is not None and hit[0] == "g" and hit[1] == k
        return hit is None or k <= hit[1]

    def neighbor_labels(label: Label):
        kind, n, k = label
        hit = hits.get(n)
        out = []
        if kind == "m":
            out = [("l", n, k), ("r", n, k)]
        else:
            at_hit = hit is not None and k == hit[1]
            if not at_hit:
                out.append((kind, n, k + 1))
            elif hit[0] == "f":
                out.append(("r" if kind == "l" else "l", n, k))
            else:
                out.append(("m", n, k))
            if k > 0:
                out.append((kind, n, k - 1))
        return [x for x in out if exists(x)]

    def neighbor_fn(vid: int):
        label = label_of(vid)
        if not exists(label):
            return []
        return sorted(id_of(x) for x in neighbor_labels(label))

    gg = GadgetGraph(OracleGraph(neighbor_fn), "ladder", p, id_fn=id_of)
    return gg


def build_h2_oracle(p: InjectionPair) -> GadgetGraph:
    """Unbounded-horizon h2: ids are 4n + 0/1/2/3 for a_n/b_n/(c or c')/d'."""
    f_hit = {n: m for m, n in enumerate(p.f)}
    g_hit = {n: m for m, n in enumerate(p.g)}

    def id_of(label: Label) -> int:
        kind = label[0]
        if kind in ("a", "b"):
            return 4 * label[1] + ("a", "b").index(kind)
        if kind == "c":
            return 4 * p.f[label[1]] + 2
        if kind == "cp":
            return 4 * p.g[label[1]] + 2
        return 4 * p.g[label[1]] + 3      # dp

    def neighbor_fn(vid: int):
        n, slot = divmod(vid, 4)
        if slot == 0:     # a_n
            if n in f_hit or n in g_hit:
                return [4 * n + 2]
            return []
        if slot == 1:     # b_n
            if n in f_hit:
                return [4 * n + 2]
            if n in g_hit:
                return [4 * n + 3]
            return []
        if slot == 2:     # c_m or c'_m
            if n in f_hit:
                return [4 * n, 4 * n + 1]
            if n in g_hit:
                return [4 * n, 4 * n + 3]
            return []
        if n in g_hit:    # d'_m
            return [4 * n + 1, 4 * n + 2]
        return []

    return GadgetGraph(OracleGraph(neighbor_fn), "h2", p, id_fn=id_of)


def build_hd_oracle(p: InjectionPair, d: int) -> GadgetGraph:
    """Unbounded-horizon hd: per column a stride of 2d+1 ids covers a_n,
    b_n, the (d-1)-clique, and e'_m when present."""
    if d < 3:
        raise ValueError("hd gadget needs d >= 3")
    stride = 2 * d + 1
    f_hit = {n: m for m, n in enumerate(p.f)}
    g_hit = {n: m for m, n in enumerate(p.g)}

    def id_of(label: Label) -> int:
        kind = label[0]
        if kind in ("a", "b"):
            return stride * label[1] + ("a", "b").index(kind)
        if kind == "G":
            return stride * p.f[label[1]] + 2 + label[2]
        if kind == "Gp":
            return stride * p.g[label[1]] + 2 + label[2]
        return stride * p.g[label[1]] + d + 1     # ep

    def neighbor_fn(vid: int):
        n, slot = divmod(vid, stride)
        base = stride * n
        block = [base + 2 + j for j in range(d - 1)]
        ep = base + d + 1
        if slot == 0:     # a_n
            return block if (n in f_hit or n in g_hit) else []
        if slot == 1:     # b_n
            if n in f_hit:
                return block
            if n in g_hit:
                return [ep]
            return []
        if 2 <= slot <= d:  # clique member
            if n in f_hit:
                return sorted([base, base + 1] + [x for x in block if x != vid])
            if n in g_hit:
                return sorted([base, ep] + [x for x in block if x != vid])
            return []
        if slot == d + 1 and n in g_hit:   # e'_m
            return sorted(block + [base + 1])
        return []

    return GadgetGraph(OracleGraph(neighbor_fn), "hd", p, d=d, id_fn=id_of)


# ---------------------------------------------------------------------------
# separator extraction
# ---------------------------------------------------------------------------


def extract_separator(gg: GadgetGraph, c: Coloring) -> list[int]:
    """The separating set X read off a proper coloring of the gadget.

    For h2/hd: X = {n : c(a_n) = c(b_n)}.  For the ladder the complement
    convention is used, X = {n : c(l_{n,0}) != c(r_{n,0})}, so that for
    every gadget kind: ran(f) <= X and ran(g) disjoint from X.
    """
    if isinstance(gg.graph, FiniteGraph):
        if not is_proper(gg.graph, c):
            raise ValueError("coloring is not proper on the gadget")
    x = []
    for n in range(gg.pair.horizon):
        if gg.kind == "ladder":
            same = c[gg.id_of(("l", n, 0))] == c[gg.id_of(("r", n, 0))]
            if not same:
                x.append(n)
        else:
            if c[gg.id_of(("a", n))] == c[gg.id_of(("b", n))]:
                x.append(n)
    return x
