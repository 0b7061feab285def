"""Mixed graphs and their Hermitian adjacency matrices.

A mixed graph has undirected edges and arcs (directed edges) on the same
vertex set, with at most one connection per vertex pair and no loops.  Its
Hermitian adjacency matrix H has

    h[u][v] = 1    if u and v are joined by an undirected edge,
    h[u][v] = i    if there is an arc u -> v,
    h[u][v] = -i   if there is an arc v -> u,
    h[u][v] = 0    otherwise,

so H is Hermitian and every eigenvalue is real.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "EdgeKind",
    "MixedGraph",
    "HermitianMatrix",
    "build",
    "converse",
    "decode",
    "hermitian_matrix",
    "underlying_graph",
    "induced",
    "coalescence",
    "make_knst",
    "neighbor_partition",
    "is_connected",
    "connected_components",
    "join",
    "disjoint_union",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
]


class EdgeKind(IntEnum):
    """Connection kind between an ordered vertex pair (u, v)."""

    NONE = 0
    UNDIRECTED = 1
    ARC_OUT = 2  # arc u -> v, Hermitian entry i
    ARC_IN = 3   # arc v -> u, Hermitian entry -i

    def flipped(self) -> "EdgeKind":
        """The same connection seen from the other endpoint."""
        if self is EdgeKind.ARC_OUT:
            return EdgeKind.ARC_IN
        if self is EdgeKind.ARC_IN:
            return EdgeKind.ARC_OUT
        return self


# Hermitian entry for each EdgeKind value, indexed by kind.
_ENTRY = (0, 1, 1j, -1j)
# i-exponent of each nonzero entry: 1 = i^0, i = i^1, -i = i^3.
_KIND_EXP = {EdgeKind.UNDIRECTED: 0, EdgeKind.ARC_OUT: 1, EdgeKind.ARC_IN: 3}
_EXP_KIND = {0: EdgeKind.UNDIRECTED, 1: EdgeKind.ARC_OUT, 3: EdgeKind.ARC_IN}


@dataclass(frozen=True)
class MixedGraph:
    """Immutable mixed graph on vertices 0..n-1.

    ``kinds[u][v]`` holds the EdgeKind value of the ordered pair (u, v).
    The table is consistent (``kinds[v][u]`` is the flipped kind) and has a
    zero diagonal.  ``labels`` are cosmetic and ignored by comparisons.
    """

    n: int
    kinds: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.kinds) != self.n or any(len(row) != self.n for row in self.kinds):
            raise ValueError("kinds table must be n x n")
        for u in range(self.n):
            if self.kinds[u][u] != EdgeKind.NONE:
                raise ValueError(f"self-loop at vertex {u}")
            for v in range(u + 1, self.n):
                k = self.kinds[u][v]
                if not 0 <= k <= 3:
                    raise ValueError(f"bad kind {k!r} at pair ({u}, {v})")
                if self.kinds[v][u] != EdgeKind(k).flipped():
                    raise ValueError(f"inconsistent kinds at pair ({u}, {v})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length must equal n")

    # -- basic queries ----------------------------------------------------

    def kind(self, u: int, v: int) -> EdgeKind:
        return EdgeKind(self.kinds[u][v])

    def edges(self) -> list[tuple[int, int, EdgeKind]]:
        """All connections as (u, v, kind) with u < v; arcs keep their tail first."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                k = self.kinds[u][v]
                if k == EdgeKind.NONE:
                    continue
                if k == EdgeKind.ARC_IN:
                    out.append((v, u, EdgeKind.ARC_OUT))
                else:
                    out.append((u, v, EdgeKind(k)))
        return out

    def edge_count(self) -> int:
        return sum(1 for row in self.kinds for k in row if k != EdgeKind.NONE) // 2

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.kinds[u][v] != EdgeKind.NONE)

    def degree(self, u: int) -> int:
        return sum(1 for v in range(self.n) if self.kinds[u][v] != EdgeKind.NONE)

    def is_undirected(self) -> bool:
        return all(k in (EdgeKind.NONE, EdgeKind.UNDIRECTED) for row in self.kinds for k in row)

    def relabel(self, perm: Sequence[int]) -> "MixedGraph":
        """Relabel via ``perm``: old vertex u becomes perm[u]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        table = [[0] * self.n for _ in range(self.n)]
        for u in range(self.n):
            pu = perm[u]
            row = self.kinds[u]
            for v in range(self.n):
                table[pu][perm[v]] = row[v]
        return MixedGraph(self.n, tuple(tuple(r) for r in table))

    def encode(self) -> str:
        """Row-major kind digits; a total order key for canonical choices."""
        return "".join(str(k) for row in self.kinds for k in row)


@dataclass(frozen=True)
class HermitianMatrix:
    """Hermitian adjacency matrix with entries in {0, 1, i, -i}."""

    n: int
    entries: tuple[tuple[complex, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries must be n x n")
        for u in range(self.n):
            if self.entries[u][u] != 0:
                raise ValueError("diagonal must be zero")
            for v in range(self.n):
                z = self.entries[u][v]
                if z not in (0, 1, 1j, -1j):
                    raise ValueError(f"entry {z!r} at ({u}, {v}) not in {{0, 1, i, -i}}")
                if self.entries[v][u] != z.conjugate():
                    raise ValueError(f"not Hermitian at ({u}, {v})")

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.complex128)


def _empty_table(n: int) -> list[list[int]]:
    return [[0] * n for _ in range(n)]


def _set_pair(table: list[list[int]], u: int, v: int, kind: EdgeKind) -> None:
    table[u][v] = int(kind)
    table[v][u] = int(kind.flipped())


def build(n: int, edges: Iterable[tuple[int, int, str | EdgeKind]]) -> MixedGraph:
    """Build a mixed graph from an edge list.

    Parameters
    ----------
    n:
        Number of vertices (labeled 0..n-1).
    edges:
        Triples ``(u, v, kind)`` where kind is ``"undirected"`` or ``"arc"``
        (arc oriented u -> v), or an EdgeKind.

    Raises
    ------
    ValueError
        On loops, out-of-range endpoints, or a vertex pair listed twice in
        either order (double arcs and parallel edges are rejected).
    """
    table = _empty_table(n)
    seen: set[tuple[int, int]] = set()
    for u, v, kind in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise ValueError(f"self-loop rejected: ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"pair listed twice: ({u}, {v})")
        seen.add(key)
        if isinstance(kind, EdgeKind):
            k = kind
            if k == EdgeKind.ARC_IN:
                u, v, k = v, u, EdgeKind.ARC_OUT
        elif kind == "undirected":
            k = EdgeKind.UNDIRECTED
        elif kind == "arc":
            k = EdgeKind.ARC_OUT
        else:
            raise ValueError(f"unknown edge kind {kind!r} for pair ({u}, {v})")
        _set_pair(table, u, v, k)
    return MixedGraph(n, tuple(tuple(r) for r in table))


def decode(n: int, digits: str) -> MixedGraph:
    """Rebuild a mixed graph from its row-major kind digits (see ``encode``)."""
    if len(digits) != n * n:
        raise ValueError(f"expected {n * n} digits, got {len(digits)}")
    kinds = tuple(
        tuple(int(digits[u * n + v]) for v in range(n)) for u in range(n)
    )
    return MixedGraph(n, kinds)


def converse(m: MixedGraph) -> MixedGraph:
    """Reverse every arc.  The Hermitian matrix conjugates entrywise, so the
    spectrum is preserved; converse pairs need not be switching equivalent."""
    return MixedGraph(
        m.n,
        tuple(
            tuple(int(EdgeKind(k).flipped()) if k else 0 for k in row)
            for row in m.kinds
        ),
        m.labels,
    )


def hermitian_matrix(m: MixedGraph) -> HermitianMatrix:
    """Hermitian adjacency matrix of ``m``."""
    rows = tuple(tuple(_ENTRY[k] for k in row) for row in m.kinds)
    return HermitianMatrix(m.n, rows)


def underlying_graph(m: MixedGraph) -> MixedGraph:
    """Forget orientation: every connection becomes undirected."""
    table = tuple(
        tuple(int(EdgeKind.UNDIRECTED) if k != EdgeKind.NONE else 0 for k in row)
        for row in m.kinds
    )
    return MixedGraph(m.n, table)


def induced(m: MixedGraph, vertices: Sequence[int] | Iterable[int]) -> MixedGraph:
    """Induced mixed subgraph, vertices relabeled 0.. in the given order.

    Sets are accepted and iterated in sorted order; duplicates are rejected.
    """
    vs = list(vertices)
    if isinstance(vertices, (set, frozenset)):
        vs = sorted(vs)
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate vertices in selection")
    for v in vs:
        if not 0 <= v < m.n:
            raise ValueError(f"vertex {v} out of range")
    table = tuple(tuple(m.kinds[u][v] for v in vs) for u in vs)
    return MixedGraph(len(vs), table)


def coalescence(m1: MixedGraph, u: int, m2: MixedGraph, v: int) -> MixedGraph:
    """Glue ``m1`` and ``m2`` by identifying vertex ``u`` of m1 with ``v`` of m2.

    The result keeps m1's labels 0..n1-1; m2's remaining vertices follow in
    order.  The identified vertex is a cut vertex whenever both parts have
    edges.  Vertex counts satisfy n = n1 + n2 - 1.
    """
    if not 0 <= u < m1.n:
        raise ValueError(f"vertex {u} out of range in first graph")
    if not 0 <= v < m2.n:
        raise ValueError(f"vertex {v} out of range in second graph")
    n = m1.n + m2.n - 1
    table = _empty_table(n)
    for a in range(m1.n):
        for b in range(m1.n):
            table[a][b] = m1.kinds[a][b]
    mapping = {}
    nxt = m1.n
    for w in range(m2.n):
        if w == v:
            mapping[w] = u
        else:
            mapping[w] = nxt
            nxt += 1
    for a in range(m2.n):
        for b in range(m2.n):
            if a != b and m2.kinds[a][b] != EdgeKind.NONE:
                table[mapping[a]][mapping[b]] = m2.kinds[a][b]
    return MixedGraph(n, tuple(tuple(r) for r in table))


def make_knst(s: int, t: int) -> MixedGraph:
    """Oriented complete graph on s + t vertices.

    Vertices 0..s-1 and s..s+t-1 each induce an undirected clique; every pair
    across goes as an arc from the first block to the second.  Switching
    equivalent to the undirected complete graph, so the spectrum is
    {n-1, -1 (n-1 times)}.
    """
    if s < 0 or t < 0 or s + t == 0:
        raise ValueError("block sizes must be nonnegative and not both zero")
    n = s + t
    table = _empty_table(n)
    for a in range(n):
        for b in range(a + 1, n):
            if a < s and b >= s:
                _set_pair(table, a, b, EdgeKind.ARC_OUT)
            else:
                _set_pair(table, a, b, EdgeKind.UNDIRECTED)
    return MixedGraph(n, tuple(tuple(r) for r in table))


def neighbor_partition(
    m: MixedGraph, u: int, within: Iterable[int] | None = None
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Split u's neighbors inside ``within`` into (out-arcs, in-arcs, undirected)."""
    if not 0 <= u < m.n:
        raise ValueError(f"vertex {u} out of range")
    pool = range(m.n) if within is None else within
    outs, ins, und = set(), set(), set()
    for w in pool:
        if w == u:
            continue
        k = m.kinds[u][w]
        if k == EdgeKind.ARC_OUT:
            outs.add(w)
        elif k == EdgeKind.ARC_IN:
            ins.add(w)
        elif k == EdgeKind.UNDIRECTED:
            und.add(w)
    return frozenset(outs), frozenset(ins), frozenset(und)


def connected_components(m: MixedGraph) -> list[list[int]]:
    """Components of the underlying graph, each sorted, ordered by minimum vertex."""
    seen = [False] * m.n
    comps = []
    for s in range(m.n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in range(m.n):
                if not seen[y] and m.kinds[x][y] != EdgeKind.NONE:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(m: MixedGraph) -> bool:
    if m.n == 0:
        return True
    return len(connected_components(m)) == 1


def disjoint_union(g: MixedGraph, h: MixedGraph) -> MixedGraph:
    """Disjoint union; h's vertices are shifted by g.n."""
    n = g.n + h.n
    table = _empty_table(n)
    for a in range(g.n):
        for b in range(g.n):
            table[a][b] = g.kinds[a][b]
    for a in range(h.n):
        for b in range(h.n):
            table[g.n + a][g.n + b] = h.kinds[a][b]
    return MixedGraph(n, tuple(tuple(r) for r in table))


def join(g: MixedGraph, h: MixedGraph) -> MixedGraph:
    """Join of two undirected graphs: disjoint union plus all edges across.

    Raises ValueError when either input has an arc (the join construction is
    only used on undirected graphs here).
    """
    if not g.is_undirected() or not h.is_undirected():
        raise ValueError("join requires fully undirected inputs")
    base = disjoint_union(g, h)
    table = [list(row) for row in base.kinds]
    for a in range(g.n):
        for b in range(g.n, g.n + h.n):
            _set_pair(table, a, b, EdgeKind.UNDIRECTED)
    return MixedGraph(base.n, tuple(tuple(r) for r in table))


def complete_graph(n: int) -> MixedGraph:
    table = _empty_table(n)
    for a in range(n):
        for b in range(a + 1, n):
            _set_pair(table, a, b, EdgeKind.UNDIRECTED)
    return MixedGraph(n, tuple(tuple(r) for r in table))


def path_graph(n: int) -> MixedGraph:
    return build(n, [(i, i + 1, "undirected") for i in range(n - 1)])


def cycle_graph(n: int) -> MixedGraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, (i + 1) % n, "undirected") for i in range(n)]
    return build(n, edges)


def star_graph(leaves: int) -> MixedGraph:
    """Star with center 0 and the given number of leaves."""
    return build(leaves + 1, [(0, i, "undirected") for i in range(1, leaves + 1)])
