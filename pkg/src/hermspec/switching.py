"""Switching equivalence of mixed graphs.

Conjugating the Hermitian adjacency matrix by a diagonal matrix of units in
{1, -1, i, -i} preserves the spectrum.  When the conjugated matrix is again
the Hermitian matrix of a mixed graph (no entry lands on -1), the two graphs
are called switching equivalent.  This module provides the switch operation,
a linear-time equivalence decision with witness, edge-cut based switches,
perfect elimination orderings, and the constructive normalization of chordal
mixed graphs whose triangles all have holonomy one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import EdgeKind, MixedGraph, underlying_graph

__all__ = [
    "SwitchDiagonal",
    "Cut",
    "NotChordalError",
    "BadTriangleError",
    "apply_switch",
    "switching_equivalent",
    "random_switch",
    "coincident_cuts",
    "x_switch",
    "perfect_elimination_ordering",
    "normalize_chordal",
]

_UNIT_FROM_EXP = (1 + 0j, 1j, -1 + 0j, -1j)
_EXP_FROM_UNIT = {1 + 0j: 0, 1j: 1, -1 + 0j: 2, -1j: 3}
# i-exponent of the Hermitian entry for each stored kind code (index 1..3).
_EXP_FROM_KIND = (None, 0, 1, 3)
_KIND_FROM_EXP = {0: int(EdgeKind.UNDIRECTED), 1: int(EdgeKind.ARC_OUT), 3: int(EdgeKind.ARC_IN)}


@dataclass(frozen=True)
class SwitchDiagonal:
    """Diagonal of units i^e, the witness object for switching equivalence."""

    units: tuple[complex, ...]

    def __init__(self, units) -> None:
        norm = []
        for u in units:
            z = complex(u)
            if z not in _EXP_FROM_UNIT:
                raise ValueError(f"unit {u!r} not in {{1, -1, i, -i}}")
            norm.append(z)
        object.__setattr__(self, "units", tuple(norm))

    @classmethod
    def identity(cls, n: int) -> "SwitchDiagonal":
        return cls([1] * n)

    @classmethod
    def from_exponents(cls, exps) -> "SwitchDiagonal":
        return cls([_UNIT_FROM_EXP[e % 4] for e in exps])

    def exponents(self) -> tuple[int, ...]:
        return tuple(_EXP_FROM_UNIT[u] for u in self.units)

    def __len__(self) -> int:
        return len(self.units)


def _switched_table(m: MixedGraph, exps) -> list[list[int]]:
    """Kind table of D H D*; raises ValueError when an entry lands on -1."""
    n = m.n
    table = [[0] * n for _ in range(n)]
    for u in range(n):
        row = m.kinds[u]
        for v in range(u + 1, n):
            k = row[v]
            if k == 0:
                continue
            e = (_EXP_FROM_KIND[k] + exps[u] - exps[v]) % 4
            if e == 2:
                raise ValueError(
                    f"diagonal is not applicable: entry at ({u}, {v}) becomes -1"
                )
            ku = _KIND_FROM_EXP[e]
            table[u][v] = ku
            table[v][u] = int(EdgeKind(ku).flipped())
    return table


def apply_switch(m: MixedGraph, d: SwitchDiagonal) -> MixedGraph:
    """The mixed graph with Hermitian matrix D H D*.

    The unit set {0, 1, i, -i} is not closed under conjugation by arbitrary
    diagonals (diag(1, -1) on an undirected edge gives -1), so the diagonal
    must be applicable to ``m``; otherwise ValueError names the offending
    pair.  The underlying graph is always preserved.
    """
    if len(d) != m.n:
        raise ValueError("diagonal length must match vertex count")
    table = _switched_table(m, d.exponents())
    return MixedGraph(m.n, tuple(tuple(r) for r in table))


def switching_equivalent(m1: MixedGraph, m2: MixedGraph) -> SwitchDiagonal | None:
    """Find D with D H(m1) D* = H(m2), or None.

    Requires the same labeled underlying graph (equivalence never changes
    which pairs are connected).  Within each connected component the first
    vertex's unit can be pinned to 1 (a global phase cancels in D H D*), and
    every other unit is then forced along a spanning tree; the remaining
    edges are verified, so the search is O(n + m) with no backtracking.
    """
    if m1.n != m2.n:
        return None
    n = m1.n
    for u in range(n):
        for v in range(u + 1, n):
            if (m1.kinds[u][v] == 0) != (m2.kinds[u][v] == 0):
                return None
    exps = [None] * n
    for root in range(n):
        if exps[root] is not None:
            continue
        exps[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in range(n):
                k1 = m1.kinds[u][v]
                if k1 == 0 or exps[v] is not None:
                    continue
                # d_u h1 conj(d_v) = h2  =>  e_v = e_u + exp(h1) - exp(h2)
                e1 = _EXP_FROM_KIND[k1]
                e2 = _EXP_FROM_KIND[m2.kinds[u][v]]
                exps[v] = (exps[u] + e1 - e2) % 4
                stack.append(v)
    for u in range(n):
        for v in range(u + 1, n):
            k1 = m1.kinds[u][v]
            if k1 == 0:
                continue
            e = (_EXP_FROM_KIND[k1] + exps[u] - exps[v]) % 4
            if e != _EXP_FROM_KIND[m2.kinds[u][v]]:
                return None
    return SwitchDiagonal.from_exponents(exps)


def random_switch(
    m: MixedGraph, rng: random.Random, steps: int | None = None
) -> tuple[MixedGraph, SwitchDiagonal]:
    """Random walk over applicable single-vertex switches.

    Each step multiplies one vertex unit by a random unit that keeps all of
    its edge entries inside {1, i, -i} (the identity always qualifies, so a
    step never gets stuck).  Returns the switched graph and the accumulated
    diagonal, which is applicable to ``m`` by construction.
    """
    n = m.n
    if steps is None:
        steps = 3 * n + 5
    table = [list(row) for row in m.kinds]
    exps = [0] * n
    for _ in range(steps):
        if n == 0:
            break
        v = rng.randrange(n)
        allowed = []
        for g in range(4):
            ok = True
            for w in range(n):
                k = table[v][w]
                if k and (_EXP_FROM_KIND[k] + g) % 4 == 2:
                    ok = False
                    break
            if ok:
                allowed.append(g)
        g = rng.choice(allowed)
        if g == 0:
            continue
        exps[v] = (exps[v] + g) % 4
        for w in range(n):
            k = table[v][w]
            if k:
                e = (_EXP_FROM_KIND[k] + g) % 4
                table[v][w] = _KIND_FROM_EXP[e]
                table[w][v] = int(EdgeKind(_KIND_FROM_EXP[e]).flipped())
    out = MixedGraph(n, tuple(tuple(r) for r in table))
    return out, SwitchDiagonal.from_exponents(exps)


@dataclass(frozen=True)
class Cut:
    """Vertex bipartition cut whose crossing edges all agree in kind.

    ``direction`` is "undirected", "forward" (all arcs side_u -> side_w) or
    "backward" (all arcs side_w -> side_u).
    """

    side_u: tuple[int, ...]
    side_w: tuple[int, ...]
    crossing: tuple[tuple[int, int, EdgeKind], ...]  # (u in U, w in W, kind from u)
    direction: str


def coincident_cuts(m: MixedGraph) -> list[Cut]:
    """All coincident cuts from vertex bipartitions (vertex 0 kept in side_u).

    Bounded to n <= 12 since all 2^(n-1) bipartitions are scanned.  Cuts
    with no crossing edges are skipped.
    """
    if m.n > 12:
        raise ValueError("coincident cut enumeration is limited to n <= 12")
    if m.n < 2:
        return []
    cuts = []
    rest = list(range(1, m.n))
    for mask in range(2 ** (m.n - 1)):
        side_u = [0] + [v for i, v in enumerate(rest) if mask >> i & 1]
        side_w = [v for i, v in enumerate(rest) if not mask >> i & 1]
        if not side_w:
            continue
        crossing = []
        kinds_seen = set()
        for u in side_u:
            for w in side_w:
                k = m.kinds[u][w]
                if k:
                    kinds_seen.add(k)
                    crossing.append((u, w, EdgeKind(k)))
        if not crossing or len(kinds_seen) != 1:
            continue
        k = kinds_seen.pop()
        direction = {
            int(EdgeKind.UNDIRECTED): "undirected",
            int(EdgeKind.ARC_OUT): "forward",
            int(EdgeKind.ARC_IN): "backward",
        }[int(k)]
        cuts.append(Cut(tuple(side_u), tuple(side_w), tuple(crossing), direction))
    return cuts


def x_switch(m: MixedGraph, cut: Cut) -> MixedGraph:
    """Switch across a coincident cut.

    Directed crossing arcs become undirected; an undirected crossing rotates
    to forward arcs (so the operation inverts itself on forward cuts).  The
    spectrum is preserved, which is asserted via the exact characteristic
    polynomial.
    """
    # Revalidate the cut against m.
    sides = set(cut.side_u) | set(cut.side_w)
    if sides != set(range(m.n)) or set(cut.side_u) & set(cut.side_w):
        raise ValueError("cut sides must bipartition the vertex set")
    expected = []
    kinds_seen = set()
    for u in cut.side_u:
        for w in cut.side_w:
            k = m.kinds[u][w]
            if k:
                kinds_seen.add(k)
                expected.append((u, w, EdgeKind(k)))
    if not expected or len(kinds_seen) != 1:
        raise ValueError("cut is not coincident in this graph")
    if tuple(expected) != cut.crossing:
        raise ValueError("cut does not match this graph")
    k = kinds_seen.pop()
    unit = {
        int(EdgeKind.ARC_OUT): 1j,      # i rotates i -> 1
        int(EdgeKind.ARC_IN): -1j,      # -i rotates -i -> 1
        int(EdgeKind.UNDIRECTED): -1j,  # -i rotates 1 -> i (forward)
    }[int(k)]
    units = [1] * m.n
    for w in cut.side_w:
        units[w] = unit
    out = apply_switch(m, SwitchDiagonal(units))
    from .spectra import char_poly  # local import to avoid a module cycle

    if char_poly(out) != char_poly(m):
        raise AssertionError("x-switch changed the characteristic polynomial")
    return out


@dataclass(frozen=True)
class ChordlessCycle:
    """Witness that a graph is not chordal: an induced cycle of length >= 4."""

    vertices: tuple[int, ...]


class NotChordalError(ValueError):
    def __init__(self, cycle: ChordlessCycle) -> None:
        super().__init__(f"graph is not chordal: chordless cycle {cycle.vertices}")
        self.cycle = cycle


class BadTriangleError(ValueError):
    def __init__(self, triangle: tuple[int, int, int]) -> None:
        super().__init__(
            f"triangle {triangle} does not have holonomy one; "
            "the graph cannot switch to its underlying graph"
        )
        self.triangle = triangle


def _adjacent(g: MixedGraph, u: int, v: int) -> bool:
    return g.kinds[u][v] != 0


def _find_chordless_cycle(g: MixedGraph) -> ChordlessCycle | None:
    """Search a chordless cycle of length >= 4 (the non-chordality witness).

    For every vertex v with two non-adjacent neighbors x, y, a shortest x-y
    path avoiding the rest of N[v] closes into a chordless cycle through v.
    """
    n = g.n
    for v in range(n):
        nv = [w for w in range(n) if _adjacent(g, v, w)]
        for ai in range(len(nv)):
            for bi in range(ai + 1, len(nv)):
                x, y = nv[ai], nv[bi]
                if _adjacent(g, x, y):
                    continue
                banned = {v} | {w for w in nv if w not in (x, y)}
                # BFS from x to y outside banned vertices.
                prev = {x: None}
                queue = [x]
                while queue:
                    cur = queue.pop(0)
                    if cur == y:
                        break
                    for w in range(n):
                        if w in banned or w in prev or not _adjacent(g, cur, w):
                            continue
                        prev[w] = cur
                        queue.append(w)
                if y not in prev:
                    continue
                path = []
                cur = y
                while cur is not None:
                    path.append(cur)
                    cur = prev[cur]
                cycle = tuple([v] + path[::-1])
                return ChordlessCycle(cycle)
    return None


def perfect_elimination_ordering(
    g: MixedGraph,
) -> tuple[int, ...] | ChordlessCycle:
    """Maximum-cardinality-search ordering, verified, or a chordless cycle.

    The input must be undirected.  On a chordal graph the returned ordering
    (v_1, ..., v_n) satisfies: the neighbors of v_i among v_{i+1}, ..., v_n
    form a clique.  On a non-chordal graph a ChordlessCycle witness of
    length >= 4 is returned instead.
    """
    if not g.is_undirected():
        raise ValueError("perfect elimination ordering is defined on undirected graphs")
    n = g.n
    weights = [0] * n
    picked = [False] * n
    selection = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not picked[v] and (best == -1 or weights[v] > weights[best]):
                best = v
        picked[best] = True
        selection.append(best)
        for w in range(n):
            if not picked[w] and _adjacent(g, best, w):
                weights[w] += 1
    peo = tuple(reversed(selection))
    position = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = [w for w in peo[i + 1 :] if _adjacent(g, v, w)]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not _adjacent(g, later[a], later[b]):
                    witness = _find_chordless_cycle(g)
                    if witness is None:
                        raise RuntimeError(
                            "PEO verification failed but no chordless cycle found"
                        )
                    return witness
    return peo


def normalize_chordal(m: MixedGraph) -> SwitchDiagonal:
    """Diagonal switching a chordal mixed graph onto its underlying graph.

    Works when the underlying graph is chordal and every triangle has
    holonomy one.  Vertices are inserted in reverse perfect elimination
    order while maintaining a bipartition (U, W) of the processed part of
    the partially switched graph: edges inside U and inside W are
    undirected and every crossing edge is an arc from U to W.  A new vertex
    sees a clique, so its edges toward U share one value alpha and toward W
    one value beta with alpha * conj(beta) = -i; the valid patterns
    (alpha, beta) = (1, i) and (-i, 1) put it in U or W respectively.  A
    final X-switch on (U, W) makes everything undirected.

    Raises NotChordalError or BadTriangleError with witnesses.
    """
    g = underlying_graph(m)
    peo = perfect_elimination_ordering(g)
    if isinstance(peo, ChordlessCycle):
        raise NotChordalError(peo)
    n = m.n
    exps = [0] * n
    in_u = [False] * n
    in_w = [False] * n
    processed: list[int] = []
    for v in reversed(peo):
        q_u = [w for w in processed if in_u[w] and _adjacent(m, v, w)]
        q_w = [w for w in processed if in_w[w] and _adjacent(m, v, w)]
        # Edge value exponents each neighbor would see if e_v were 0.
        a = b = None
        for w in q_u:
            t = (_EXP_FROM_KIND[m.kinds[v][w]] - exps[w]) % 4
            if a is None:
                a = t
            elif t != a:
                raise BadTriangleError((v, q_u[0], w))
        for w in q_w:
            t = (_EXP_FROM_KIND[m.kinds[v][w]] - exps[w]) % 4
            if b is None:
                b = t
            elif t != b:
                raise BadTriangleError((v, q_w[0], w))
        if a is not None and b is not None and (b - a) % 4 != 1:
            # Cross triangle (v, u, w) with crossing arc u -> w has holonomy
            # i^(a + 1 - b) != 1.
            raise BadTriangleError((v, q_u[0], q_w[0]))
        has_w = any(in_w[w] for w in processed)
        if a is None and b is None:
            in_u[v] = True  # isolated within the processed part
        elif not has_w:
            # Whole processed part is undirected (W empty), q_w is empty.
            if a == 0:
                in_u[v] = True
            elif a == 1:
                # v sends arcs to all its neighbors: v forms its own side and
                # everything processed becomes W.
                for w in processed:
                    in_w[w] = in_u[w] or in_w[w]
                    in_u[w] = False
                in_u[v] = True
            elif a == 3:
                in_w[v] = True  # all arcs point at v: v starts the W side
            else:
                # a == 2: the accumulated diagonal anti-aligned the pencil;
                # rotate v instead (this case is unreachable without the
                # accumulated units, see the module docstring).
                exps[v] = 2
                in_u[v] = True
        else:
            if a is None:
                if b == 0:
                    in_w[v] = True
                elif b == 1:
                    in_u[v] = True
                else:
                    exps[v] = (1 - b) % 4  # rotate so v -> W arcs remain
                    in_u[v] = True
            elif b is None:
                if a == 0:
                    in_u[v] = True
                elif a == 3:
                    in_w[v] = True  # arcs U -> v keep the cut orientation
                else:
                    exps[v] = (-a) % 4
                    in_u[v] = True
            else:
                # Both sides present; (a, b) rotates onto (0, 1) or (3, 0).
                if a == 0:
                    in_u[v] = True
                elif b == 0:
                    in_w[v] = True
                else:
                    exps[v] = (-a) % 4
                    in_u[v] = True
        processed.append(v)
    # Final X-switch: multiplying W by i turns every crossing arc undirected.
    for v in range(n):
        if in_w[v]:
            exps[v] = (exps[v] + 1) % 4
    d = SwitchDiagonal.from_exponents(exps)
    if apply_switch(m, d) != g:
        raise AssertionError("normalization did not reach the underlying graph")
    return d
