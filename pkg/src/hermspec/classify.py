"""Structural classification of mixed graphs against spectral thresholds.

The decision procedures here implement the structure theorems behind two
exact predicates on connected mixed graphs M:

* ``classify_sqrt2``: the smallest Hermitian eigenvalue exceeds -sqrt(2)
  exactly when M is an oriented complete graph K_n[s, t] (two undirected
  cliques with all arcs crossing one way); the non-strict variant adds the
  holonomy -1 orientations of the 4-cycle once n >= 4.
* ``classify_threshold``: the smallest eigenvalue exceeds -(1+sqrt5)/2
  exactly when M falls into one of four families: a pinned catalog of
  orientations of four small graphs (H1), a coalescence of two oriented
  cliques at a cut vertex (H2 with both parts of size >= 3, H4 when one
  part is a single edge), or an oriented complete graph (H3).

Every verdict is backed by a certificate: accepted graphs carry enough data
to rebuild them from the family constructors, rejected graphs carry an
induced subgraph whose exact eigenvalue comparison already fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations

from .catalog import sporadic_underlying
from .graphs import (
    EdgeKind,
    MixedGraph,
    build,
    complete_graph,
    connected_components,
    disjoint_union,
    induced,
    is_connected,
    join,
    make_knst,
    path_graph,
    star_graph,
    underlying_graph,
)
from .polynomials import Trichotomy, compare_min_root
from .quadratic import NEG_GOLDEN, NEG_SQRT2
from .spectra import compare_lambda_min, eigenvalues, f_cubic
from .switching import SwitchDiagonal, switching_equivalent

__all__ = [
    "TriangleType",
    "QuadTag",
    "QuadClass",
    "Family",
    "KnstMatch",
    "NotKnst",
    "RejectWitness",
    "Certificate",
    "Sqrt2Verdict",
    "triangle_type",
    "quad_class",
    "find_forbidden_triangle",
    "find_forbidden_quadrangle",
    "all_triangles_safe",
    "all_quads_safe",
    "recognize_knst",
    "find_induced",
    "cograph_join_split",
    "underlying_family",
    "FamilyMatch",
    "classify_threshold",
    "classify_sqrt2",
    "FORBIDDEN_SUBGRAPHS",
]

# i-exponent of the Hermitian entry for each stored kind code.
_KEXP = (None, 0, 1, 3)


class TriangleType(Enum):
    """The seven mixed triangles, named by arc count and shape.

    Smallest eigenvalues: -1 for the three unit-holonomy shapes (K3, K3_22,
    K3_23), -2 for the holonomy -1 shape (K3_21), -sqrt(3) for the four
    imaginary-holonomy shapes.
    """

    K3 = "K3"        # all undirected
    K3_1 = "K3_1"    # one arc
    K3_21 = "K3_21"  # two arcs in series (holonomy -1)
    K3_22 = "K3_22"  # two arcs into a common head
    K3_23 = "K3_23"  # two arcs out of a common tail
    K3_31 = "K3_31"  # directed 3-cycle
    K3_32 = "K3_32"  # three arcs, not a directed cycle


#: Exact smallest eigenvalue descriptions per triangle type.
TRIANGLE_LAMBDA = {
    TriangleType.K3: -1.0,
    TriangleType.K3_1: -(3 ** 0.5),
    TriangleType.K3_21: -2.0,
    TriangleType.K3_22: -1.0,
    TriangleType.K3_23: -1.0,
    TriangleType.K3_31: -(3 ** 0.5),
    TriangleType.K3_32: -(3 ** 0.5),
}

#: Triangle shapes that keep the smallest eigenvalue at -1 (holonomy one).
SAFE_TRIANGLES = frozenset(
    {TriangleType.K3, TriangleType.K3_22, TriangleType.K3_23}
)


def _triangle_holonomy_exp(m: MixedGraph, u: int, v: int, w: int) -> int:
    return (
        _KEXP[m.kinds[u][v]] + _KEXP[m.kinds[v][w]] + _KEXP[m.kinds[w][u]]
    ) % 4


def triangle_type(t: MixedGraph) -> TriangleType:
    """Type of a 3-vertex mixed graph whose underlying graph is a triangle."""
    if t.n != 3 or any(t.kinds[u][v] == 0 for u in range(3) for v in range(3) if u != v):
        raise ValueError("input must be a mixed triangle")
    und = sum(
        1 for u in range(3) for v in range(u + 1, 3) if t.kinds[u][v] == EdgeKind.UNDIRECTED
    )
    if und == 3:
        return TriangleType.K3
    if und == 2:
        return TriangleType.K3_1
    if und == 1:
        hol = _triangle_holonomy_exp(t, 0, 1, 2)
        if hol == 2:
            return TriangleType.K3_21
        # Unit holonomy: locate the vertex off the undirected edge.
        for z in range(3):
            x, y = [v for v in range(3) if v != z]
            if t.kinds[x][y] == EdgeKind.UNDIRECTED:
                if t.kinds[x][z] == EdgeKind.ARC_OUT:
                    return TriangleType.K3_22  # x -> z and y -> z
                return TriangleType.K3_23      # z -> x and z -> y
        raise AssertionError("unreachable")
    # Three arcs: a directed cycle or not.
    outdeg = [sum(1 for v in range(3) if t.kinds[u][v] == EdgeKind.ARC_OUT) for u in range(3)]
    return TriangleType.K3_31 if max(outdeg) == 1 else TriangleType.K3_32


class QuadTag(Enum):
    """Orientation classes of a quadrangle (underlying 4-cycle) by holonomy.

    Holonomy -1 splits by shape into the three types whose smallest
    eigenvalue is -sqrt(2); no other holonomy -1 shape exists.  Holonomy +1
    puts the smallest eigenvalue at -2, imaginary holonomy at -sqrt(2+sqrt2).
    """

    C4_1 = "C4_1"            # two arcs on adjacent cycle edges, same sense
    C4_2 = "C4_2"            # two arcs on opposite cycle edges, same sense
    C4_3 = "C4_3"            # four arcs, exactly one against the others
    PLUS_ONE = "plus-one"    # holonomy +1
    IMAGINARY = "imaginary"  # holonomy +-i


QUAD_LAMBDA = {
    QuadTag.C4_1: -(2 ** 0.5),
    QuadTag.C4_2: -(2 ** 0.5),
    QuadTag.C4_3: -(2 ** 0.5),
    QuadTag.PLUS_ONE: -2.0,
    QuadTag.IMAGINARY: -((2 + 2 ** 0.5) ** 0.5),
}

#: Quadrangle classes with smallest eigenvalue -sqrt(2) (holonomy -1).
SAFE_QUADS = frozenset({QuadTag.C4_1, QuadTag.C4_2, QuadTag.C4_3})


@dataclass(frozen=True)
class QuadClass:
    tag: QuadTag
    holonomy: complex
    cycle: tuple[int, int, int, int]


def _cycle_order4(m: MixedGraph, vs: tuple[int, ...]) -> tuple[int, ...] | None:
    """Cyclic order of a 4-subset inducing a quadrangle, else None."""
    sub = [v for v in vs]
    deg = {}
    edges = 0
    for u in sub:
        d = sum(1 for v in sub if v != u and m.kinds[u][v])
        deg[u] = d
        edges += d
    if edges != 8 or any(d != 2 for d in deg.values()):
        return None
    a = sub[0]
    nbrs = [v for v in sub if v != a and m.kinds[a][v]]
    opp = [v for v in sub if v != a and v not in nbrs][0]
    return (a, nbrs[0], opp, nbrs[1])


def quad_class(q: MixedGraph) -> QuadClass:
    """Classify a 4-vertex mixed graph whose underlying graph is a 4-cycle."""
    if q.n != 4:
        raise ValueError("input must have 4 vertices")
    cyc = _cycle_order4(q, (0, 1, 2, 3))
    if cyc is None:
        raise ValueError("underlying graph is not a quadrangle")
    a, b, c, d = cyc
    exp = (
        _KEXP[q.kinds[a][b]] + _KEXP[q.kinds[b][c]]
        + _KEXP[q.kinds[c][d]] + _KEXP[q.kinds[d][a]]
    ) % 4
    hol = (1 + 0j, 1j, -1 + 0j, -1j)[exp]
    if exp == 0:
        return QuadClass(QuadTag.PLUS_ONE, hol, cyc)
    if exp != 2:
        return QuadClass(QuadTag.IMAGINARY, hol, cyc)
    arcs = [
        (x, y) for x, y in ((a, b), (b, c), (c, d), (d, a))
        if q.kinds[x][y] != EdgeKind.UNDIRECTED
    ]
    if len(arcs) == 4:
        return QuadClass(QuadTag.C4_3, hol, cyc)
    if len(arcs) == 2:
        shared = set(arcs[0]) & set(arcs[1])
        tag = QuadTag.C4_1 if shared else QuadTag.C4_2
        return QuadClass(tag, hol, cyc)
    raise AssertionError("holonomy -1 quadrangle with an odd arc count")


def find_forbidden_triangle(m: MixedGraph) -> tuple[int, int, int] | None:
    """First triangle whose holonomy is not one, scanning lexicographically."""
    n = m.n
    for u in range(n):
        ku = m.kinds[u]
        for v in range(u + 1, n):
            if not ku[v]:
                continue
            kv = m.kinds[v]
            for w in range(v + 1, n):
                if ku[w] and kv[w]:
                    if (_KEXP[ku[v]] + _KEXP[kv[w]] + _KEXP[m.kinds[w][u]]) % 4:
                        return (u, v, w)
    return None


def find_forbidden_quadrangle(m: MixedGraph) -> tuple[int, int, int, int] | None:
    """First induced quadrangle whose holonomy is not -1."""
    for vs in combinations(range(m.n), 4):
        cyc = _cycle_order4(m, vs)
        if cyc is None:
            continue
        a, b, c, d = cyc
        exp = (
            _KEXP[m.kinds[a][b]] + _KEXP[m.kinds[b][c]]
            + _KEXP[m.kinds[c][d]] + _KEXP[m.kinds[d][a]]
        ) % 4
        if exp != 2:
            return cyc
    return None


def all_triangles_safe(m: MixedGraph) -> bool:
    return find_forbidden_triangle(m) is None


def all_quads_safe(m: MixedGraph) -> bool:
    return find_forbidden_quadrangle(m) is None


@dataclass(frozen=True)
class KnstMatch:
    """M equals the oriented complete graph K_n[s, t] with these sides."""

    s: int
    t: int
    s_side: tuple[int, ...]
    t_side: tuple[int, ...]


@dataclass(frozen=True)
class NotKnst:
    reason: str  # "not-complete" or "forbidden-triangle"
    witness: tuple[int, ...] | None


def recognize_knst(m: MixedGraph) -> KnstMatch | NotKnst:
    """Recognize an oriented complete graph constructively.

    Grows the two sides from a mixed triangle with two arcs (the common head
    or tail splits the vertex set), then verifies the full arc pattern, per
    the constructive uniqueness argument.  All-undirected complete graphs
    give t = 0.
    """
    n = m.n
    for u in range(n):
        for v in range(u + 1, n):
            if not m.kinds[u][v]:
                return NotKnst("not-complete", (u, v))
    tri = find_forbidden_triangle(m)
    if tri is not None:
        return NotKnst("forbidden-triangle", tri)
    if n == 1:
        return KnstMatch(1, 0, (0,), ())
    arcs = [(u, v) for u, v, k in m.edges() if k == EdgeKind.ARC_OUT]
    if not arcs:
        return KnstMatch(n, 0, tuple(range(n)), ())
    # Any arc tail sits on the s side, its head on the t side.
    tail, head = arcs[0]
    s_side = sorted(
        w for w in range(n) if w == tail or m.kinds[tail][w] == EdgeKind.UNDIRECTED
    )
    t_side = sorted(w for w in range(n) if m.kinds[tail][w] == EdgeKind.ARC_OUT)
    if len(s_side) + len(t_side) != n:
        return NotKnst("forbidden-triangle", (tail, head, next(
            w for w in range(n) if m.kinds[tail][w] == EdgeKind.ARC_IN
        )))
    for side in (s_side, t_side):
        for x, y in combinations(side, 2):
            if m.kinds[x][y] != EdgeKind.UNDIRECTED:
                return NotKnst("forbidden-triangle", (tail, x, y) if tail not in (x, y) else (head, x, y))
    for x in s_side:
        for y in t_side:
            if m.kinds[x][y] != EdgeKind.ARC_OUT:
                return NotKnst("forbidden-triangle", (x, y, tail if x != tail else head))
    return KnstMatch(len(s_side), len(t_side), tuple(s_side), tuple(t_side))


def find_induced(g: MixedGraph, pattern: MixedGraph) -> tuple[int, ...] | None:
    """Vertices of an induced undirected subgraph isomorphic to ``pattern``.

    Both graphs must be undirected; the pattern is limited to 6 vertices.
    Returns g-vertices ordered to match the pattern's labels, or None.
    """
    if pattern.n > 6:
        raise ValueError("pattern limited to 6 vertices")
    if not g.is_undirected() or not pattern.is_undirected():
        raise ValueError("induced-subgraph search works on undirected graphs")
    k, n = pattern.n, g.n
    chosen: list[int] = []

    def extend() -> bool:
        i = len(chosen)
        if i == k:
            return True
        for cand in range(n):
            if cand in chosen:
                continue
            ok = True
            for j, cj in enumerate(chosen):
                if (pattern.kinds[i][j] != 0) != (g.kinds[cand][cj] != 0):
                    ok = False
                    break
            if ok:
                chosen.append(cand)
                if extend():
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend() else None


@dataclass(frozen=True)
class JoinSplit:
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    g1: MixedGraph
    g2: MixedGraph


def cograph_join_split(g: MixedGraph) -> JoinSplit | tuple[int, ...]:
    """Split a connected undirected graph as a join, or witness an induced P_4.

    A connected graph is a join exactly when its complement is disconnected;
    part1 is the complement component containing the smallest vertex.  When
    no split exists the graph has an induced P_4 (returned as the witness,
    so the result type distinguishes JoinSplit from a 4-tuple).
    """
    if not g.is_undirected():
        raise ValueError("join split works on undirected graphs")
    comp_edges = [
        (u, v, "undirected")
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.kinds[u][v] == 0
    ]
    complement = build(g.n, comp_edges)
    comps = connected_components(complement)
    if len(comps) >= 2:
        part1 = tuple(comps[0])
        part2 = tuple(v for v in range(g.n) if v not in comps[0])
        return JoinSplit(part1, part2, induced(g, part1), induced(g, part2))
    witness = find_induced(g, path_graph(4))
    if witness is None:
        raise ValueError("connected non-join graph must contain an induced P_4")
    return witness


@dataclass(frozen=True)
class FamilyMatch:
    """Shape of an underlying graph relevant to the golden-ratio threshold.

    label is one of "complete", "two-cliques" (two cliques glued to one join
    vertex, sizes s >= t >= 1), "c4", "diamond", "k23-plus-edge",
    "k24-plus-2edges".  For two-cliques, ``parts`` holds the two clique
    vertex sets without the join vertex and ``cut_vertex`` the join vertex.
    """

    label: str
    s: int = 0
    t: int = 0
    cut_vertex: int | None = None
    parts: tuple[tuple[int, ...], ...] = ()


def underlying_family(g: MixedGraph) -> FamilyMatch | None:
    """Recognize the underlying shapes admitting above-threshold orientations.

    The input must be undirected and connected.  Returns None when the graph
    is none of: complete, two cliques joined at one vertex, the 4-cycle, the
    diamond, K_{2,3} plus an edge, K_{2,4} plus two disjoint edges.
    """
    if not g.is_undirected():
        raise ValueError("underlying_family expects an undirected graph")
    if not is_connected(g):
        raise ValueError("underlying_family expects a connected graph")
    n = g.n
    if all(g.kinds[u][v] for u in range(n) for v in range(u + 1, n)):
        return FamilyMatch("complete", s=max(n - 1, 0), t=0)
    # Two cliques sharing one join vertex: the join vertex is adjacent to
    # everything and its removal leaves exactly two cliques.
    for v in range(n):
        if g.degree(v) != n - 1:
            continue
        rest = [w for w in range(n) if w != v]
        sub = induced(g, rest)
        comps = connected_components(sub)
        if len(comps) != 2:
            continue
        if all(
            sub.kinds[a][b] for comp in comps for a in comp for b in comp if a != b
        ):
            c1 = tuple(rest[i] for i in comps[0])
            c2 = tuple(rest[i] for i in comps[1])
            if len(c1) < len(c2):
                c1, c2 = c2, c1
            return FamilyMatch(
                "two-cliques", s=len(c1), t=len(c2), cut_vertex=v, parts=(c1, c2)
            )
    sizes = {"c4": 4, "diamond": 4, "k23-plus-edge": 5, "k24-plus-2edges": 6}
    for label, pattern in sporadic_underlying().items():
        if n == sizes[label] and g.edge_count() == pattern.edge_count():
            if find_induced(g, pattern) is not None:
                return FamilyMatch(label)
    return None


class Family(Enum):
    H1 = "H1"  # catalog of scattered orientations on four small graphs
    H2 = "H2"  # coalescence of two oriented cliques, both parts >= 3 vertices
    H3 = "H3"  # oriented complete graph K_n[s, t]
    H4 = "H4"  # coalescence of an edge with an oriented clique


@dataclass(frozen=True)
class RejectWitness:
    """An induced subgraph certifying rejection.

    kind: "triangle", "quadrangle", "forbidden-subgraph" or "threshold".
    ``comparison`` is the exact trichotomy of the witness subgraph's
    smallest eigenvalue against -(1+sqrt5)/2; by interlacing it bounds the
    full graph.  For kind "threshold" the witness is the whole graph.
    """

    kind: str
    pattern: str
    vertices: tuple[int, ...]
    comparison: Trichotomy
    lambda_min: float


@dataclass(frozen=True)
class H1Details:
    catalog_id: str
    perm: tuple[int, ...]  # relabeling onto the catalog representative
    diagonal: SwitchDiagonal


@dataclass(frozen=True)
class H2H4Details:
    cut_vertex: int
    block1: tuple[int, ...]  # cut vertex first, then the larger clique
    block2: tuple[int, ...]
    knst1: KnstMatch
    knst2: KnstMatch
    s: int
    t: int


@dataclass(frozen=True)
class H3Details:
    knst: KnstMatch


@dataclass(frozen=True)
class Certificate:
    """Verdict of classify_threshold with re-checkable evidence."""

    accepted: bool
    family: Family | None
    details: H1Details | H2H4Details | H3Details | None
    witness: RejectWitness | None
    comparison: Trichotomy | None
    n: int

    def verify(self, m: MixedGraph) -> bool:
        """Re-check the certificate against the graph it was issued for."""
        if self.accepted:
            if self.family is Family.H3:
                knst = self.details.knst
                order = knst.s_side + knst.t_side
                perm = [0] * m.n
                for pos, v in enumerate(order):
                    perm[v] = pos
                return (
                    switching_equivalent(m.relabel(perm), make_knst(knst.s, knst.t))
                    is not None
                )
            if self.family in (Family.H2, Family.H4):
                det = self.details
                if set(det.block1) & set(det.block2) != {det.cut_vertex}:
                    return False
                if set(det.block1) | set(det.block2) != set(range(m.n)):
                    return False
                for a in det.block1:
                    for b in det.block2:
                        if a != det.cut_vertex and b != det.cut_vertex and m.kinds[a][b]:
                            return False
                for block, knst in ((det.block1, det.knst1), (det.block2, det.knst2)):
                    sub = induced(m, block)
                    match = recognize_knst(sub)
                    if not isinstance(match, KnstMatch):
                        return False
                return (
                    compare_min_root(f_cubic(det.s, det.t), NEG_GOLDEN)
                    is Trichotomy.GREATER
                )
            if self.family is Family.H1:
                from .catalog import load_builtin

                record = load_builtin().by_id(self.details.catalog_id)
                if record is None:
                    return False
                relabeled = m.relabel(list(self.details.perm))
                from .switching import apply_switch

                return apply_switch(relabeled, self.details.diagonal) == record.graph()
            return False
        if self.witness is None:
            return False
        if self.witness.kind == "threshold":
            sub = m
        else:
            sub = induced(m, self.witness.vertices)
        verdict = compare_lambda_min(sub, NEG_GOLDEN)
        return verdict is self.witness.comparison and verdict is not Trichotomy.GREATER

    def summary(self) -> str:
        if self.accepted:
            fam = self.family.value
            if self.family is Family.H3:
                return f"accept {fam} s={self.details.knst.s} t={self.details.knst.t}"
            if self.family in (Family.H2, Family.H4):
                return (
                    f"accept {fam} cut={self.details.cut_vertex}"
                    f" s={self.details.s} t={self.details.t}"
                )
            return f"accept {fam} catalog={self.details.catalog_id}"
        w = self.witness
        where = ",".join(str(v) for v in w.vertices)
        return (
            f"reject: induced {w.pattern} at ({where}),"
            f" exact {w.comparison.value}, lambda_min {w.lambda_min:.10f}"
        )


#: The eight undirected graphs forcing the smallest eigenvalue to the
#: threshold or below in every orientation, searched smallest first.
FORBIDDEN_SUBGRAPHS: tuple[tuple[str, MixedGraph], ...] = (
    ("P_4", path_graph(4)),
    ("K_{1,3}", star_graph(3)),
    ("K_{2,3}", join(build(2, []), build(3, []))),
    ("K_1 v K_{2,2}", join(build(1, []), join(build(2, []), build(2, [])))),
    ("K_2 v 3K_1", join(complete_graph(2), build(3, []))),
    (
        "K_2 v (K_2+K_1)",
        join(complete_graph(2), disjoint_union(complete_graph(2), build(1, []))),
    ),
    ("K_2 v K_{1,2}", join(complete_graph(2), star_graph(2))),
    ("2K_1 v K_3", join(build(2, []), complete_graph(3))),
)


def _witness_from_subgraph(
    m: MixedGraph, kind: str, pattern: str, vertices: tuple[int, ...]
) -> RejectWitness:
    sub = m if kind == "threshold" else induced(m, vertices)
    comparison = compare_lambda_min(sub, NEG_GOLDEN)
    lam = eigenvalues(sub).lambda_min
    return RejectWitness(kind, pattern, vertices, comparison, lam)


def _match_catalog(m: MixedGraph, label: str) -> H1Details | None:
    from .catalog import load_builtin

    catalog = load_builtin()
    canon = catalog.underlying_graph(label)
    iso = find_induced(underlying_graph(m), underlying_graph(canon))
    if iso is None:
        return None
    # iso maps canon labels to m vertices; invert to relabel m onto canon.
    base = [0] * m.n
    for canon_v, m_v in enumerate(iso):
        base[m_v] = canon_v
    relabeled = m.relabel(base)
    for record in catalog.by_underlying(label):
        target = record.graph()
        for aut in _automorphisms(underlying_graph(canon)):
            candidate = relabeled.relabel(list(aut))
            d = switching_equivalent(candidate, target)
            if d is not None:
                total = tuple(aut[base[v]] for v in range(m.n))
                return H1Details(record.rec_id, total, d)
    return None


@lru_cache(maxsize=256)
def _automorphisms_cached(encoded: str, n: int) -> tuple[tuple[int, ...], ...]:
    kinds = tuple(
        tuple(int(encoded[u * n + v]) for v in range(n)) for u in range(n)
    )
    g = MixedGraph(n, kinds)
    outs = []
    for perm in permutations(range(n)):
        ok = True
        for u in range(n):
            for v in range(u + 1, n):
                if (g.kinds[u][v] != 0) != (g.kinds[perm[u]][perm[v]] != 0):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            outs.append(perm)
    return tuple(outs)


def _automorphisms(g: MixedGraph) -> tuple[tuple[int, ...], ...]:
    """All adjacency-preserving relabelings of an undirected graph (n <= 8)."""
    if g.n > 8:
        raise ValueError("automorphism enumeration limited to n <= 8")
    return _automorphisms_cached(g.encode(), g.n)


def classify_threshold(m: MixedGraph, confirm: bool = True) -> Certificate:
    """Decide whether the smallest eigenvalue exceeds -(1+sqrt5)/2, structurally.

    Pipeline: reject on any triangle with holonomy != 1 or quadrangle with
    holonomy != -1 (their smallest eigenvalues already fail, so interlacing
    rejects); otherwise match the underlying graph against the families and
    either build an acceptance certificate or find a forbidden subgraph.

    With ``confirm=True`` (default) accepted certificates also carry the
    exact comparison of the full graph as a cross-check; the census turns
    this off and re-verifies externally.
    """
    if m.n == 0:
        raise ValueError("empty graph cannot be classified")
    if not is_connected(m):
        raise ValueError("classification expects a connected graph")
    tri = find_forbidden_triangle(m)
    if tri is not None:
        ttype = triangle_type(induced(m, tri))
        return Certificate(
            False, None, None,
            _witness_from_subgraph(m, "triangle", ttype.value, tri),
            None, m.n,
        )
    quad = find_forbidden_quadrangle(m)
    if quad is not None:
        qtag = quad_class(induced(m, quad)).tag
        return Certificate(
            False, None, None,
            _witness_from_subgraph(m, "quadrangle", qtag.value, quad),
            None, m.n,
        )
    g = underlying_graph(m)
    fam = underlying_family(g)
    if fam is None:
        for name, pattern in FORBIDDEN_SUBGRAPHS:
            hit = find_induced(g, pattern)
            if hit is not None:
                return Certificate(
                    False, None, None,
                    _witness_from_subgraph(m, "forbidden-subgraph", name, hit),
                    None, m.n,
                )
        raise RuntimeError(
            "graph outside all families contains no forbidden subgraph; "
            "this contradicts the classification theorem"
        )
    if fam.label == "complete":
        match = recognize_knst(m)
        if not isinstance(match, KnstMatch):
            raise RuntimeError("complete graph with safe triangles must be K_n[s,t]")
        comparison = compare_lambda_min(m, NEG_GOLDEN) if confirm else None
        return Certificate(True, Family.H3, H3Details(match), None, comparison, m.n)
    if fam.label == "two-cliques":
        c1, c2 = fam.parts
        bound = compare_min_root(f_cubic(fam.s, fam.t), NEG_GOLDEN)
        if bound is not Trichotomy.GREATER:
            return Certificate(
                False, None, None,
                _witness_from_subgraph(m, "threshold", "two-cliques", tuple(range(m.n))),
                None, m.n,
            )
        block1 = (fam.cut_vertex,) + c1
        block2 = (fam.cut_vertex,) + c2
        k1 = recognize_knst(induced(m, block1))
        k2 = recognize_knst(induced(m, block2))
        if not isinstance(k1, KnstMatch) or not isinstance(k2, KnstMatch):
            raise RuntimeError("clique block with safe triangles must be K_n[s,t]")
        family = Family.H4 if fam.t == 1 else Family.H2
        comparison = compare_lambda_min(m, NEG_GOLDEN) if confirm else None
        return Certificate(
            True, family,
            H2H4Details(fam.cut_vertex, block1, block2, k1, k2, fam.s, fam.t),
            None, comparison, m.n,
        )
    details = _match_catalog(m, fam.label)
    if details is None:
        raise RuntimeError(
            f"orientation of {fam.label} passed the local checks "
            "but is missing from the catalog"
        )
    comparison = compare_lambda_min(m, NEG_GOLDEN) if confirm else None
    return Certificate(True, Family.H1, details, None, comparison, m.n)


@dataclass(frozen=True)
class Sqrt2Verdict:
    """Outcome of the -sqrt(2) classification."""

    accepted: bool
    strict: bool
    family: str | None   # "Knst" or "C4" when accepted
    knst: KnstMatch | None
    comparison: Trichotomy
    note: str | None = None

    def summary(self) -> str:
        if self.accepted:
            if self.family == "Knst":
                return f"accept Knst s={self.knst.s} t={self.knst.t}"
            return "accept C4 (holonomy -1 quadrangle)"
        text = f"reject: exact {self.comparison.value} at -sqrt(2)"
        if self.note:
            text += f" ({self.note})"
        return text


def classify_sqrt2(m: MixedGraph, strict: bool = True) -> Sqrt2Verdict:
    """Classify against -sqrt(2).

    strict=True decides lambda_min > -sqrt(2): true exactly for oriented
    complete graphs.  strict=False decides membership in the known families
    with lambda_min >= -sqrt(2) (n >= 4): oriented complete graphs and the
    holonomy -1 quadrangles; for n <= 3 the non-strict theorem does not
    apply and the verdict reports the exact comparison with a scope note.
    """
    if m.n == 0:
        raise ValueError("empty graph cannot be classified")
    if not is_connected(m):
        raise ValueError("classification expects a connected graph")
    match = recognize_knst(m)
    if isinstance(match, KnstMatch):
        return Sqrt2Verdict(
            True, strict, "Knst", match, compare_lambda_min(m, NEG_SQRT2)
        )
    if not strict and m.n == 4:
        cyc = _cycle_order4(m, (0, 1, 2, 3))
        if cyc is not None and quad_class(m).tag in SAFE_QUADS:
            return Sqrt2Verdict(
                True, strict, "C4", None, compare_lambda_min(m, NEG_SQRT2)
            )
    note = None
    if not strict and m.n < 4:
        note = "outside the n >= 4 scope of the non-strict classification"
    return Sqrt2Verdict(
        False, strict, None, None, compare_lambda_min(m, NEG_SQRT2), note
    )
