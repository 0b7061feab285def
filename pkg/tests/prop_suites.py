"""Seeded property suites shared by the unit tests and the acceptance gate.

Each suite runs ``cases`` randomized checks and returns the number actually
executed, so callers can assert the advertised volume.  Any failure raises
AssertionError with the offending graph encoded in the message.
"""

from __future__ import annotations

import random

from hermspec.graphs import EdgeKind, MixedGraph, build
from hermspec.spectra import (
    EquitablePartition,
    char_poly,
    eigenvalues,
    interlacing_holds,
    quotient_contained_exactly,
    validate_equitable,
)
from hermspec.switching import apply_switch, normalize_chordal, random_switch

_KINDS = [EdgeKind.UNDIRECTED, EdgeKind.ARC_OUT, EdgeKind.ARC_IN]


def random_mixed(rng: random.Random, n: int, p: float = 0.5) -> MixedGraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.choice(_KINDS)))
    return build(n, edges)


def random_tree(rng: random.Random, n: int) -> MixedGraph:
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v, rng.choice(_KINDS)))
    return build(n, edges)


def random_chordal(rng: random.Random, n: int) -> MixedGraph:
    """Connected chordal graph built by inserting simplicial vertices."""
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        # Grow a clique among the existing vertices, then attach v to it.
        clique = [rng.randrange(v)]
        others = [w for w in range(v) if w != clique[0]]
        rng.shuffle(others)
        for w in others:
            if all(w in adj[c] for c in clique) and rng.random() < 0.6:
                clique.append(w)
        for w in clique:
            adj[v].add(w)
            adj[w].add(v)
    edges = [(u, v, "undirected") for u in range(n) for v in adj[u] if u < v]
    return build(n, edges)


def suite_switch_invariance(seed: int = 101, cases: int = 1000) -> int:
    """Characteristic polynomials are exactly invariant under switching."""
    rng = random.Random(seed)
    for _ in range(cases):
        m = random_mixed(rng, rng.randrange(1, 9))
        out, d = random_switch(m, rng)
        assert apply_switch(m, d) == out, m.encode()
        assert char_poly(out) == char_poly(m), m.encode()
    return cases


def suite_interlacing(seed: int = 102, cases: int = 1000) -> int:
    """Induced-subgraph eigenvalues interlace the full spectrum."""
    rng = random.Random(seed)
    for _ in range(cases):
        n = rng.randrange(2, 9)
        m = random_mixed(rng, n, p=rng.uniform(0.2, 0.9))
        subset = rng.sample(range(n), rng.randrange(1, n))
        assert interlacing_holds(m, subset), (m.encode(), subset)
    return cases


def suite_forest_spectra(seed: int = 103, cases: int = 1000) -> int:
    """Every orientation of a forest keeps the underlying spectrum (1e-9)."""
    from hermspec.graphs import underlying_graph

    rng = random.Random(seed)
    for _ in range(cases):
        m = random_tree(rng, rng.randrange(1, 11))
        got = eigenvalues(m).eigenvalues
        want = eigenvalues(underlying_graph(m)).eigenvalues
        assert all(abs(a - b) < 1e-9 for a, b in zip(got, want)), m.encode()
    return cases


def suite_chordal_normalization(seed: int = 104, cases: int = 1000) -> int:
    """Switched chordal graphs normalize back onto their underlying graph."""
    from hermspec.graphs import underlying_graph

    rng = random.Random(seed)
    for _ in range(cases):
        base = random_chordal(rng, rng.randrange(1, 9))
        m, _ = random_switch(base, rng)
        d = normalize_chordal(m)
        assert apply_switch(m, d) == underlying_graph(m), m.encode()
    return cases


def suite_equitable_quotients(seed: int = 105, cases: int = 1000) -> int:
    """Two-clique cone graphs: the natural partition is equitable and its
    quotient eigenvalues sit inside the spectrum (exact gcd check)."""
    from hermspec.graphs import complete_graph, disjoint_union, join

    rng = random.Random(seed)
    for _ in range(cases):
        s, t = rng.randrange(1, 6), rng.randrange(1, 6)
        g = join(build(1, []), disjoint_union(complete_graph(s), complete_graph(t)))
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        cells = [
            [perm[0]],
            [perm[1 + i] for i in range(s)],
            [perm[1 + s + i] for i in range(t)],
        ]
        part = validate_equitable(h, cells)
        assert isinstance(part, EquitablePartition), (s, t, perm)
        assert quotient_contained_exactly(part, h) is True, (s, t, perm)
    return cases


ALL_SUITES = (
    ("switch-invariance", suite_switch_invariance),
    ("interlacing", suite_interlacing),
    ("forest-spectra", suite_forest_spectra),
    ("chordal-normalization", suite_chordal_normalization),
    ("equitable-quotients", suite_equitable_quotients),
)
