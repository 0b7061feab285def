from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from hermspec.graphs import (
    EdgeKind,
    build,
    coalescence,
    complete_graph,
    cycle_graph,
    disjoint_union,
    hermitian_matrix,
    join,
    make_knst,
    path_graph,
    star_graph,
)
from hermspec.polynomials import IntPolynomial, Trichotomy
from hermspec.quadratic import NEG_GOLDEN, NEG_SQRT2, NEG_SQRT3
from hermspec.spectra import (
    EquitablePartition,
    EquitableViolation,
    char_poly,
    char_poly_int_matrix,
    compare_lambda_min,
    eigenvalues,
    embed_real,
    f_cubic,
    interlacing_holds,
    phi_cubic,
    quotient_contained_exactly,
    validate_equitable,
)

# ---------------------------------------------------------------------------
# Independent characteristic-polynomial oracle: expand det(xI - H) by the
# Leibniz formula with polynomial coefficients.  Entries are units and n <= 5,
# so complex float arithmetic is exact here.


def _poly_mul(p: list[complex], q: list[complex]) -> list[complex]:
    out = [0j] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _charpoly_leibniz(h: np.ndarray) -> list[int]:
    n = h.shape[0]
    total = [0j] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = [complex(sign)]
        for i in range(n):
            if perm[i] == i:
                term = _poly_mul(term, [-h[i][i], 1])
            else:
                term = _poly_mul(term, [-h[i][perm[i]]])
        for k, c in enumerate(term):
            total[k] += c
    out = []
    for c in total:
        assert abs(c.imag) < 1e-9
        out.append(round(c.real))
    return out


def _random_mixed(rng: random.Random, n: int, p: float = 0.6):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append(
                    (u, v, rng.choice(
                        [EdgeKind.UNDIRECTED, EdgeKind.ARC_OUT, EdgeKind.ARC_IN]
                    ))
                )
    return build(n, edges)


def test_char_poly_matches_leibniz_oracle():
    rng = random.Random(11)
    for _ in range(120):
        m = _random_mixed(rng, rng.randrange(1, 6))
        h = hermitian_matrix(m).to_numpy()
        assert list(char_poly(m).coeffs) == _charpoly_leibniz(h)


def test_char_poly_known_graphs():
    assert char_poly(path_graph(2)).coeffs == (-1, 0, 1)
    assert char_poly(path_graph(4)).coeffs == (1, 0, -3, 0, 1)
    assert char_poly(cycle_graph(4)).coeffs == (0, 0, -4, 0, 1)
    # A directed triangle has holonomy +-i: char poly x^3 - 3x.
    tri = build(3, [(0, 1, "arc"), (1, 2, "arc"), (2, 0, "arc")])
    assert char_poly(tri).coeffs == (0, -3, 0, 1)
    assert char_poly(build(1, [])).coeffs == (0, 1)


def test_float_and_integer_paths_agree():
    from hermspec.spectra import _char_poly_float, _char_poly_pairs

    rng = random.Random(12)
    for _ in range(60):
        m = _random_mixed(rng, rng.randrange(2, 8))
        h = hermitian_matrix(m)
        fast = _char_poly_float(h.to_numpy())
        pairs = [[(int(z.real), int(z.imag)) for z in row] for row in h.entries]
        assert fast == _char_poly_pairs(pairs)


def test_char_poly_large_graph_uses_integer_path():
    # n = 13 bypasses the float fast path entirely; cross-check against the
    # doubled real embedding, whose char poly must be the square.
    rng = random.Random(13)
    m = _random_mixed(rng, 13, p=0.4)
    p = char_poly(m)
    sq = char_poly_int_matrix(embed_real(hermitian_matrix(m)))
    assert sq.coeffs == (p * p).coeffs


def test_embed_real_square_identity():
    rng = random.Random(14)
    for _ in range(40):
        m = _random_mixed(rng, rng.randrange(1, 7))
        p = char_poly(m)
        sq = char_poly_int_matrix(embed_real(hermitian_matrix(m)))
        assert sq.coeffs == (p * p).coeffs


def test_char_poly_int_matrix_validation():
    assert char_poly_int_matrix([[0, 1], [1, 0]]).coeffs == (-1, 0, 1)
    with pytest.raises(ValueError):
        char_poly_int_matrix([[0, 1], [1]])


def test_eigenvalues_summary():
    s = eigenvalues(complete_graph(4))
    assert s.n == 4
    assert s.eigenvalues == tuple(sorted(s.eigenvalues, reverse=True))
    assert s.lambda_max == pytest.approx(3.0)
    assert s.lambda_min == pytest.approx(-1.0)
    assert s.char_poly.degree == 4
    st = eigenvalues(star_graph(3))
    assert st.lambda_min == pytest.approx(-np.sqrt(3))


def test_compare_lambda_min_exact_cases():
    assert compare_lambda_min(path_graph(4), NEG_GOLDEN) is Trichotomy.EQUAL
    assert compare_lambda_min(star_graph(3), NEG_SQRT3) is Trichotomy.EQUAL
    assert compare_lambda_min(complete_graph(3), NEG_SQRT2) is Trichotomy.GREATER
    assert compare_lambda_min(cycle_graph(4), NEG_GOLDEN) is Trichotomy.LESS
    assert compare_lambda_min(build(1, []), -1) is Trichotomy.GREATER
    # Accepts a polynomial directly.
    assert compare_lambda_min(IntPolynomial([-2, 0, 1]), NEG_SQRT2) is Trichotomy.EQUAL
    with pytest.raises(ValueError):
        compare_lambda_min(IntPolynomial([5]), 0)


def test_interlacing_on_samples():
    rng = random.Random(15)
    for _ in range(60):
        n = rng.randrange(2, 7)
        m = _random_mixed(rng, n)
        k = rng.randrange(1, n)
        subset = rng.sample(range(n), k)
        assert interlacing_holds(m, subset)


def test_equitable_partition_two_clique_quotient():
    bowtie = coalescence(complete_graph(3), 0, complete_graph(3), 0)
    part = validate_equitable(bowtie, [[0], [1, 2, 3, 4]])
    assert isinstance(part, EquitablePartition)
    assert part.quotient == ((0j, 4 + 0j), (1 + 0j, 1 + 0j))
    assert part.quotient_is_real()
    assert quotient_contained_exactly(part, bowtie) is True


def test_equitable_violation_witness():
    p3 = path_graph(3)
    bad = validate_equitable(p3, [[0, 1], [2]])
    assert isinstance(bad, EquitableViolation)
    assert bad.cell == 0
    assert bad.expected != bad.actual
    with pytest.raises(ValueError):
        validate_equitable(p3, [[0, 1], [1, 2]])


def test_equitable_imaginary_quotient_returns_none():
    arc = make_knst(1, 1)
    part = validate_equitable(arc, [[0], [1]])
    assert isinstance(part, EquitablePartition)
    assert not part.quotient_is_real()
    assert quotient_contained_exactly(part, arc) is None


def test_phi_cubic_values():
    for n in range(2, 10):
        assert phi_cubic(n)(-1) == 0
    assert phi_cubic(2).coeffs == (-1, -1, 1, 1)
    with pytest.raises(ValueError):
        phi_cubic(1)


def test_f_cubic_is_the_two_clique_factor():
    # (K_s u K_t) joined to one vertex: char poly = f * (x+1)^(s+t-2).
    for s, t in [(2, 3), (3, 3), (4, 2), (5, 1)]:
        g = join(
            build(1, []),
            disjoint_union(complete_graph(s), complete_graph(t)),
        )
        expect = f_cubic(s, t)
        for _ in range(s + t - 2):
            expect = expect * IntPolynomial([1, 1])
        assert char_poly(g).coeffs == expect.coeffs
    with pytest.raises(ValueError):
        f_cubic(0, 3)
