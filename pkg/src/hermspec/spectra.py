"""Spectral computations: exact characteristic polynomials, float eigenvalues,
exact threshold comparisons, interlacing, and equitable partitions.

Every accept/reject decision in the package bottoms out in
``compare_lambda_min``, which is exact: the characteristic polynomial has
integer coefficients (computed by Faddeev-LeVerrier over Gaussian integers)
and root counts against the algebraic thresholds come from Sturm chains
evaluated with exact quadratic arithmetic.  Floating eigenvalues are for
reporting and for cheap certified screening only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graphs import HermitianMatrix, MixedGraph, hermitian_matrix, induced
from .polynomials import (
    IntPolynomial,
    Trichotomy,
    _frac_divmod,
    _frac_normalize,
    _frac_trim,
    compare_min_root,
)
from .quadratic import QuadraticNumber

__all__ = [
    "SpectralSummary",
    "EquitablePartition",
    "EquitableViolation",
    "char_poly",
    "char_poly_int_matrix",
    "eigenvalues",
    "compare_lambda_min",
    "interlacing_holds",
    "validate_equitable",
    "quotient_contained_exactly",
    "phi_cubic",
    "f_cubic",
    "embed_real",
]

_FL_LIMIT = 2**52  # magnitude bound certifying float arithmetic stayed exact


class _FloatOverflow(Exception):
    """Raised when the float fast path cannot certify exactness."""


def _as_matrix(m: MixedGraph | HermitianMatrix) -> HermitianMatrix:
    if isinstance(m, MixedGraph):
        return hermitian_matrix(m)
    return m


def _char_poly_float(h: np.ndarray) -> list[int]:
    """Faddeev-LeVerrier in complex128, certified exact or _FloatOverflow.

    All entries of H are units, so every multiplication is a sign flip or a
    real/imaginary swap (exact); sums and the trace divisions stay exact as
    long as every intermediate Gaussian integer is below 2**53, which is
    checked at each step.
    """
    n = h.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    m = eye.copy()
    coeffs_high_to_low = [1]
    bound = 1.0
    for k in range(1, n + 1):
        if n * bound >= _FL_LIMIT:
            raise _FloatOverflow
        nm = h @ m
        bound = max(
            float(np.max(np.abs(nm.real))), float(np.max(np.abs(nm.imag))), 1.0
        )
        if n * bound >= _FL_LIMIT:
            raise _FloatOverflow
        tr = complex(np.trace(nm))
        if tr.imag != 0.0:
            raise _FloatOverflow
        c = -tr.real / k
        if c != int(c):
            raise _FloatOverflow
        c = int(c)
        coeffs_high_to_low.append(c)
        m = nm + c * eye
        bound = bound + abs(c)
    return coeffs_high_to_low


def _char_poly_pairs(pairs: list[list[tuple[int, int]]]) -> list[int]:
    """Exact Faddeev-LeVerrier over Gaussian integers stored as int pairs."""
    n = len(pairs)
    m = [[(1 if i == j else 0, 0) for j in range(n)] for i in range(n)]
    coeffs_high_to_low = [1]
    for k in range(1, n + 1):
        nm = [[(0, 0)] * n for _ in range(n)]
        for i in range(n):
            hi = pairs[i]
            for j in range(n):
                re = im = 0
                for l in range(n):
                    a, b = hi[l]
                    if a == 0 and b == 0:
                        continue
                    c2, d2 = m[l][j]
                    re += a * c2 - b * d2
                    im += a * d2 + b * c2
                nm[i][j] = (re, im)
        tr_re = sum(nm[i][i][0] for i in range(n))
        tr_im = sum(nm[i][i][1] for i in range(n))
        if tr_im != 0:
            raise ArithmeticError("trace of a Hermitian power must be real")
        q, r = divmod(-tr_re, k)
        if r != 0:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible")
        coeffs_high_to_low.append(q)
        for i in range(n):
            re, im = nm[i][i]
            nm[i][i] = (re + q, im)
        m = nm
    return coeffs_high_to_low


def char_poly(m: MixedGraph | HermitianMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - H), exact integer coefficients.

    Uses the certified complex128 fast path for small matrices and falls
    back to pure integer arithmetic whenever certification fails.
    """
    h = _as_matrix(m)
    if h.n == 0:
        return IntPolynomial([1])
    if h.n <= 12:
        try:
            high_to_low = _char_poly_float(h.to_numpy())
            return IntPolynomial(list(reversed(high_to_low)))
        except _FloatOverflow:
            pass
    pairs = [
        [(int(z.real), int(z.imag)) for z in row] for row in h.entries
    ]
    return IntPolynomial(list(reversed(_char_poly_pairs(pairs))))


def char_poly_int_matrix(rows: Sequence[Sequence[int]]) -> IntPolynomial:
    """Exact characteristic polynomial of an arbitrary integer matrix."""
    n = len(rows)
    if n == 0:
        return IntPolynomial([1])
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    pairs = [[(int(x), 0) for x in row] for row in rows]
    return IntPolynomial(list(reversed(_char_poly_pairs(pairs))))


def _char_poly_fraction_matrix(rows: list[list[Fraction]]) -> list[Fraction]:
    """Faddeev-LeVerrier over Fractions; coefficients constant term first."""
    n = len(rows)
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    high_to_low = [Fraction(1)]
    for k in range(1, n + 1):
        nm = [
            [sum((rows[i][l] * m[l][j] for l in range(n)), Fraction(0)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum((nm[i][i] for i in range(n)), Fraction(0))
        c = -tr / k
        high_to_low.append(c)
        for i in range(n):
            nm[i][i] += c
        m = nm
    return list(reversed(high_to_low))


@dataclass(frozen=True)
class SpectralSummary:
    """Floating spectrum paired with the exact characteristic polynomial."""

    n: int
    eigenvalues: tuple[float, ...]  # descending
    char_poly: IntPolynomial

    @property
    def lambda_min(self) -> float:
        return self.eigenvalues[-1]

    @property
    def lambda_max(self) -> float:
        return self.eigenvalues[0]


def eigenvalues(m: MixedGraph | HermitianMatrix) -> SpectralSummary:
    """Eigenvalues (descending) with consistency checks against the char poly.

    The trace of H is zero, so the eigenvalues must sum to ~0 (1e-9), and
    their product must match the determinant read off the constant
    coefficient (1e-6 relative).  Violations raise RuntimeError.
    """
    h = _as_matrix(m)
    if h.n == 0:
        return SpectralSummary(0, (), IntPolynomial([1]))
    w = np.linalg.eigvalsh(h.to_numpy())
    poly = char_poly(h)
    total = float(np.sum(w))
    if abs(total) > 1e-9 * max(1.0, float(np.max(np.abs(w)))) * h.n:
        raise RuntimeError(f"eigenvalue sum {total} violates zero trace")
    det = (-1) ** h.n * poly.coeffs[0]
    prod = float(np.prod(w))
    if abs(prod - det) > 1e-6 * max(1.0, abs(det)):
        raise RuntimeError(f"eigenvalue product {prod} does not match det {det}")
    return SpectralSummary(h.n, tuple(float(x) for x in w[::-1]), poly)


_COMPARE_CACHE: dict[tuple[tuple[int, ...], QuadraticNumber], Trichotomy] = {}


def compare_lambda_min(
    m: MixedGraph | HermitianMatrix | IntPolynomial,
    c: QuadraticNumber | int | Fraction,
) -> Trichotomy:
    """Exact comparison of the smallest eigenvalue against the threshold c.

    Accepts a graph, a Hermitian matrix, or a characteristic polynomial
    directly.  Everything is decided with integer and quadratic arithmetic;
    no floating point is involved.
    """
    if isinstance(m, IntPolynomial):
        poly = m
    else:
        poly = char_poly(m)
    if poly.degree == 0:
        raise ValueError("empty graph has no smallest eigenvalue")
    if not isinstance(c, QuadraticNumber):
        c = QuadraticNumber(Fraction(c), 0, 2)
    key = (poly.coeffs, c)
    hit = _COMPARE_CACHE.get(key)
    if hit is None:
        hit = compare_min_root(poly, c)
        if len(_COMPARE_CACHE) > 200_000:
            _COMPARE_CACHE.clear()
        _COMPARE_CACHE[key] = hit
    return hit


def interlacing_holds(
    m: MixedGraph, subset: Sequence[int], tol: float = 1e-8
) -> bool:
    """Check eigenvalue interlacing of an induced subgraph within tolerance.

    With eigenvalues descending, every mu_i of the m-vertex subgraph must
    satisfy lambda_i >= mu_i >= lambda_{i + n - m} up to ``tol``.
    """
    sub = induced(m, subset)
    lam = eigenvalues(m).eigenvalues
    mu = eigenvalues(sub).eigenvalues
    n, k = m.n, sub.n
    for i in range(k):
        if mu[i] > lam[i] + tol:
            return False
        if mu[i] < lam[i + n - k] - tol:
            return False
    return True


@dataclass(frozen=True)
class EquitablePartition:
    """A validated equitable partition with its exact quotient matrix."""

    cells: tuple[tuple[int, ...], ...]
    quotient: tuple[tuple[complex, ...], ...]
    char_matrix: tuple[tuple[int, ...], ...]

    def quotient_numpy(self) -> np.ndarray:
        return np.array(self.quotient, dtype=np.complex128)

    def quotient_is_real(self) -> bool:
        return all(z.imag == 0 for row in self.quotient for z in row)


@dataclass(frozen=True)
class EquitableViolation:
    """Witness that a partition is not equitable: this vertex's row sum
    toward ``target_cell`` differs from its cell's reference sum."""

    vertex: int
    cell: int
    target_cell: int
    expected: complex
    actual: complex


def validate_equitable(
    m: MixedGraph | HermitianMatrix, cells: Sequence[Sequence[int]]
) -> EquitablePartition | EquitableViolation:
    """Validate an equitable partition of the Hermitian adjacency matrix.

    Row sums are compared exactly (Gaussian integers).  On success the
    quotient's eigenvalues are verified to be contained in the spectrum of H
    (float check at 1e-8; the containment is a theorem, so failure raises).
    Not-a-partition input raises ValueError; an unbalanced partition returns
    an EquitableViolation naming the failing vertex and cell pair.
    """
    h = _as_matrix(m)
    cell_tuples = tuple(tuple(c) for c in cells)
    flat = [v for c in cell_tuples for v in c]
    if sorted(flat) != list(range(h.n)) or any(len(c) == 0 for c in cell_tuples):
        raise ValueError("cells must form a partition of the vertex set")
    s = len(cell_tuples)
    quotient = [[0j] * s for _ in range(s)]
    for i, cell in enumerate(cell_tuples):
        for j, other in enumerate(cell_tuples):
            ref = None
            for v in cell:
                total = sum(h.entries[v][w] for w in other)
                if ref is None:
                    ref = total
                elif total != ref:
                    return EquitableViolation(v, i, j, complex(ref), complex(total))
            # The common row sum is the quotient entry b_ij (a Gaussian integer).
            quotient[i][j] = complex(ref)
    quotient_t = tuple(tuple(row) for row in quotient)
    char = tuple(
        tuple(1 if v in cell_tuples[j] else 0 for j in range(s)) for v in range(h.n)
    )
    part = EquitablePartition(cell_tuples, quotient_t, char)
    lam = np.linalg.eigvalsh(h.to_numpy())
    quo = np.linalg.eigvals(part.quotient_numpy())
    for z in quo:
        if min(abs(z - l) for l in lam) > 1e-8:
            raise RuntimeError(
                f"quotient eigenvalue {z} missing from the spectrum"
            )
    return part


def quotient_contained_exactly(
    part: EquitablePartition, m: MixedGraph | HermitianMatrix
) -> bool | None:
    """Exact containment of quotient eigenvalues via polynomial gcd.

    Only available when the quotient matrix is real (rational); returns None
    otherwise.  True when gcd(char(H), char(quotient)) has the quotient's
    full degree, i.e. every quotient eigenvalue is an eigenvalue of H.
    """
    if not part.quotient_is_real():
        return None
    rows = [[Fraction(int(z.real)) for z in row] for row in part.quotient]
    qpoly = _char_poly_fraction_matrix(rows)
    hpoly = [Fraction(c) for c in char_poly(m).coeffs]
    a, b = _frac_trim(list(hpoly)), _frac_trim(list(qpoly))
    while b != [Fraction(0)]:
        _, r = _frac_divmod(a, b)
        a, b = b, r
    g = _frac_normalize(a)
    return len(g) == len(qpoly)


def phi_cubic(n: int) -> IntPolynomial:
    """The cubic x^3 + (3-n)x^2 + (1-n)x - 1 used in the threshold analysis.

    It satisfies phi(-1) = 0 and phi(-(1+sqrt5)/2) = 1 - n for all n >= 2.
    The classifier's block bound uses ``f_cubic``, which is the actual
    block factor; phi is kept for the one-parameter family n = s + t.
    """
    if n < 2:
        raise ValueError("phi is defined for n >= 2")
    return IntPolynomial([-1, 1 - n, 3 - n, 1])


def f_cubic(s: int, t: int) -> IntPolynomial:
    """Characteristic factor of the two-clique quotient.

    The graph made of cliques K_s and K_t fully joined to one extra vertex
    has spectrum {-1 with multiplicity n-3} plus the roots of
    f(x) = x^3 + (2-t-s)x^2 + (st-2t-2s+1)x + (2st-s-t).
    """
    if s < 1 or t < 1:
        raise ValueError("block sizes must be at least 1")
    return IntPolynomial(
        [2 * s * t - s - t, s * t - 2 * t - 2 * s + 1, 2 - t - s, 1]
    )


def embed_real(h: HermitianMatrix) -> list[list[int]]:
    """Real symmetric 2n x 2n embedding [[Re, -Im], [Im, Re]] of H.

    Its characteristic polynomial is the square of char(H); kept as an
    exact cross-check oracle.
    """
    n = h.n
    out = [[0] * (2 * n) for _ in range(2 * n)]
    for u in range(n):
        for v in range(n):
            z = h.entries[u][v]
            re, im = int(z.real), int(z.imag)
            out[u][v] = re
            out[u][n + v] = -im
            out[n + u][v] = im
            out[n + u][n + v] = re
    return out
