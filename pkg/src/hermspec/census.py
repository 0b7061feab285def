"""Brute-force verification of the threshold classifications.

This module plays the role of an independent oracle: it enumerates mixed
graphs exhaustively (all orientations of all connected underlying graphs up
to five vertices, plus targeted six-vertex sweeps), compares the structural
classifier against the exact eigenvalue comparison for every single graph,
and derives the pinned catalog of scattered orientations from scratch.

The six-vertex complete graph has 3^15 = 14,348,907 orientations; these are
handled by a vectorized path that evaluates the triangle-holonomy criterion
and batched eigenvalue bounds in numpy, falling back to exact arithmetic
for anything within a small margin of the threshold.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from multiprocessing import Pool

import numpy as np

from .catalog import (
    Catalog,
    CatalogRecord,
    ReconciliationRow,
    SPORADIC_LABELS,
    sporadic_underlying,
)
from .classify import _automorphisms, classify_threshold
from .graphs import (
    EdgeKind,
    MixedGraph,
    coalescence,
    complete_graph,
    converse,
    decode,
    is_connected,
    underlying_graph,
)
from .polynomials import Trichotomy
from .quadratic import NEG_GOLDEN
from .spectra import char_poly, compare_lambda_min, eigenvalues
from .switching import switching_equivalent

__all__ = [
    "edge_list",
    "orientation_count",
    "orientation",
    "enumerate_orientations",
    "enumerate_connected_graphs",
    "iso_classes",
    "DedupClass",
    "dedup_classes",
    "derive_scattered_catalog",
    "LevelStats",
    "DeepStats",
    "K6Stats",
    "SampleStats",
    "CensusReport",
    "verify_main_theorem",
]

_KIND_OF_DIGIT = (EdgeKind.UNDIRECTED, EdgeKind.ARC_OUT, EdgeKind.ARC_IN)

#: The golden ratio threshold as a float, for numeric prescreens only.
_GOLDEN_F = (1 + 5 ** 0.5) / 2


def edge_list(g: MixedGraph) -> tuple[tuple[int, int], ...]:
    """Sorted vertex pairs carrying an edge; fixes the orientation digit order."""
    return tuple((u, v) for u, v, _ in g.edges())


def orientation_count(g: MixedGraph) -> int:
    return 3 ** g.edge_count()


def orientation(g: MixedGraph, index: int) -> MixedGraph:
    """The index-th orientation of an undirected graph.

    Index digits in base 3 follow ``edge_list`` order, least significant
    first: 0 leaves the edge undirected, 1 directs it low->high, 2 high->low.
    """
    edges = edge_list(g)
    if not 0 <= index < 3 ** len(edges):
        raise ValueError(f"orientation index {index} out of range")
    kinds = [[0] * g.n for _ in range(g.n)]
    rem = index
    for u, v in edges:
        kind = _KIND_OF_DIGIT[rem % 3]
        rem //= 3
        kinds[u][v] = int(kind)
        kinds[v][u] = int(kind.flipped())
    return MixedGraph(g.n, tuple(tuple(row) for row in kinds))


def enumerate_orientations(g: MixedGraph):
    """Yield every orientation of an undirected graph (at most 16 edges)."""
    if not g.is_undirected():
        raise ValueError("can only orient an undirected graph")
    m = g.edge_count()
    if m > 16:
        raise ValueError("orientation enumeration limited to 16 edges")
    for index in range(3 ** m):
        yield orientation(g, index)


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(n), 2))}


def enumerate_connected_graphs(n: int) -> list[MixedGraph]:
    """Connected undirected graphs on exactly n labeled-canonical vertices.

    One representative per isomorphism class, chosen as the lexicographically
    smallest edge bitmask, sorted by (edge count, bitmask).  Limited to
    n <= 7.  Expected counts: 1, 1, 2, 6, 21, 112 for n = 1..6.
    """
    if not 1 <= n <= 7:
        raise ValueError("graph enumeration limited to 1 <= n <= 7")
    if n == 1:
        return [MixedGraph(1, ((0,),))]
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    idx = _pair_index(n)
    masks = np.arange(1 << m, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(m)) & 1
    weights = (np.int64(1) << np.arange(m)).astype(np.int64)
    canon = masks.copy()
    for perm in permutations(range(n)):
        order = [idx[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        pmask = bits[:, order] @ weights
        np.minimum(canon, pmask, out=canon)
    reps = np.unique(canon)
    out = []
    for mask in reps.tolist():
        kinds = [[0] * n for _ in range(n)]
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                kinds[u][v] = kinds[v][u] = 1
        g = MixedGraph(n, tuple(tuple(row) for row in kinds))
        if is_connected(g):
            out.append((g.edge_count(), mask, g))
    out.sort(key=lambda t: (t[0], t[1]))
    return [g for _, _, g in out]


def iso_classes(graphs: list[MixedGraph]) -> dict[str, list[MixedGraph]]:
    """Group orientations of one labeled underlying graph by isomorphism.

    Keys are canonical encodings (minimum over relabelings by automorphisms
    of the underlying graph); the decoded key is the class representative.
    """
    if not graphs:
        return {}
    underlying = graphs[0]
    auts = _automorphisms(
        MixedGraph(
            underlying.n,
            tuple(
                tuple(1 if k else 0 for k in row) for row in underlying.kinds
            ),
        )
    )
    classes: dict[str, list[MixedGraph]] = {}
    for g in graphs:
        canon = min(g.relabel(list(p)).encode() for p in auts)
        classes.setdefault(canon, []).append(g)
    return classes


@dataclass(frozen=True)
class DedupClass:
    """One equivalence class under combined relabeling and switching."""

    representative: MixedGraph  # the member with the smallest encoding
    members: tuple[MixedGraph, ...]


def dedup_classes(graphs: list[MixedGraph]) -> list[DedupClass]:
    """Partition graphs under combined vertex relabeling and switching.

    All inputs must share a vertex count n <= 8 (the test tries all n!
    relabelings).  Classes are returned sorted by representative encoding;
    the representative is the minimal encoding within the class.  Graphs
    with different characteristic polynomials are never equivalent, which
    prunes most pairwise tests.
    """
    if not graphs:
        return []
    n = graphs[0].n
    if n > 8:
        raise ValueError("combined dedup limited to n <= 8")
    if any(g.n != n for g in graphs):
        raise ValueError("all graphs must share a vertex count")
    perms = list(permutations(range(n)))
    buckets: dict[tuple[int, ...], list[list[MixedGraph]]] = {}
    for g in graphs:
        key = char_poly(g).coeffs
        classes = buckets.setdefault(key, [])
        for members in classes:
            rep = members[0]
            if any(
                switching_equivalent(g.relabel(list(p)), rep) is not None
                for p in perms
            ):
                members.append(g)
                break
        else:
            classes.append([g])
    out = []
    for classes in buckets.values():
        for members in classes:
            best = min(members, key=lambda m: m.encode())
            out.append(DedupClass(best, tuple(members)))
    out.sort(key=lambda c: c.representative.encode())
    return out


def derive_scattered_catalog() -> Catalog:
    """Recompute the scattered-orientation catalog from scratch.

    For each of the four sporadic underlying graphs, every orientation is
    tested with the exact eigenvalue comparison; survivors are grouped into
    isomorphism classes and the lexicographically smallest encoding of each
    class becomes the pinned representative.  The result is deterministic,
    so regeneration must reproduce the shipped file byte for byte.
    """
    records: list[CatalogRecord] = []
    rows: list[ReconciliationRow] = []
    for label in SPORADIC_LABELS:
        g = sporadic_underlying()[label]
        survivors = [
            m
            for m in enumerate_orientations(g)
            if compare_lambda_min(m, NEG_GOLDEN) is Trichotomy.GREATER
        ]
        classes = iso_classes(survivors)
        reps = [decode(g.n, key) for key in sorted(classes)]
        combined = dedup_classes(reps)
        auts = _automorphisms(underlying_graph(g))
        converse_keys = {
            min(key, min(converse(decode(g.n, key)).relabel(list(p)).encode() for p in auts))
            for key in classes
        }
        for i, rep in enumerate(reps):
            lam = eigenvalues(rep).lambda_min
            records.append(
                CatalogRecord(
                    rec_id=f"{label}-{i + 1:02d}",
                    underlying=label,
                    n=rep.n,
                    encoded=rep.encode(),
                    char_coeffs=char_poly(rep).coeffs,
                    # stored at the file's 10-decimal precision so that
                    # parse(serialize(catalog)) round-trips exactly
                    lambda_min=float(f"{lam:.10f}"),
                )
            )
        rows.append(
            ReconciliationRow(
                underlying=label,
                labeled=len(survivors),
                iso_classes=len(classes),
                converse_classes=len(converse_keys),
                switch_iso_classes=len(combined),
            )
        )
    return Catalog(1, tuple(records), tuple(rows))


@dataclass
class LevelStats:
    """Exhaustive sweep over all orientations of all connected n-vertex graphs."""

    n: int
    underlying_graphs: int = 0
    orientations: int = 0
    accepts: dict[str, int] = field(default_factory=dict)
    rejects: int = 0
    boundary_equal: int = 0
    mismatches: list[str] = field(default_factory=list)


@dataclass
class DeepStats:
    """Exhaustive sweep over one six-vertex family underlying graph."""

    label: str
    orientations: int = 0
    accepted: int = 0
    boundary_equal: int = 0
    mismatches: list[str] = field(default_factory=list)


@dataclass
class K6Stats:
    """Vectorized sweep over all orientations of the complete graph K_6."""

    total: int = 0
    accepted: int = 0
    flagged: int = 0
    mismatches: int = 0
    subsample: int = 0
    subsample_mismatches: list[str] = field(default_factory=list)


@dataclass
class SampleStats:
    """Randomized classifier-vs-exact spot checks on six-vertex graphs."""

    samples: int = 0
    accepted: int = 0
    boundary_equal: int = 0
    mismatches: list[str] = field(default_factory=list)


@dataclass
class CensusReport:
    n_max: int
    deep: bool
    levels: list[LevelStats]
    deep_levels: list[DeepStats]
    k6: K6Stats | None
    sample: SampleStats | None
    elapsed_seconds: float

    @property
    def ok(self) -> bool:
        if any(lv.mismatches for lv in self.levels):
            return False
        if any(dl.mismatches for dl in self.deep_levels):
            return False
        if self.k6 is not None and (self.k6.mismatches or self.k6.subsample_mismatches):
            return False
        if self.sample is not None and self.sample.mismatches:
            return False
        return True

    def text(self) -> str:
        lines = [
            f"census: exhaustive classifier check up to {self.n_max} vertices"
            + (" with six-vertex deep sweep" if self.deep else ""),
        ]
        for lv in self.levels:
            fams = " ".join(f"{k}={v}" for k, v in sorted(lv.accepts.items()))
            lines.append(
                f"n={lv.n}: underlying={lv.underlying_graphs}"
                f" orientations={lv.orientations} accepts[{fams}]"
                f" rejects={lv.rejects} boundary-equal={lv.boundary_equal}"
                f" mismatches={len(lv.mismatches)}"
            )
            for enc in lv.mismatches[:10]:
                lines.append(f"  mismatch {enc}")
        for dl in self.deep_levels:
            lines.append(
                f"deep {dl.label}: orientations={dl.orientations}"
                f" accepted={dl.accepted} boundary-equal={dl.boundary_equal}"
                f" mismatches={len(dl.mismatches)}"
            )
            for enc in dl.mismatches[:10]:
                lines.append(f"  mismatch {enc}")
        if self.k6 is not None:
            lines.append(
                f"deep K_6: orientations={self.k6.total} accepted={self.k6.accepted}"
                f" flagged={self.k6.flagged} mismatches={self.k6.mismatches}"
                f" subsample={self.k6.subsample}"
                f" subsample-mismatches={len(self.k6.subsample_mismatches)}"
            )
        if self.sample is not None:
            lines.append(
                f"sampled n=6: samples={self.sample.samples}"
                f" accepted={self.sample.accepted}"
                f" boundary-equal={self.sample.boundary_equal}"
                f" mismatches={len(self.sample.mismatches)}"
            )
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        lines.append(f"elapsed: {self.elapsed_seconds:.1f}s")
        return "\n".join(lines)


def _check_orientation(m: MixedGraph) -> tuple[str | None, Trichotomy]:
    """Classifier family (or None for reject) and the exact comparison."""
    cert = classify_threshold(m, confirm=False)
    exact = compare_lambda_min(m, NEG_GOLDEN)
    return (cert.family.value if cert.accepted else None, exact)


def _sweep_underlying(g: MixedGraph) -> tuple[int, dict[str, int], int, int, list[str]]:
    """Worker: run classifier vs exact over all orientations of one graph."""
    accepts: dict[str, int] = {}
    rejects = 0
    boundary = 0
    mismatches: list[str] = []
    total = 0
    for m in enumerate_orientations(g):
        total += 1
        family, exact = _check_orientation(m)
        if family is None:
            rejects += 1
            if exact is Trichotomy.EQUAL:
                boundary += 1
            if exact is Trichotomy.GREATER:
                mismatches.append(m.encode())
        else:
            accepts[family] = accepts.get(family, 0) + 1
            if exact is not Trichotomy.GREATER:
                mismatches.append(m.encode())
    return total, accepts, rejects, boundary, mismatches


def _merge_level(level: LevelStats, part) -> None:
    total, accepts, rejects, boundary, mismatches = part
    level.underlying_graphs += 1
    level.orientations += total
    for k, v in accepts.items():
        level.accepts[k] = level.accepts.get(k, 0) + v
    level.rejects += rejects
    level.boundary_equal += boundary
    level.mismatches.extend(mismatches)


# --- vectorized K_6 sweep -------------------------------------------------

_K6_EDGES = tuple(combinations(range(6), 2))
_K6_TRIANGLES = tuple(combinations(range(6), 3))
_K6_CHUNK = 3 ** 9  # 19,683 orientations per chunk, 3^6 chunks in total

#: i-exponent of the Hermitian entry for orientation digits 0, 1, 2.
_DIGIT_EXP = np.array([0, 1, 3], dtype=np.int8)
_DIGIT_VALUE = np.array([1, 1j, -1j], dtype=np.complex128)


def _k6_edge_pos() -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(_K6_EDGES)}

def _k6_chunk(start: int) -> tuple[int, int, list[int]]:
    """Scan one chunk of K_6 orientations.

    Returns (count, accepted, flagged indices), where flagged means the
    float eigenvalue bound cannot separate the orientation from the
    threshold and exact arithmetic must decide.
    """
    count = min(_K6_CHUNK, 3 ** 15 - start)
    idx = np.arange(start, start + count, dtype=np.int64)
    digits = np.empty((count, 15), dtype=np.int8)
    rem = idx.copy()
    for e in range(15):
        digits[:, e] = rem % 3
        rem //= 3
    exps = _DIGIT_EXP[digits].astype(np.int16)
    pos = _k6_edge_pos()
    accept = np.ones(count, dtype=bool)
    for a, b, c in _K6_TRIANGLES:
        hol = exps[:, pos[(a, b)]] + exps[:, pos[(b, c)]] - exps[:, pos[(a, c)]]
        np.logical_and(accept, hol % 4 == 0, out=accept)
    values = _DIGIT_VALUE[digits]
    h = np.zeros((count, 6, 6), dtype=np.complex128)
    for (u, v), e in pos.items():
        h[:, u, v] = values[:, e]
        h[:, v, u] = np.conj(values[:, e])
    lam_min = np.linalg.eigvalsh(h)[:, 0]
    margin = 1e-6
    above = lam_min > -_GOLDEN_F + margin
    below = lam_min < -_GOLDEN_F - margin
    clear = (accept & above) | (~accept & ~above)
    flagged = np.nonzero(~(clear & (above | below)))[0]
    return count, int(accept.sum()), (idx[flagged]).tolist()


def _k6_flag_recheck(flagged: list[int]) -> int:
    """Exact recheck for flagged K_6 orientations; returns mismatch count."""
    k6 = complete_graph(6)
    mismatches = 0
    for index in flagged:
        m = orientation(k6, index)
        family, exact = _check_orientation(m)
        if (family is not None) != (exact is Trichotomy.GREATER):
            mismatches += 1
    return mismatches


def _k6_sweep(jobs: int, rng: random.Random, subsample: int) -> K6Stats:
    stats = K6Stats(total=3 ** 15)
    starts = list(range(0, 3 ** 15, _K6_CHUNK))
    flagged_all: list[int] = []
    if jobs > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_k6_chunk, starts)
    else:
        parts = [_k6_chunk(s) for s in starts]
    for count, accepted, flagged in parts:
        stats.accepted += accepted
        flagged_all.extend(flagged)
    stats.flagged = len(flagged_all)
    stats.mismatches = _k6_flag_recheck(flagged_all)
    k6 = complete_graph(6)
    for _ in range(subsample):
        index = rng.randrange(3 ** 15)
        m = orientation(k6, index)
        family, exact = _check_orientation(m)
        if (family is not None) != (exact is Trichotomy.GREATER):
            stats.subsample_mismatches.append(m.encode())
        stats.subsample += 1
    return stats


def _deep_family_graphs() -> list[tuple[str, MixedGraph]]:
    return [
        ("K_2.K_5", coalescence(complete_graph(2), 0, complete_graph(5), 0)),
        ("K_3.K_4", coalescence(complete_graph(3), 0, complete_graph(4), 0)),
        ("k24-plus-2edges", sporadic_underlying()["k24-plus-2edges"]),
    ]


def _deep_sweep_one(item: tuple[str, MixedGraph]) -> DeepStats:
    label, g = item
    stats = DeepStats(label)
    for m in enumerate_orientations(g):
        stats.orientations += 1
        family, exact = _check_orientation(m)
        if family is None:
            if exact is Trichotomy.EQUAL:
                stats.boundary_equal += 1
            if exact is Trichotomy.GREATER:
                stats.mismatches.append(m.encode())
        else:
            stats.accepted += 1
            if exact is not Trichotomy.GREATER:
                stats.mismatches.append(m.encode())
    return stats


def verify_main_theorem(
    n_max: int = 5,
    deep: bool = False,
    sample: int = 10000,
    seed: int = 0,
    jobs: int = 1,
) -> CensusReport:
    """Check the structural classifier against exact eigenvalue comparisons.

    Exhausts every orientation of every connected underlying graph with up
    to min(n_max, 5) vertices.  The six-vertex deep sweep (requested by
    ``deep=True`` or ``n_max=6``) additionally exhausts the six-vertex
    family graphs (K_6 via the vectorized path, the two clique
    coalescences, K_{2,4} plus two edges) and runs ``sample`` seeded random
    spot checks across all 112 connected six-vertex graphs.
    """
    if not 1 <= n_max <= 6:
        raise ValueError("census covers 1 <= n_max <= 6")
    if n_max == 6:
        deep = True
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    t0 = time.monotonic()
    levels: list[LevelStats] = []
    for n in range(1, min(n_max, 5) + 1):
        level = LevelStats(n)
        graphs = enumerate_connected_graphs(n)
        if jobs > 1 and n >= 4:
            with Pool(jobs) as pool:
                for part in pool.map(_sweep_underlying, graphs):
                    _merge_level(level, part)
        else:
            for g in graphs:
                _merge_level(level, _sweep_underlying(g))
        level.mismatches.sort()
        levels.append(level)
    deep_levels: list[DeepStats] = []
    k6_stats: K6Stats | None = None
    sample_stats: SampleStats | None = None
    if deep:
        rng = random.Random(seed)
        items = _deep_family_graphs()
        if jobs > 1:
            with Pool(jobs) as pool:
                deep_levels = pool.map(_deep_sweep_one, items)
        else:
            deep_levels = [_deep_sweep_one(item) for item in items]
        k6_stats = _k6_sweep(jobs, rng, subsample=max(sample, 10000))
        sample_stats = SampleStats()
        six = enumerate_connected_graphs(6)
        for _ in range(sample):
            g = six[rng.randrange(len(six))]
            m = orientation(g, rng.randrange(orientation_count(g)))
            if not is_connected(m):
                raise AssertionError("connected underlying graph lost connectivity")
            family, exact = _check_orientation(m)
            sample_stats.samples += 1
            if family is not None:
                sample_stats.accepted += 1
            if exact is Trichotomy.EQUAL:
                sample_stats.boundary_equal += 1
            if (family is not None) != (exact is Trichotomy.GREATER):
                sample_stats.mismatches.append(m.encode())
    return CensusReport(
        n_max=n_max,
        deep=deep,
        levels=levels,
        deep_levels=deep_levels,
        k6=k6_stats,
        sample=sample_stats,
        elapsed_seconds=time.monotonic() - t0,
    )
