"""Empirical Wilf classification of patterns over inversion sequences."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .core import Pattern, ordinary_bounds
from . import engine


@dataclass(frozen=True)
class CountVector:
    pattern: Pattern
    counts: tuple  # |I_n(pattern)| for n = 1..n_max


@dataclass(frozen=True)
class WilfClass:
    patterns: tuple  # sorted lexicographically
    counts: tuple


def canonical_patterns(length):
    """All canonical words of the given length, lexicographic order."""
    if length < 1:
        raise ValueError("length must be >= 1")
    out = []
    for word in product(range(length), repeat=length):
        if set(word) == set(range(max(word) + 1)):
            out.append(Pattern(word))
    return out


def count_vector(pattern, n_max):
    """Exact |I_n(pattern)| for n = 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    p = pattern if isinstance(pattern, Pattern) else Pattern(tuple(pattern))
    counts = engine.avoider_counts(ordinary_bounds(n_max), p)
    return CountVector(p, tuple(counts))


def _count_vector_job(args):
    entries, n_max = args
    return entries, count_vector(Pattern(entries), n_max).counts


def classify(length, n_max, threads=1):
    """Partition canonical patterns of the given length by count vector.

    Classes are returned sorted by their lexicographically smallest
    pattern; the partition is independent of input order and thread count.
    """
    patterns = canonical_patterns(length)
    if threads and threads > 1:
        jobs = [(p.entries, n_max) for p in patterns]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = dict(pool.map(_count_vector_job, jobs))
        vectors = {p: results[p.entries] for p in patterns}
    else:
        vectors = {p: count_vector(p, n_max).counts for p in patterns}
    by_counts = {}
    for p in patterns:
        by_counts.setdefault(vectors[p], []).append(p)
    classes = [
        WilfClass(tuple(sorted(ps, key=lambda q: q.entries)), counts)
        for counts, ps in by_counts.items()
    ]
    classes.sort(key=lambda c: c.patterns[0].entries)
    return classes


def first_divergence(p, q, n_max):
    """Smallest n <= n_max with |I_n(p)| != |I_n(q)|, or None.

    Counts are grown incrementally and compared per length, so the search
    stops at the first difference.
    """
    p = p if isinstance(p, Pattern) else Pattern(tuple(p))
    q = q if isinstance(q, Pattern) else Pattern(tuple(q))
    bounds = ordinary_bounds(n_max)
    steps_p = engine.avoider_steps(bounds, p)
    steps_q = engine.avoider_steps(bounds, q)
    for n, (ep, eq) in enumerate(zip(steps_p, steps_q), start=1):
        if ep.shape[0] != eq.shape[0]:
            return n
    return None
