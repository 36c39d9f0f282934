"""Vectorized avoider enumeration.

Grows the set of pattern-avoiding S-inversion sequences one position at a
time as a numpy matrix (one row per avoider, rows in lexicographic order).
Correctness rests on hereditary avoidance: every prefix of an avoider
avoids, so extending only surviving rows and rejecting extensions that
complete an occurrence at the new position enumerates exactly the avoiders.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .core import Pattern, _pattern_entries, _sign, validate_bounds

_CHUNK = 1 << 20


def _relations(p):
    L = len(p)
    return [[_sign(p[b] - p[a]) for b in range(L)] for a in range(L)]


def _mark_matches(arrays, combos, rel, out):
    """OR into `out` the rows where some combo of columns realizes the pattern.

    `arrays` is a list of 1-d value arrays; each combo is a tuple of indices
    into it, one per pattern position. Pairwise comparison results are cached
    since combos overlap heavily.
    """
    cache = {}

    def cond(ia, ib, r):
        key = (ia, ib, r)
        c = cache.get(key)
        if c is None:
            xa, xb = arrays[ia], arrays[ib]
            if r > 0:
                c = xb > xa
            elif r < 0:
                c = xb < xa
            else:
                c = xb == xa
            cache[key] = c
        return c

    L = len(rel)
    for combo in combos:
        mask = None
        for a in range(L):
            for b in range(a + 1, L):
                c = cond(combo[a], combo[b], rel[a][b])
                mask = c if mask is None else mask & c
        if mask is None:
            out[:] = True
            return
        out |= mask


def _dtype_for(bounds):
    return np.int16 if (bounds and max(bounds) > 127) else np.int8


def avoider_steps(bounds, pattern):
    """Yield the avoider matrix after each successive bound.

    The matrix for the length-m prefix of `bounds` has one row per element
    of I_{S_m}(pattern), in lexicographic order.
    """
    bounds = tuple(bounds)
    p = _pattern_entries(pattern)
    L = len(p)
    rel = _relations(p)
    dt = _dtype_for(bounds)
    E = np.zeros((1, 0), dtype=dt)
    for m, s in enumerate(bounds):
        rows = E.shape[0]
        if rows == 0:
            E = np.zeros((0, m + 1), dtype=dt)
            yield E
            continue
        E2 = np.repeat(E, s, axis=0)
        v = np.tile(np.arange(s, dtype=dt), rows)
        if m + 1 >= L:
            total = E2.shape[0]
            bad = np.zeros(total, dtype=bool)
            combos = [c + (m,) for c in combinations(range(m), L - 1)]
            for lo in range(0, total, _CHUNK):
                hi = min(lo + _CHUNK, total)
                arrays = [E2[lo:hi, c] for c in range(m)] + [v[lo:hi]]
                _mark_matches(arrays, combos, rel, bad[lo:hi])
            keep = ~bad
            E = np.concatenate([E2[keep], v[keep, None]], axis=1)
        else:
            E = np.concatenate([E2, v[:, None]], axis=1)
        yield E


def avoider_matrix(bounds, pattern):
    """All of I_S(pattern) as rows of a matrix, lexicographic order."""
    bounds = validate_bounds(bounds)
    E = np.zeros((1, 0), dtype=_dtype_for(bounds))
    for E in avoider_steps(bounds, pattern):
        pass
    return E


def avoider_counts(bounds, pattern):
    """|I_{S_m}(pattern)| for every prefix S_m of the bound set."""
    bounds = validate_bounds(bounds)
    return [E.shape[0] for E in avoider_steps(bounds, pattern)]


def full_matrix(bounds):
    """All S-inversion sequences for the given bounds, lexicographic order."""
    bounds = validate_bounds(bounds)
    n = len(bounds)
    dt = _dtype_for(bounds)
    if n == 0:
        return np.zeros((1, 0), dtype=dt)
    grids = np.meshgrid(*[np.arange(s, dtype=dt) for s in bounds], indexing="ij")
    return np.stack(grids, axis=-1).reshape(-1, n)


def contains_mask(bounds, pattern):
    """(matrix of all of I_S, boolean mask of rows containing the pattern)."""
    E = full_matrix(bounds)
    p = _pattern_entries(pattern)
    L = len(p)
    rel = _relations(p)
    n = E.shape[1]
    total = E.shape[0]
    hit = np.zeros(total, dtype=bool)
    if L > n:
        return E, hit
    combos = list(combinations(range(n), L))
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        arrays = [E[lo:hi, c] for c in range(n)]
        _mark_matches(arrays, combos, rel, hit[lo:hi])
    return E, hit
