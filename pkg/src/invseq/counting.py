"""Counting and enumerating avoiders, the subset-sum identity, the
binary-word formula, and the refined statistics used by the double
inductions.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import comb

from .core import (
    Pattern,
    _pattern_entries,
    _raw,
    extend_avoids,
    ordinary_bounds,
    validate_bounds,
)
from . import engine


def enumerate_avoiders(bounds, pattern):
    """Yield every element of I_S(pattern) exactly once, lexicographically.

    Pruned depth-first search: a prefix is extended only if the new entry
    does not complete an occurrence (hereditary avoidance justifies never
    revisiting a rejected prefix).
    """
    bounds = validate_bounds(bounds)
    p = Pattern(_pattern_entries(pattern))
    seq = []

    def rec(i):
        if i == len(bounds):
            yield tuple(seq)
            return
        for x in range(bounds[i]):
            if extend_avoids(seq, x, p):
                seq.append(x)
                yield from rec(i + 1)
                seq.pop()

    yield from rec(0)


def count_avoiders(bounds, pattern, engine_name="fast"):
    """|I_S(pattern)| for the given bound set.

    engine_name 'fast' uses the vectorized grower; 'reference' the pure
    Python backtracking enumerator (kept as an independent cross-check).
    """
    bounds = validate_bounds(bounds)
    if not bounds:
        return 1
    if engine_name == "reference":
        return sum(1 for _ in enumerate_avoiders(bounds, pattern))
    if engine_name != "fast":
        raise ValueError(f"unknown engine {engine_name!r}")
    return int(engine.avoider_matrix(bounds, pattern).shape[0])


def count_avoiders_n(n, pattern, engine_name="fast"):
    """|I_n(pattern)| over ordinary inversion sequences."""
    return count_avoiders(ordinary_bounds(n), pattern, engine_name)


_SUBSET_LIMIT = 25


def theorem31_rhs(n, suffix):
    """Sum of |I_S(suffix)| over all S subset of [n-1].

    `suffix` is the literal tail of a pattern whose first entry is 0 and
    whose remaining entries are positive; zero entries are rejected since
    they violate that hypothesis. Equals |I_n(0 . suffix)|.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > _SUBSET_LIMIT:
        raise ValueError(
            f"refusing subset sum for n > {_SUBSET_LIMIT} (2^(n-1) subsets)"
        )
    word = tuple(int(v) for v in suffix)
    if not word:
        raise ValueError("suffix must be nonempty")
    if min(word) < 1:
        raise ValueError("suffix entries must be positive (pattern tail after 0)")
    p = Pattern(word)
    ground = list(range(1, n))
    total = 0
    for mask in range(1 << (n - 1)):
        s = tuple(ground[i] for i in range(n - 1) if mask >> i & 1)
        total += count_avoiders(s, p)
    return total


def binary_avoider_formula(j, k, ell):
    """C(j + min(k, ell-2), j): binary words with j zeros and k ones avoiding
    any length-ell binary pattern with exactly one zero."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    return comb(j + min(k, ell - 2), j)


def count_binary_avoiders_bruteforce(j, k, pattern):
    """Exhaustive count of pattern-avoiding binary words with j zeros, k ones.

    The pattern must be over {0,1} with exactly one zero; this is the
    oracle for binary_avoider_formula.
    """
    p = _pattern_entries(pattern)
    if len(p) < 2 or set(p) - {0, 1} or p.count(0) != 1:
        raise ValueError("pattern must be binary with exactly one zero")
    from .core import contains

    total = 0
    n = j + k
    for ones in combinations(range(n), k):
        word = [0] * n
        for i in ones:
            word[i] = 1
        if not contains(word, p):
            total += 1
    return total


def _zero_positions(e):
    return [i for i, x in enumerate(e) if x == 0]


def terminal_h_repeat(e, h):
    """Largest r such that e has >= r zeros and some positive value occurs
    at least h times strictly after the r-th zero; 0 if none."""
    e = _raw(e)
    if h < 0:
        raise ValueError("h must be nonnegative")
    zeros = _zero_positions(e)
    if h == 0:
        return len(zeros)
    best = 0
    for r in range(1, len(zeros) + 1):
        z = zeros[r - 1]
        counts = Counter(x for x in e[z + 1 :] if x > 0)
        if counts and max(counts.values()) >= h:
            best = r
    return best


def initial_h_repeat(e, h):
    """Largest r such that e has >= r zeros and some positive value occurs
    at least h times strictly before the r-th-to-last zero; 0 if none."""
    e = _raw(e)
    if h < 1:
        raise ValueError("h must be positive")
    zeros = _zero_positions(e)
    best = 0
    for r in range(1, len(zeros) + 1):
        z = zeros[-r]
        counts = Counter(x for x in e[:z] if x > 0)
        if counts and max(counts.values()) >= h:
            best = r
    return best


def initial_non_inversion(e):
    """Largest z such that e has >= z zeros and no ascent of two positive
    entries occurs strictly before the z-th zero; may be 0."""
    e = _raw(e)
    zeros = _zero_positions(e)
    best = 0
    for z in range(1, len(zeros) + 1):
        cut = zeros[z - 1]
        prefix = [x for x in e[:cut] if x > 0]
        ok = True
        lowest = None
        for x in prefix:
            if lowest is not None and x > lowest:
                ok = False
                break
            lowest = x if lowest is None else min(lowest, x)
        if ok:
            best = z
    return best


def initial_positive_set(e):
    """Indices i < z (z the initial non-inversion statistic) such that a
    positive entry sits between the i-th and (i+1)-th zeros; i=0 means
    before the first zero."""
    e = _raw(e)
    z = initial_non_inversion(e)
    zeros = _zero_positions(e)
    out = set()
    for i in range(z):
        lo = zeros[i - 1] + 1 if i >= 1 else 0
        hi = zeros[i]
        if any(e[t] > 0 for t in range(lo, hi)):
            out.add(i)
    return frozenset(out)


def _refined_key(e, mode):
    j = sum(1 for x in e if x == 0)
    k = sum(1 for x in e if x == 1)
    if mode == "non_inversion":
        return (j, k, initial_non_inversion(e), initial_positive_set(e))
    kind, h = mode
    if kind == "terminal":
        return (j, k, terminal_h_repeat(e, h))
    if kind == "initial":
        return (j, k, initial_h_repeat(e, h))
    raise ValueError(f"unknown refinement mode {mode!r}")


def refined_table(bounds, pattern, mode):
    """Counts of I_S(pattern) partitioned by refined key.

    mode is ('terminal', h), ('initial', h) or 'non_inversion'; keys are
    (j, k, r) resp. (j, k, z, P) with P a frozenset. Values sum to
    |I_S(pattern)|.
    """
    bounds = validate_bounds(bounds)
    table = Counter()
    if not bounds:
        table[_refined_key((), mode)] += 1
        return dict(table)
    mat = engine.avoider_matrix(bounds, pattern)
    for row in mat:
        table[_refined_key(tuple(int(x) for x in row), mode)] += 1
    return dict(table)
