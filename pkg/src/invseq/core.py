"""Patterns, inversion sequences, containment, and the Lehmer code.

All sequences are plain tuples of nonnegative integers; positions are
0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass


def _sign(d):
    return (d > 0) - (d < 0)


def canonicalize(word):
    """Compress a word's values to {0,...,m}, preserving relative order."""
    ranks = {v: r for r, v in enumerate(sorted(set(word)))}
    return tuple(ranks[v] for v in word)


@dataclass(frozen=True)
class Pattern:
    """A canonical avoidance pattern.

    Arbitrary integer words are accepted and normalized to canonical form
    (distinct values become exactly {0,...,m}); containment is invariant
    under this normalization since it is defined up to order isomorphism.
    """

    entries: tuple

    def __post_init__(self):
        word = tuple(int(v) for v in self.entries)
        if not word:
            raise ValueError("pattern must have length >= 1")
        if any(v < 0 for v in word):
            raise ValueError("pattern entries must be nonnegative")
        object.__setattr__(self, "entries", canonicalize(word))

    @classmethod
    def parse(cls, text):
        """Parse '0021' (single digits) or '10,2,0' (comma-separated)."""
        text = text.strip()
        if "," in text:
            parts = text.split(",")
            values = []
            for pos, tok in enumerate(parts):
                tok = tok.strip()
                if not tok.isdigit():
                    raise ValueError(
                        f"bad pattern token {tok!r} at position {pos}"
                    )
                values.append(int(tok))
            return cls(tuple(values))
        for pos, ch in enumerate(text):
            if not ch.isdigit():
                raise ValueError(f"bad pattern character {ch!r} at position {pos}")
        if not text:
            raise ValueError("empty pattern")
        return cls(tuple(int(ch) for ch in text))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        if max(self.entries) <= 9:
            return "".join(str(v) for v in self.entries)
        return ",".join(str(v) for v in self.entries)


def _pattern_entries(pattern):
    if isinstance(pattern, Pattern):
        return pattern.entries
    return Pattern(tuple(pattern)).entries


def validate_bounds(bounds):
    """Check a bound set: strictly increasing positive integers."""
    bounds = tuple(int(s) for s in bounds)
    if any(s < 1 for s in bounds):
        raise ValueError("bounds must be positive")
    if any(a >= b for a, b in zip(bounds, bounds[1:])):
        raise ValueError("bounds must be strictly increasing")
    return bounds


def ordinary_bounds(n):
    """The bound set (1, 2, ..., n) of ordinary inversion sequences."""
    return tuple(range(1, n + 1))


@dataclass(frozen=True)
class SInvSeq:
    """An S-inversion sequence: entries e with 0 <= e_i < s_i."""

    entries: tuple
    bounds: tuple

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        bounds = validate_bounds(self.bounds)
        if len(entries) != len(bounds):
            raise ValueError("entries and bounds must have equal length")
        for i, (e, s) in enumerate(zip(entries, bounds)):
            if not 0 <= e < s:
                raise ValueError(f"entry {e} at position {i} violates bound {s}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "bounds", bounds)

    @classmethod
    def ordinary(cls, entries):
        return cls(tuple(entries), ordinary_bounds(len(tuple(entries))))

    def __len__(self):
        return len(self.entries)


def _raw(seq):
    return seq.entries if isinstance(seq, SInvSeq) else tuple(seq)


def order_isomorphic(a, b):
    """True iff the two sequences have identical pairwise <,=,> relations."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    n = len(a)
    return all(
        _sign(a[j] - a[i]) == _sign(b[j] - b[i])
        for i in range(n)
        for j in range(i + 1, n)
    )


def contains(seq, pattern):
    """True iff some subsequence of seq is order-isomorphic to pattern."""
    seq = _raw(seq)
    p = _pattern_entries(pattern)
    L, n = len(p), len(seq)
    if n < L:
        return False
    chosen = []

    def extend(start, t):
        if t == L:
            return True
        for i in range(start, n - (L - t) + 1):
            x = seq[i]
            if all(_sign(x - chosen[a]) == _sign(p[t] - p[a]) for a in range(t)):
                chosen.append(x)
                if extend(i + 1, t + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def avoids(seq, pattern):
    return not contains(seq, pattern)


def extend_avoids(seq, nxt, pattern):
    """Given seq avoiding pattern, does seq + (nxt,) still avoid it?

    Only subsequences ending at the new entry need checking; avoidance is
    hereditary under prefixes.
    """
    seq = _raw(seq)
    p = _pattern_entries(pattern)
    L, n = len(p), len(seq)
    if n + 1 < L:
        return True
    if L == 1:
        return False
    last = L - 1
    chosen = []

    def pick(start, t):
        if t == last:
            return True
        for i in range(start, n - (last - t) + 1):
            x = seq[i]
            if _sign(nxt - x) != _sign(p[last] - p[t]):
                continue
            if all(_sign(x - chosen[a]) == _sign(p[t] - p[a]) for a in range(t)):
                chosen.append(x)
                if pick(i + 1, t + 1):
                    return True
                chosen.pop()
        return False

    return not pick(0, 0)


def is_permutation(perm):
    perm = tuple(perm)
    return sorted(perm) == list(range(1, len(perm) + 1))


def lehmer_encode(perm):
    """Inversion sequence of a permutation: e_i = #{j < i : perm_j > perm_i}."""
    perm = tuple(perm)
    if not is_permutation(perm):
        raise ValueError("not a permutation of 1..n")
    return tuple(
        sum(1 for j in range(i) if perm[j] > perm[i]) for i in range(len(perm))
    )


def lehmer_decode(e):
    """Permutation of 1..n whose Lehmer code is the inversion sequence e."""
    e = _raw(e)
    n = len(e)
    for i, v in enumerate(e):
        if not 0 <= v <= i:
            raise ValueError(f"entry {v} at position {i} is not a valid code")
    avail = list(range(1, n + 1))
    out = [0] * n
    for i in range(n - 1, -1, -1):
        # perm_i is the (e_i + 1)-th largest among the values at positions <= i
        out[i] = avail.pop(len(avail) - 1 - e[i])
    return tuple(out)
