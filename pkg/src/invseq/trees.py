"""Label-increasing trees, their bijections with inversion sequences, and
the counting oracles (exhaustive enumeration, ODE series, derivative
operator).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .series import RationalSeries, series_Rk, series_Tk


@dataclass(frozen=True)
class LabelTree:
    """A label-increasing rooted tree on labels {0,...,n-1}, root 0.

    parents[i] is the parent label of label i+1; every parent label is
    smaller than its child, which makes the structure a single tree with
    labels increasing along root-to-leaf paths.
    """

    parents: tuple

    def __post_init__(self):
        parents = tuple(int(v) for v in self.parents)
        for i, p in enumerate(parents):
            if not 0 <= p <= i:
                raise ValueError(f"parent {p} of label {i + 1} must lie in 0..{i}")
        object.__setattr__(self, "parents", parents)

    @property
    def n(self):
        return len(self.parents) + 1

    def children_counts(self):
        counts = [0] * self.n
        for p in self.parents:
            counts[p] += 1
        return counts

    def max_branching(self, skip_root=False):
        counts = self.children_counts()
        if skip_root:
            counts = counts[1:]
        return max(counts, default=0)


def tree_to_invseq(tree):
    """e with e_i = parent of label i; a length n-1 inversion sequence."""
    return tree.parents


def invseq_to_tree(e):
    """Inverse of tree_to_invseq: the tree on len(e)+1 labels."""
    return LabelTree(tuple(e))


def iter_trees(n, k=None, root_unbounded=False):
    """All label-increasing trees on n vertices with branching bounded by k
    (None = unbounded); with root_unbounded the root is exempt."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        if n == 1:
            yield LabelTree(())
        return
    parents = []
    counts = [0] * n

    def rec(label):
        if label == n:
            yield LabelTree(tuple(parents))
            return
        for p in range(label):
            if k is not None and counts[p] >= k and not (root_unbounded and p == 0):
                continue
            counts[p] += 1
            parents.append(p)
            yield from rec(label + 1)
            parents.pop()
            counts[p] -= 1

    yield from rec(1)


def count_trees_bruteforce(n, k, root_unbounded=False):
    """|L_{n,k}| (or |L'_{n,k}|) by exhaustive enumeration."""
    if n == 0:
        return 1
    return sum(1 for _ in iter_trees(n, k, root_unbounded))


def count_trees_bounded(n, k):
    """|L_{n,k}| via the ODE series for T_k."""
    if n == 0:
        return 1
    return series_Tk(k, n).egf_int(n)


def count_trees_root_unbounded(n, k):
    """|L'_{n,k}| via exp(T_k - 1).

    Removing the unbounded root of an n-vertex tree leaves a set of
    bounded increasing trees on the other n-1 labels, so |L'_{n,k}| is the
    (n-1)-th EGF coefficient of exp(T_k - 1), not the n-th; exhaustive
    enumeration confirms the shift.
    """
    if n == 0:
        return 1
    return series_Rk(k, n - 1).egf_int(n - 1)


def boxed_counts_operator(k, n_max):
    """D^n(exp x) at x=0 for n = 0..n_max, with D = (sum_{j<=k} x^j/j!) d/dx.

    Term n equals |L'_{n+1,k}| (same root-removal shift as the EGF).
    Independent of the exp(T_k - 1) route; any disagreement between the
    two is a fault worth reporting, not reconciling.
    """
    order = 2 * n_max + 1
    f = RationalSeries(
        [Fraction(1, factorial(i)) for i in range(order + 1)], order, "exponential"
    )
    mult = RationalSeries(
        [Fraction(1, factorial(j)) for j in range(k + 1)], order, "exponential"
    )
    values = []
    for _ in range(n_max + 1):
        c0 = f.coefficient(0)
        if c0.denominator != 1:
            raise ValueError("operator iterate has non-integer value at 0")
        values.append(int(c0))
        f = (mult.truncate(f.order - 1)) * f.differentiate()
    return values
