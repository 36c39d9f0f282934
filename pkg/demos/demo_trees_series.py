"""
Avoider counts via label-increasing trees
=========================================

Two pattern families are counted by trees with bounded branching; the
tree counts in turn come from an ODE solved with exact rational series.
"""

from invseq import (
    count_avoiders_n,
    count_trees_bounded,
    count_trees_bruteforce,
    count_trees_root_unbounded,
    euler_numbers,
)

# 0000-avoiders of length n match label-increasing trees on n+1 vertices
# with at most three children per vertex.
print("n  |I_n(0000)|  trees(n+1, k=3)")
for n in range(1, 8):
    print(f"{n}  {count_avoiders_n(n, '0000'):>10}  {count_trees_bounded(n + 1, 3):>10}")

# For 0111 the branching bound is two, but the root is exempt.  Both the
# exp(T_2 - 1) series and raw enumeration give the same numbers.
print()
print("n  |I_n(0111)|  series  bruteforce")
for n in range(1, 7):
    a = count_avoiders_n(n, "0111")
    b = count_trees_root_unbounded(n + 1, 2)
    c = count_trees_bruteforce(n + 1, 2, root_unbounded=True)
    print(f"{n}  {a:>10}  {b:>6}  {c:>10}")

# And the grandparent of these identities: 000-avoiders are the Euler
# up/down numbers, i.e. the EGF coefficients of tan(x) + sec(x).
print()
print("Euler numbers E_0..E_9:", euler_numbers(9))
print("000 avoider counts:   ", [count_avoiders_n(n, "000") for n in range(1, 9)])
