"""
Checking the open conjectures at desk scale
===========================================

Both remaining conjectures are cheap to test for moderate n with exact
arithmetic: one is a functional equation, the other a count equality.
"""

from invseq import check_0021_conjecture, count_vector

# Conjecture 1: the generating function A(x) of the 0021-avoider counts
# satisfies 1/((1-A)(1+A)^2) = 1 - x.  We verify the identity
# coefficient by coefficient with Fractions, no floats anywhere.
ok, report = check_0021_conjecture(9)
print("0021 counts:", report["counts"])
print("functional equation holds mod x^10:", ok)

# Conjecture 2: 3012 and 3201 may be Wilf equivalent.  Their count
# vectors agree as far as anyone has looked.
a = count_vector("3012", 9).counts
b = count_vector("3201", 9).counts
print()
print("3012:", a)
print("3201:", b)
print("equal so far:", a == b)
