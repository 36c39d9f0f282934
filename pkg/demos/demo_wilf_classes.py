"""
Empirical Wilf classes of short patterns
========================================

Group every canonical pattern of a given length by its avoider-count
vector and print the resulting classes.
"""

from invseq import classify, count_vector, first_divergence

# Length 3 first: thirteen canonical words collapse into a handful of
# classes once we count avoiders up to n = 7.
print("length-3 patterns, counts up to n = 7")
for cls in classify(3, 7):
    pats = " ".join(str(p) for p in cls.patterns)
    print(f"  {{{pats}}}: {cls.counts}")

# The famous singleton: avoiders of 021 are counted by the large Schroeder
# numbers, and 000-avoiders by the Euler up/down numbers.
print()
print("021:", count_vector((0, 2, 1), 8).counts)
print("000:", count_vector((0, 0, 0), 8).counts)

# Length-4 classes are more delicate.  The pair 2001 / 2011 agrees for a
# long time and only separates at n = 10 -- small sweeps lie to you here.
print()
print("first divergence of 2001 vs 2011:", first_divergence("2001", "2011", 10))
