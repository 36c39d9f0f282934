"""
The 3210 <-> 3201 bijection, step by step
=========================================

Decompose an inversion sequence into its weak left-to-right maxima
layers, apply the greedy map, and undo it again.
"""

from invseq import (
    contains,
    map_3201_to_3210,
    map_3210_to_3201,
    maxima_layers,
)

e = (0, 1, 2, 3, 2, 0, 1)
print("e =", e)
print("avoids 3210:", not contains(e, "3210"))

# The first layer collects the weak left-to-right maxima, the second
# layer the maxima of what is left, and the third layer is everything
# else.  A sequence avoids 3210 exactly when the third layer is weakly
# increasing.
layers = maxima_layers(e)
print("layer positions: x =", layers.x, " y =", layers.y, " z =", layers.z)

# The map keeps layers x and y fixed and redistributes the z-values
# greedily; the result avoids 3201 instead.
f = map_3210_to_3201(e)
print("image f =", f)
print("f avoids 3201:", not contains(f, "3201"))

# Round trip: sorting the z-values back into weakly increasing order
# recovers the original sequence.
back = map_3201_to_3210(f)
print("round trip ok:", back == e)
