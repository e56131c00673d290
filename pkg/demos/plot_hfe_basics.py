"""
Hesitant fuzzy elements and the two union conventions
======================================================

An element's membership can be uncertain among several candidate degrees.
A hesitant fuzzy element stores those candidates as a sorted set.
"""

from hfsoft import NULL, UnionMode, complement, hfe_intersection, hfe_union, mk_hfe

# Construction sorts, removes duplicates and checks every degree lies in [0, 1].
a = mk_hfe([0.9, 0.1, 0.2, 0.2])
b = mk_hfe([0.6, 0.4, 0.2])
print("a =", a)
print("b =", b)

###############################################################################
# Union compares candidates.  SET mode keeps the maximum of every pairing,
# which can grow the result.  SORTED mode lines both lists up position by
# position, padding the shorter one with its own maximum.

print("SET    a | b =", hfe_union(a, b, UnionMode.SET))
print("SORTED a | b =", hfe_union(a, b, UnionMode.SORTED))

###############################################################################
# Both conventions agree whenever each side has a single candidate, because
# then union reduces to an ordinary max.

print(hfe_union(mk_hfe([0.3]), mk_hfe([0.7]), "set"), hfe_union(mk_hfe([0.3]), mk_hfe([0.7]), "sorted"))

###############################################################################
# The null element {0} leaves any union unchanged, and complement mirrors
# every degree through 1/2.

print("a | null =", hfe_union(a, NULL))
print("complement(a) =", complement(a))
print("De Morgan holds:", complement(hfe_union(a, b, "set")) == hfe_intersection(complement(a), complement(b), "set"))
