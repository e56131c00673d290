"""
Pushing a soft set forward and pulling one back
================================================

A soft mapping pairs a map on universe points with a map on attributes.
Images merge every cell that lands on the same target cell.  Inverse images
copy one target cell back to each source cell.
"""

from hfsoft import image, inverse_image, is_many_one, load_scenario, render_hfss

scn = load_scenario("example_3_5.json")
f = scn.mapping("f")
F = scn.set("F_A")

print("p:", f.p.pairs)
print("q:", f.q.pairs)
print(render_hfss(F))

###############################################################################
# Points a and c both land on y, so the image cell at y is a union of two
# source cells.  Nothing lands on z, which therefore gets the null element.

print(render_hfss(image(f, F)))

###############################################################################
# Switching to SET mode changes only the cell where two multi-candidate
# elements meet.

print(render_hfss(image(f, F, "set")))

###############################################################################
# The inverse image needs no union at all.  Attributes whose target lies
# outside the support of the pulled-back set come out null.

print(render_hfss(inverse_image(f, scn.set("F_B'"))))
print("many-one:", is_many_one(f))
