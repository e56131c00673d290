"""
Composing soft mappings
=======================

Mappings compose component-wise.  Applying the composite in one step can be
compared with applying the two mappings one after the other.
"""

from hfsoft import compose, composite_image, hfss_equal, image, invert, is_bijective, load_scenario, render_hfss

scn = load_scenario("example_3_10.json")
f, g, F = scn.mapping("f"), scn.mapping("g"), scn.set("F_A")
gf = compose(g, f)
print("p:", gf.p.pairs)
print("q:", gf.q.pairs)

###############################################################################
# The stepwise image g(f(F)) on the shipped scenario.  The attribute that no
# source attribute reaches shows up as an all-null row.

print(render_hfss(composite_image(g, f, F)))
print("one step agrees:", hfss_equal(image(gf, F), composite_image(g, f, F)))

###############################################################################
# With bijections nothing is ever merged, so inverting recovers the input.

bij = load_scenario("thm_3_11.json")
f2, L = bij.mapping("f"), bij.set("L_A")
print("bijective:", is_bijective(f2))
print("recovered:", hfss_equal(image(invert(f2), image(f2, L)), L))
