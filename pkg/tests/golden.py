"""Reference tables for the shipped fixtures, transcribed by hand.

Degrees are kept in the printed (unsorted) order on purpose; comparisons go
through ``mk_hfe`` so ordering never matters.
"""

from hfsoft import mk_hfe

N = [0.0]

# f(F_A) in example_3_5.json; f(M_A) in example_3_14.json is the same
F_OF_FA = {
    "e1'": {"x": [0.5], "y": [0.2, 0.4, 0.9], "z": N},
    "e2'": {"x": [0.8, 0.4, 0.9], "y": [0.6, 0.8], "z": N},
    "e3'": {"x": [0.2, 0.6], "y": [0.4, 0.8], "z": N},
}

# f^-1(F_B') in example_3_5.json
F_INV_FB = {
    "e1": {"a": [0.7], "b": [0.5, 0.3, 0.7], "c": [0.7]},
    "e2": {"a": [0.3, 0.1, 0.8], "b": [0.2, 0.4], "c": [0.3, 0.1, 0.8]},
    "e3": {"a": [0.7], "b": [0.5, 0.3, 0.7], "c": [0.7]},
    "e4": {"a": [0.6, 0.8], "b": [0.9], "c": [0.6, 0.8]},
}

# (g o f)(F_A) in example_3_10.json
GF_OF_FA = {
    "e1''": {"h1": N, "h2": [0.2, 0.6], "h3": [0.4, 0.8]},
    "e2''": {"h1": N, "h2": N, "h3": N},
    "e3''": {"h1": N, "h2": [0.5, 0.8, 0.9], "h3": [0.6, 0.8, 0.9]},
}

# f(L_A) in thm_3_11.json
F_OF_LA = {
    "e1'": {"x": [0.5], "y": [0.2, 0.4, 0.6], "z": [0.9, 0.1, 0.2]},
    "e2'": {"x": [0.8, 0.4, 0.9], "y": [0.3], "z": [0.6, 0.8]},
    "e3'": {"x": N, "y": N, "z": N},
}

# (g o f)(L_A) in thm_3_11.json
GF_OF_LA = {
    "e1''": {"h1": [0.6, 0.8], "h2": [0.8, 0.4, 0.9], "h3": [0.3]},
    "e2''": {"h1": N, "h2": N, "h3": N},
    "e3''": {"h1": [0.9, 0.1, 0.2], "h2": [0.5], "h3": [0.2, 0.4, 0.6]},
}

# L_A in thm_3_11.json, which is also f^-1(G_B)
L_A = {
    "e1": {"a": [0.6, 0.8], "b": [0.8, 0.4, 0.9], "c": [0.3]},
    "e2": {"a": N, "b": N, "c": N},
    "e3": {"a": [0.9, 0.1, 0.2], "b": [0.5], "c": [0.2, 0.4, 0.6]},
}

# i(F_A) in thm_3_17.json
I_OF_FA = {
    "e1": {"a": [0.6, 0.8], "b": [0.8, 0.4, 0.9], "c": [0.3]},
    "e2": {"a": [0.9, 0.1, 0.2], "b": [0.5], "c": [0.2, 0.4, 0.6]},
    "e3": {"a": N, "b": N, "c": N},
    "e4": {"a": [0.3], "b": [0.2, 0.6], "c": [0.4, 0.8]},
}


def table_mismatches(F, expected):
    """Cells where ``F`` differs from a printed table; rows cover all of E."""
    bad = []
    assert list(expected) == list(F.cls.attributes)
    for attr, row in expected.items():
        assert list(row) == list(F.cls.universe)
        for elem, raw in row.items():
            got, want = F.get(attr, elem), mk_hfe(raw)
            if got != want:
                bad.append((attr, elem, str(got), str(want)))
    return bad
