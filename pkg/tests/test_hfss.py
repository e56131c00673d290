import pytest

from hfsoft import (
    NULL,
    UnionMode,
    empty_hfss,
    hfe_union,
    hfss_equal,
    hfss_get,
    hfss_union,
    mk_class,
    mk_hfe,
    mk_hfss,
    render_hfss,
)
from hfsoft.errors import (
    ClassMismatch,
    DuplicateId,
    EmptyAttributeSet,
    EmptyUniverse,
    MissingElement,
    MissingRow,
    UnknownAttribute,
    UnknownElement,
)

UE = mk_class(["a", "b", "c"], ["e1", "e2", "e3", "e4"])


def test_mk_class(ex35):
    assert ex35.classes["UE"] == UE
    assert ex35.classes["VE'"] == mk_class(["x", "y", "z"], ["e1'", "e2'", "e3'"])
    with pytest.raises(DuplicateId):
        mk_class(["a", "a"], ["e1"])
    with pytest.raises(EmptyUniverse):
        mk_class([], ["e1"])
    with pytest.raises(EmptyAttributeSet):
        mk_class(["a"], [])


def test_mk_hfss_validation():
    row = {"a": [0.1], "b": [0.2], "c": [0.3]}
    F = mk_hfss(UE, ["e1"], {"e1": row})
    assert F.support == ("e1",)
    with pytest.raises(UnknownAttribute):
        mk_hfss(UE, ["e5"], {"e5": row})
    with pytest.raises(MissingElement):
        mk_hfss(UE, ["e1"], {"e1": {"a": [0.1], "b": [0.2]}})
    with pytest.raises(MissingRow):
        mk_hfss(UE, ["e1", "e2"], {"e1": row})
    with pytest.raises(MissingRow):
        mk_hfss(UE, ["e1"], {"e1": row, "e2": row})
    with pytest.raises(UnknownElement):
        mk_hfss(UE, ["e1"], {"e1": {**row, "d": [0.5]}})


def test_support_follows_class_order():
    row = {"a": [0.1], "b": [0.2], "c": [0.3]}
    F = mk_hfss(UE, ["e4", "e1"], {"e4": row, "e1": row})
    assert F.support == ("e1", "e4")


def test_get_with_null_extension(ex35):
    F = ex35.sets["F_A"]
    assert hfss_get(F, "e2", "a") == mk_hfe([0.1, 0.2, 0.9])
    assert hfss_get(F, "e3", "b") == NULL
    assert hfss_get(F, "e4", "c") == mk_hfe([0.4, 0.8])
    with pytest.raises(UnknownAttribute):
        hfss_get(F, "e9", "a")
    with pytest.raises(UnknownElement):
        hfss_get(F, "e1", "q")


def _row(*vals):
    return dict(zip("abc", ([v] if isinstance(v, float) else v for v in vals)))


def test_union_disjoint_supports():
    F = mk_hfss(UE, ["e1"], {"e1": _row(0.1, 0.2, 0.3)})
    G = mk_hfss(UE, ["e2"], {"e2": _row(0.4, 0.5, 0.6)})
    H = hfss_union(F, G)
    assert H.support == ("e1", "e2")
    assert H.get("e1", "b") == mk_hfe([0.2])
    assert H.get("e2", "c") == mk_hfe([0.6])


@pytest.mark.parametrize("mode", list(UnionMode))
def test_union_overlap(mode):
    F = mk_hfss(UE, ["e1"], {"e1": _row([0.6, 0.8], 0.1, 0.1)})
    G = mk_hfss(UE, ["e1", "e3"], {"e1": _row(0.3, 0.2, 0.0), "e3": _row(0.9, 0.9, 0.9)})
    H = hfss_union(F, G, mode)
    assert H.support == ("e1", "e3")
    assert H.get("e1", "a") == hfe_union(mk_hfe([0.6, 0.8]), mk_hfe([0.3]), mode) == mk_hfe([0.6, 0.8])
    assert H.get("e1", "b") == mk_hfe([0.2])
    assert H.get("e3", "a") == mk_hfe([0.9])


def test_union_idempotent_and_identity(ex35):
    F = ex35.sets["F_A"]
    assert hfss_equal(hfss_union(F, F), F)
    assert hfss_equal(hfss_union(F, empty_hfss(UE)), F)


def test_union_class_mismatch(ex35):
    with pytest.raises(ClassMismatch):
        hfss_union(ex35.sets["F_A"], ex35.sets["F_B'"])


def test_equality_up_to_null_rows(ex35, ex314):
    F = ex35.sets["F_A"]
    null_row = {x: [0.0] for x in "abc"}
    padded = mk_hfss(UE, ["e1", "e2", "e3", "e4"], {**{a: F.table[a] for a in F.support}, "e3": null_row})
    assert hfss_equal(F, padded)
    assert F == padded
    assert not hfss_equal(ex314.sets["F_A"], ex314.sets["M_A"])
    assert not hfss_equal(F, ex35.sets["F_B'"])


def test_render(ex35):
    text = render_hfss(ex35.sets["F_A"])
    assert text.splitlines()[0] == "e1: a={0.6, 0.8}, b={0.4, 0.8, 0.9}, c={0.3}"
    assert text.splitlines()[2] == "e3: a={0.0}, b={0.0}, c={0.0}"
    assert render_hfss(ex35.sets["F_A"], ["e4"]) == "e4: a={0.3}, b={0.2, 0.6}, c={0.4, 0.8}"
