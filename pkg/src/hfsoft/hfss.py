"""Soft classes and hesitant fuzzy soft sets (HFSSs).

A :class:`SoftClass` fixes a universe ``U`` and an attribute set ``E``; an
:class:`HFSS` over it assigns, for every attribute in its support ``A``, an HFE
to every element of ``U``.  Reads outside the support return the null HFE
``{0}``, and :func:`hfss_equal` compares sets after that null-extension, so a
row of explicit ``{0}`` entries is the same as no row at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    ClassMismatch,
    DuplicateId,
    EmptyAttributeSet,
    EmptyUniverse,
    MissingElement,
    MissingRow,
    UnknownAttribute,
    UnknownElement,
)
from .hfe import HFE, NULL, UnionMode, hfe_union, mk_hfe


def _check_ids(ids, what: str) -> tuple[str, ...]:
    ids = tuple(str(i) for i in ids)
    seen = set()
    for i in ids:
        if i in seen:
            raise DuplicateId(f"duplicate {what} id {i!r}")
        seen.add(i)
    return ids


@dataclass(frozen=True)
class SoftClass:
    """The class ``(U, E)``; declaration order is the canonical order."""

    universe: tuple[str, ...]
    attributes: tuple[str, ...]

    def __post_init__(self):
        universe = _check_ids(self.universe, "element")
        attributes = _check_ids(self.attributes, "attribute")
        if not universe:
            raise EmptyUniverse("a soft class needs at least one element")
        if not attributes:
            raise EmptyAttributeSet("a soft class needs at least one attribute")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "attributes", attributes)

    def check_attribute(self, attr: str) -> None:
        if attr not in self.attributes:
            raise UnknownAttribute(f"attribute {attr!r} not in {list(self.attributes)}")

    def check_element(self, elem: str) -> None:
        if elem not in self.universe:
            raise UnknownElement(f"element {elem!r} not in {list(self.universe)}")


def mk_class(universe: Iterable[str], attributes: Iterable[str]) -> SoftClass:
    return SoftClass(tuple(universe), tuple(attributes))


@dataclass(frozen=True, eq=False)
class HFSS:
    """A hesitant fuzzy soft set ``F_A``.

    ``table`` maps each supported attribute to a row ``{element: HFE}`` that
    covers the whole universe.  Use :func:`mk_hfss` to build a validated
    instance from raw data.
    """

    cls: SoftClass
    support: tuple[str, ...]
    table: Mapping[str, Mapping[str, HFE]] = field(repr=False)

    __hash__ = None

    def get(self, attr: str, elem: str) -> HFE:
        return hfss_get(self, attr, elem)

    def row(self, attr: str) -> dict[str, HFE]:
        return {x: hfss_get(self, attr, x) for x in self.cls.universe}

    def __eq__(self, other):
        if not isinstance(other, HFSS):
            return NotImplemented
        return hfss_equal(self, other)

    def __str__(self):
        return render_hfss(self)


def mk_hfss(cls: SoftClass, support: Iterable[str] | None, table: Mapping) -> HFSS:
    """Validate ``table`` against ``cls`` and canonicalize every entry.

    ``support`` may be ``None``, in which case the table's keys are used.
    Entries may be :class:`HFE` instances or plain sequences of degrees.
    """
    if support is None:
        support = list(table)
    support = list(support)
    for attr in support:
        cls.check_attribute(attr)
    for attr in table:
        cls.check_attribute(attr)
        if attr not in support:
            raise MissingRow(f"row {attr!r} is given but not listed in the support")
    if len(set(support)) != len(support):
        raise DuplicateId(f"duplicate attribute in support {support}")

    rows = {}
    for attr in support:
        if attr not in table:
            raise MissingRow(f"support attribute {attr!r} has no row")
        raw = table[attr]
        for elem in raw:
            cls.check_element(elem)
        row = {}
        for elem in cls.universe:
            if elem not in raw:
                raise MissingElement(f"row {attr!r} has no entry for element {elem!r}")
            v = raw[elem]
            row[elem] = v if isinstance(v, HFE) else mk_hfe(v)
        rows[attr] = row
    ordered = tuple(a for a in cls.attributes if a in rows)
    return HFSS(cls, ordered, {a: rows[a] for a in ordered})


def empty_hfss(cls: SoftClass) -> HFSS:
    return HFSS(cls, (), {})


def hfss_get(F: HFSS, attr: str, elem: str) -> HFE:
    F.cls.check_attribute(attr)
    F.cls.check_element(elem)
    row = F.table.get(attr)
    return NULL if row is None else row[elem]


def hfss_union(F: HFSS, G: HFSS, mode: UnionMode | str = UnionMode.SORTED) -> HFSS:
    """Union of two soft sets over the same class.

    Rows only in ``F`` or only in ``G`` are copied; shared rows are combined
    element-wise with :func:`hfe_union`.
    """
    if F.cls != G.cls:
        raise ClassMismatch("union of soft sets over different classes")
    table = {}
    for attr in F.cls.attributes:
        in_f, in_g = attr in F.table, attr in G.table
        if in_f and in_g:
            table[attr] = {
                x: hfe_union(F.table[attr][x], G.table[attr][x], mode) for x in F.cls.universe
            }
        elif in_f:
            table[attr] = dict(F.table[attr])
        elif in_g:
            table[attr] = dict(G.table[attr])
    return HFSS(F.cls, tuple(table), table)


def hfss_equal(F: HFSS, G: HFSS) -> bool:
    if F.cls != G.cls:
        return False
    return all(
        hfss_get(F, a, x) == hfss_get(G, a, x)
        for a in F.cls.attributes
        for x in F.cls.universe
    )


def render_hfss(F: HFSS, attributes: Iterable[str] | None = None) -> str:
    """One line per attribute, ``e1: a={0.6, 0.8}, b={0.3}``.

    All class attributes are listed by default, unsupported ones as null rows.
    """
    attrs = F.cls.attributes if attributes is None else tuple(attributes)
    lines = []
    for a in attrs:
        cells = ", ".join(f"{x}={hfss_get(F, a, x)}" for x in F.cls.universe)
        lines.append(f"{a}: {cells}")
    return "\n".join(lines)
