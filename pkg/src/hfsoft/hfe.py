"""Hesitant fuzzy elements (HFEs) and their pointwise operations.

An HFE is a non-empty finite set of membership degrees in ``[0, 1]``.  It is
stored canonically as a strictly ascending tuple of floats; two degrees closer
than :data:`EPS` are considered the same degree.

Union and intersection come in two flavours, selected by :class:`UnionMode`:

``SET``
    every pairwise max (resp. min) of the two operands, collected as a set.
``SORTED``
    both operands read as ascending lists, the shorter one padded by repeating
    its maximum (resp. its minimum, at the front), then combined position by
    position.  This is the default, and the shipped fixture tables use it.

The two disagree as soon as both operands have several degrees::

    >>> a, b = mk_hfe([0.1, 0.2, 0.9]), mk_hfe([0.2, 0.4, 0.6])
    >>> hfe_union(a, b, UnionMode.SET)
    HFE({0.2, 0.4, 0.6, 0.9})
    >>> hfe_union(a, b, UnionMode.SORTED)
    HFE({0.2, 0.4, 0.9})
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import DegreeOutOfRange, EmptyHFE, ValidationError

EPS = 1e-9


class UnionMode(str, enum.Enum):
    SET = "set"
    SORTED = "sorted"

    @classmethod
    def coerce(cls, mode: UnionMode | str | None) -> UnionMode:
        if mode is None:
            return cls.SORTED
        if isinstance(mode, cls):
            return mode
        try:
            return cls(str(mode).lower())
        except ValueError:
            raise ValidationError(f"unknown union mode {mode!r}") from None


def degrees_equal(a: float, b: float) -> bool:
    return abs(a - b) <= EPS


def _check_degree(value) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise DegreeOutOfRange(f"degree {value!r} is not a number") from None
    if not (-EPS <= v <= 1.0 + EPS):  # also rejects nan
        raise DegreeOutOfRange(f"degree {value!r} outside [0, 1]")
    return min(max(v, 0.0), 1.0)


def format_degree(x: float) -> str:
    """Up to nine decimals, trailing zeros trimmed but one decimal kept."""
    s = f"{x:.9f}".rstrip("0")
    if s.endswith("."):
        s += "0"
    return "0.0" if s == "-0.0" else s


@dataclass(frozen=True, eq=False)
class HFE:
    """A canonical hesitant fuzzy element.

    Build instances with :func:`mk_hfe`; the constructor assumes ``degrees``
    is already sorted, deduplicated and in range.
    """

    degrees: tuple[float, ...]

    __hash__ = None  # equality is tolerance based

    def __eq__(self, other):
        if not isinstance(other, HFE):
            return NotImplemented
        return len(self.degrees) == len(other.degrees) and all(
            degrees_equal(x, y) for x, y in zip(self.degrees, other.degrees)
        )

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __str__(self):
        return "{" + ", ".join(format_degree(d) for d in self.degrees) + "}"

    def __repr__(self):
        return f"HFE({self})"

    @property
    def lower(self) -> float:
        return self.degrees[0]

    @property
    def upper(self) -> float:
        return self.degrees[-1]


def _canonical(values: Iterable[float]) -> HFE:
    out: list[float] = []
    for v in sorted(values):
        if not out or v - out[-1] > EPS:
            out.append(v)
    return HFE(tuple(out))


def mk_hfe(values: Iterable[float]) -> HFE:
    """Validate ``values`` and return the canonical HFE they describe.

    Raises :class:`EmptyHFE` for an empty input and :class:`DegreeOutOfRange`
    for anything outside ``[-EPS, 1 + EPS]`` (values inside that slack are
    clamped onto the unit interval).
    """
    vals = [_check_degree(v) for v in values]
    if not vals:
        raise EmptyHFE("an HFE needs at least one degree")
    return _canonical(vals)


NULL = HFE((0.0,))


_NUMBER = re.compile(r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?")


def parse_hfe(text: str) -> HFE:
    """Parse the brace form, e.g. ``"{0.8, 0.4, 0.9}"``, in any order."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValidationError(f"HFE text must be wrapped in braces: {text!r}")
    parts = [p.strip() for p in body[1:-1].split(",") if p.strip()]
    for p in parts:
        if not _NUMBER.fullmatch(p):
            raise ValidationError(f"bad degree {p!r} in {text!r}")
    return mk_hfe(float(p) for p in parts)


def is_null(a: HFE) -> bool:
    return a == NULL


def bounds(a: HFE) -> tuple[float, float]:
    return a.degrees[0], a.degrees[-1]


def complement(a: HFE) -> HFE:
    return _canonical(1.0 - g for g in a.degrees)


def _pad_tail(xs: Sequence[float], n: int) -> list[float]:
    return list(xs) + [xs[-1]] * (n - len(xs))


def _pad_head(xs: Sequence[float], n: int) -> list[float]:
    return [xs[0]] * (n - len(xs)) + list(xs)


def hfe_union(a: HFE, b: HFE, mode: UnionMode | str = UnionMode.SORTED) -> HFE:
    mode = UnionMode.coerce(mode)
    if mode is UnionMode.SET:
        return _canonical(max(x, y) for x in a.degrees for y in b.degrees)
    n = max(len(a), len(b))
    xs, ys = _pad_tail(a.degrees, n), _pad_tail(b.degrees, n)
    return _canonical(max(x, y) for x, y in zip(xs, ys))


def hfe_intersection(a: HFE, b: HFE, mode: UnionMode | str = UnionMode.SORTED) -> HFE:
    mode = UnionMode.coerce(mode)
    if mode is UnionMode.SET:
        return _canonical(min(x, y) for x in a.degrees for y in b.degrees)
    n = max(len(a), len(b))
    xs, ys = _pad_head(a.degrees, n), _pad_head(b.degrees, n)
    return _canonical(min(x, y) for x, y in zip(xs, ys))


def hfe_union_n(items: Iterable[HFE], mode: UnionMode | str = UnionMode.SORTED) -> HFE:
    """Left fold of :func:`hfe_union` in the given order; ``[]`` gives ``{0}``."""
    mode = UnionMode.coerce(mode)
    items = list(items)
    if not items:
        return NULL
    return reduce(lambda acc, x: hfe_union(acc, x, mode), items)
