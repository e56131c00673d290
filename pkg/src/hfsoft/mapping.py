"""Soft mappings ``f = (p, q)`` between soft classes.

``p`` acts on universes and ``q`` on attribute sets.  The image of ``F_A`` is
the pushforward

    f(F_A)(beta)(y) = union of F(alpha)(s)
                      over alpha in q^-1(beta) & A, s in p^-1(y)

and the inverse image of ``G_B`` is the pullback
``f^-1(G_B)(alpha)(x) = G(q(alpha))(p(x))``.

Every n-ary union is folded attribute-major, in the canonical declaration
order of the source class, so results are deterministic in SORTED mode too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .errors import ClassMismatch, NonTotalMap, NotBijective, UnknownId
from .hfe import UnionMode, hfe_union_n
from .hfss import HFSS, SoftClass, hfss_get


@dataclass(frozen=True)
class PointMap:
    """A total function between two finite ordered id lists."""

    domain: tuple[str, ...]
    codomain: tuple[str, ...]
    pairs: Mapping[str, str] = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "codomain", tuple(self.codomain))
        cod = set(self.codomain)
        pairs = {}
        for k, v in self.pairs.items():
            if k not in self.domain:
                raise UnknownId(f"{k!r} is not in the domain {list(self.domain)}")
            if v not in cod:
                raise UnknownId(f"{k!r} maps to {v!r}, not in the codomain {list(self.codomain)}")
        for k in self.domain:
            if k not in self.pairs:
                raise NonTotalMap(f"no image given for {k!r}")
            pairs[k] = self.pairs[k]
        object.__setattr__(self, "pairs", pairs)

    def __eq__(self, other):
        if not isinstance(other, PointMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.pairs == other.pairs
        )

    __hash__ = None

    def __call__(self, x: str) -> str:
        return self.pairs[x]

    @cached_property
    def fibers(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {y: [] for y in self.codomain}
        for x in self.domain:
            out[self.pairs[x]].append(x)
        return {y: tuple(xs) for y, xs in out.items()}

    def preimage(self, y: str) -> tuple[str, ...]:
        try:
            return self.fibers[y]
        except KeyError:
            raise UnknownId(f"{y!r} is not in the codomain") from None

    def image_set(self) -> set[str]:
        return set(self.pairs.values())

    def is_injective(self) -> bool:
        return len(self.image_set()) == len(self.domain)

    def is_surjective(self) -> bool:
        return self.image_set() == set(self.codomain)

    def then(self, other: PointMap) -> PointMap:
        """``other`` after ``self``."""
        if self.codomain != other.domain:
            raise ClassMismatch("point maps are not composable")
        return PointMap(self.domain, other.codomain, {x: other(self(x)) for x in self.domain})

    def inverse(self) -> PointMap:
        if not (self.is_injective() and self.is_surjective()):
            raise NotBijective("point map is not a bijection")
        return PointMap(self.codomain, self.domain, {v: k for k, v in self.pairs.items()})


def identity_map(ids) -> PointMap:
    ids = tuple(ids)
    return PointMap(ids, ids, {x: x for x in ids})


def preimage_points(m: PointMap, y: str) -> tuple[str, ...]:
    return m.preimage(y)


@dataclass(frozen=True)
class SoftMapping:
    source: SoftClass
    target: SoftClass
    p: PointMap
    q: PointMap

    __hash__ = None

    def __post_init__(self):
        if self.p.domain != self.source.universe or self.p.codomain != self.target.universe:
            raise ClassMismatch("p must map the source universe into the target universe")
        if self.q.domain != self.source.attributes or self.q.codomain != self.target.attributes:
            raise ClassMismatch("q must map the source attributes into the target attributes")

    def __call__(self, F: HFSS, mode: UnionMode | str = UnionMode.SORTED) -> HFSS:
        return image(self, F, mode)


def mk_mapping(source: SoftClass, target: SoftClass, p: Mapping[str, str], q: Mapping[str, str]) -> SoftMapping:
    return SoftMapping(
        source,
        target,
        PointMap(source.universe, target.universe, dict(p)),
        PointMap(source.attributes, target.attributes, dict(q)),
    )


def image(f: SoftMapping, F: HFSS, mode: UnionMode | str = UnionMode.SORTED) -> HFSS:
    """Hesitant fuzzy soft image ``f(F_A)``; its support is ``q(E)``."""
    if F.cls != f.source:
        raise ClassMismatch("soft set does not live on the mapping's source class")
    mode = UnionMode.coerce(mode)
    reached = f.q.image_set()
    support = tuple(b for b in f.target.attributes if b in reached)
    table = {}
    for beta in support:
        alphas = [a for a in f.q.preimage(beta) if a in F.table]
        table[beta] = {
            y: hfe_union_n(
                (F.table[a][s] for a in alphas for s in f.p.preimage(y)), mode
            )
            for y in f.target.universe
        }
    return HFSS(f.target, support, table)


def inverse_image(f: SoftMapping, G: HFSS) -> HFSS:
    """Hesitant fuzzy soft inverse image ``f^-1(G_B)``; support ``q^-1(B)``."""
    if G.cls != f.target:
        raise ClassMismatch("soft set does not live on the mapping's target class")
    support = tuple(a for a in f.source.attributes if f.q(a) in G.table)
    table = {
        a: {x: hfss_get(G, f.q(a), f.p(x)) for x in f.source.universe} for a in support
    }
    return HFSS(f.source, support, table)


def compose(g: SoftMapping, f: SoftMapping) -> SoftMapping:
    """``g o f`` realised pointwise as ``(r o p, t o q)``."""
    if f.target != g.source:
        raise ClassMismatch("target of the inner mapping differs from source of the outer one")
    return SoftMapping(f.source, g.target, f.p.then(g.p), f.q.then(g.q))


def composite_image(g: SoftMapping, f: SoftMapping, F: HFSS, mode: UnionMode | str = UnionMode.SORTED) -> HFSS:
    """``(g o f)(F_A)`` evaluated stepwise as ``g(f(F_A))``."""
    if f.target != g.source:
        raise ClassMismatch("target of the inner mapping differs from source of the outer one")
    return image(g, image(f, F, mode), mode)


def identity_mapping(c: SoftClass) -> SoftMapping:
    return SoftMapping(c, c, identity_map(c.universe), identity_map(c.attributes))


def is_injective(f: SoftMapping) -> bool:
    return f.p.is_injective() and f.q.is_injective()


def is_surjective(f: SoftMapping) -> bool:
    return f.p.is_surjective() and f.q.is_surjective()


def is_bijective(f: SoftMapping) -> bool:
    return is_injective(f) and is_surjective(f)


def is_many_one(f: SoftMapping) -> bool:
    # a merge in p or q is enough to build two distinct sets with one image
    return not is_injective(f)


def invert(f: SoftMapping) -> SoftMapping:
    if not is_bijective(f):
        raise NotBijective("only one-one onto mappings can be inverted")
    return SoftMapping(f.target, f.source, f.p.inverse(), f.q.inverse())


def mappings_equal(f: SoftMapping, g: SoftMapping) -> bool:
    return (
        f.source == g.source
        and f.target == g.target
        and f.p == g.p
        and f.q == g.q
    )
