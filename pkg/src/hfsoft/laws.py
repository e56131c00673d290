"""Randomized and exhaustive verification of the mapping and HFE laws.

Every checker returns a :class:`LawReport`.  Random cases are drawn from a
:class:`random.Random` seeded by ``(seed, law id, case index)``, so a report
depends only on its :class:`GenConfig` and never on scheduling or on which
other laws ran before it.

Some laws are *asserted* (a failure is a bug) and some are *report-only*
(the algebra does not promise them, e.g. associativity of SORTED-mode union
or stepwise vs pointwise composition for non-injective maps); the latter carry
``asserted=False`` and never make :attr:`LawReport.ok` false.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import EnumerationTooLarge, NotManyOne
from .hfe import (
    HFE,
    NULL,
    UnionMode,
    complement,
    hfe_intersection,
    hfe_union,
    mk_hfe,
)
from .hfss import HFSS, SoftClass, hfss_equal, mk_class
from .mapping import (
    PointMap,
    SoftMapping,
    compose,
    composite_image,
    identity_mapping,
    image,
    inverse_image,
    invert,
    is_bijective,
    is_injective,
    is_many_one,
    is_surjective,
    mappings_equal,
)
from .scenario import Scenario, scenario_to_dict

DEFAULT_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
MAX_PAIRS = 10**6
ONE = HFE((1.0,))


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_universe: int = 3
    max_attributes: int = 3
    degree_grid: tuple[float, ...] = DEFAULT_GRID
    max_hfe_len: int = 3
    cases: int = 200

    def __post_init__(self):
        object.__setattr__(self, "degree_grid", mk_hfe(self.degree_grid).degrees)

    def rng(self, law: str, case: int) -> random.Random:
        return random.Random(f"{self.seed}/{law}/{case}")


@dataclass
class LawReport:
    law: str
    mode: UnionMode | None
    cases: int = 0
    failures: int = 0
    counterexample: dict | None = None
    asserted: bool = True
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.asserted or self.failures == 0

    def record(self, passed: bool, witness: Callable[[], dict]) -> None:
        self.cases += 1
        if not passed:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness()

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "mode": self.mode.value if self.mode else None,
            "asserted": self.asserted,
            "cases": self.cases,
            "failures": self.failures,
            "ok": self.ok,
            "note": self.note,
            "counterexample": self.counterexample,
        }

    def summary(self) -> str:
        status = "PASS" if self.failures == 0 else ("FAIL" if self.asserted else "INFO")
        mode = f"[{self.mode.value}]" if self.mode else "[-]"
        line = f"{status} {self.law} {mode} cases={self.cases} failures={self.failures}"
        return f"{line} ({self.note})" if self.note else line


def _merge(law: str, mode, reports: Sequence[LawReport]) -> LawReport:
    out = LawReport(law, mode)
    for r in reports:
        out.cases += r.cases
        out.failures += r.failures
        if out.counterexample is None and r.counterexample is not None:
            out.counterexample = {"law": r.law, **r.counterexample}
    return out


# ---------------------------------------------------------------- generators


def gen_class(rng: random.Random, cfg: GenConfig, tag: str, like: SoftClass | None = None) -> SoftClass:
    n = len(like.universe) if like else rng.randint(1, cfg.max_universe)
    m = len(like.attributes) if like else rng.randint(1, cfg.max_attributes)
    return mk_class([f"{tag}{i}" for i in range(n)], [f"{tag}e{i}" for i in range(m)])


def gen_point_map(rng: random.Random, dom, cod, kind: str = "any") -> PointMap:
    dom, cod = list(dom), list(cod)
    if kind == "bijective":
        if len(dom) != len(cod):
            raise ValueError("a bijection needs equal sizes")
        kind = "injective"
    if kind == "injective":
        images = rng.sample(cod, len(dom))
    elif kind == "surjective":
        order = dom[:]
        rng.shuffle(order)
        targets = cod[:]
        rng.shuffle(targets)
        assign = dict(zip(order, targets))
        for x in order[len(cod):]:
            assign[x] = rng.choice(cod)
        images = [assign[x] for x in dom]
    else:
        images = [rng.choice(cod) for _ in dom]
    return PointMap(dom, cod, dict(zip(dom, images)))


def gen_mapping(rng: random.Random, src: SoftClass, tgt: SoftClass, kind: str = "any") -> SoftMapping:
    return SoftMapping(
        src,
        tgt,
        gen_point_map(rng, src.universe, tgt.universe, kind),
        gen_point_map(rng, src.attributes, tgt.attributes, kind),
    )


def _gen_hfe(rng: random.Random, cfg: GenConfig) -> HFE:
    k = rng.randint(1, min(cfg.max_hfe_len, len(cfg.degree_grid)))
    return mk_hfe(rng.sample(cfg.degree_grid, k))


def gen_hfss(cfg: GenConfig, c: SoftClass, case: int = 0, rng: random.Random | None = None) -> HFSS:
    """Random soft set on ``c``: random support, grid-valued HFEs."""
    rng = rng or cfg.rng("gen_hfss", case)
    support = tuple(a for a in c.attributes if rng.random() < 0.5)
    table = {a: {x: _gen_hfe(rng, cfg) for x in c.universe} for a in support}
    return HFSS(c, support, table)


def with_cells(F: HFSS, cells: dict[tuple[str, str], HFE]) -> HFSS:
    """Copy of ``F`` with some cells replaced; new rows start out null."""
    table = {a: dict(row) for a, row in F.table.items()}
    for (a, x), h in cells.items():
        F.cls.check_attribute(a)
        F.cls.check_element(x)
        table.setdefault(a, {y: NULL for y in F.cls.universe})[x] = h
    support = tuple(a for a in F.cls.attributes if a in table)
    return HFSS(F.cls, support, {a: table[a] for a in support})


def _witness(mappings=(), sets=(), mode=None, **extra) -> dict:
    scn = Scenario(mode=mode or UnionMode.SORTED)
    for name, f in mappings:
        for c in (f.source, f.target):
            if c not in scn.classes.values():
                scn.classes[f"C{len(scn.classes)}"] = c
        scn.mappings[name] = f
    for name, F in sets:
        if F.cls not in scn.classes.values():
            scn.classes[f"C{len(scn.classes)}"] = F.cls
        scn.sets[name] = F
    doc = scenario_to_dict(scn)
    doc.update(extra)
    return doc


# ------------------------------------------------------------- mapping laws


def check_identity_laws(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    """``f o i = f`` and ``j o f = f``, at point level and on random sets."""
    mode = UnionMode.coerce(mode)
    rep = LawReport("identity_laws", mode)
    for k in range(cfg.cases):
        rng = cfg.rng(rep.law, k)
        U, V = gen_class(rng, cfg, "u"), gen_class(rng, cfg, "v")
        f = gen_mapping(rng, U, V)
        F = gen_hfss(cfg, U, rng=rng)
        i, j = identity_mapping(U), identity_mapping(V)
        fF = image(f, F, mode)
        passed = (
            hfss_equal(image(i, F, mode), F)
            and hfss_equal(image(f, image(i, F, mode), mode), fF)
            and hfss_equal(image(j, fF, mode), fF)
            and mappings_equal(compose(f, i), f)
            and mappings_equal(compose(j, f), f)
        )
        rep.record(passed, lambda: _witness([("f", f)], [("F", F)], mode))
    return rep


def check_associativity(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    mode = UnionMode.coerce(mode)
    rep = LawReport("associativity", mode)
    for k in range(cfg.cases):
        rng = cfg.rng(rep.law, k)
        U, V, W, X = (gen_class(rng, cfg, t) for t in "uvwx")
        f, g, h = gen_mapping(rng, U, V), gen_mapping(rng, V, W), gen_mapping(rng, W, X)
        F = gen_hfss(cfg, U, rng=rng)
        left, right = compose(h, compose(g, f)), compose(compose(h, g), f)
        passed = mappings_equal(left, right) and hfss_equal(image(left, F, mode), image(right, F, mode))
        rep.record(passed, lambda: _witness([("f", f), ("g", g), ("h", h)], [("F", F)], mode))
    return rep


def _left_inverses(m: PointMap) -> list[PointMap]:
    """All point maps ``h`` with ``h o m = id``, by brute force."""
    out = []
    for images in itertools.product(m.domain, repeat=len(m.codomain)):
        h = PointMap(m.codomain, m.domain, dict(zip(m.codomain, images)))
        if all(h(m(x)) == x for x in m.domain):
            out.append(h)
    return out


def check_inverse_uniqueness(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    """A bijective mapping has exactly one left inverse, and it is ``invert(f)``.

    The candidates are enumerated exhaustively; ``h o f = i`` splits into
    independent conditions on the two point maps, so the p- and q-candidates
    are searched separately and their product is the full candidate set.
    """
    mode = UnionMode.coerce(mode)
    rep = LawReport("inverse_uniqueness", mode)
    for k in range(cfg.cases):
        rng = cfg.rng(rep.law, k)
        U = gen_class(rng, cfg, "u")
        f = gen_mapping(rng, U, gen_class(rng, cfg, "v", like=U), "bijective")
        F = gen_hfss(cfg, U, rng=rng)
        fi = invert(f)
        ps, qs = _left_inverses(f.p), _left_inverses(f.q)
        passed = len(ps) == 1 and len(qs) == 1
        if passed:
            h = SoftMapping(f.target, f.source, ps[0], qs[0])
            passed = (
                mappings_equal(h, fi)
                and mappings_equal(compose(h, f), identity_mapping(U))
                and hfss_equal(image(h, image(f, F, mode), mode), F)
            )
        rep.record(passed, lambda: _witness([("f", f)], [("F", F)], mode, left_inverses=len(ps) * len(qs)))
    return rep


def check_roundtrip(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    """``f^-1 o f = i`` and ``f o f^-1 = j`` for bijective ``f``."""
    mode = UnionMode.coerce(mode)
    rep = LawReport("roundtrip", mode)
    for k in range(cfg.cases):
        rng = cfg.rng(rep.law, k)
        U = gen_class(rng, cfg, "u")
        V = gen_class(rng, cfg, "v", like=U)
        f = gen_mapping(rng, U, V, "bijective")
        F, G = gen_hfss(cfg, U, rng=rng), gen_hfss(cfg, V, rng=rng)
        fi = invert(f)
        fF = image(f, F, mode)
        passed = (
            hfss_equal(inverse_image(f, fF), F)
            and hfss_equal(image(fi, fF, mode), F)
            and hfss_equal(image(f, image(fi, G, mode), mode), G)
            and mappings_equal(compose(fi, f), identity_mapping(U))
            and mappings_equal(compose(f, fi), identity_mapping(V))
        )
        rep.record(passed, lambda: _witness([("f", f)], [("F", F), ("G", G)], mode))
    return rep


def check_inverse_of_composite(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    """``(g o f)^-1 = f^-1 o g^-1`` for bijective ``f`` and ``g``."""
    mode = UnionMode.coerce(mode)
    rep = LawReport("inverse_of_composite", mode)
    for k in range(cfg.cases):
        rng = cfg.rng(rep.law, k)
        U = gen_class(rng, cfg, "u")
        V, W = gen_class(rng, cfg, "v", like=U), gen_class(rng, cfg, "w", like=U)
        f, g = gen_mapping(rng, U, V, "bijective"), gen_mapping(rng, V, W, "bijective")
        H = gen_hfss(cfg, W, rng=rng)
        gf = compose(g, f)
        lhs = invert(gf)
        passed = (
            mappings_equal(lhs, compose(invert(f), invert(g)))
            and hfss_equal(image(lhs, H, mode), composite_image(invert(f), invert(g), H, mode))
            and hfss_equal(inverse_image(gf, H), inverse_image(f, inverse_image(g, H)))
        )
        rep.record(passed, lambda: _witness([("f", f), ("g", g)], [("H", H)], mode))
    return rep


def check_inverse_laws(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    """Uniqueness, roundtrip and the composite-inverse law, merged."""
    mode = UnionMode.coerce(mode)
    parts = [
        check_inverse_uniqueness(cfg, mode),
        check_roundtrip(cfg, mode),
        check_inverse_of_composite(cfg, mode),
    ]
    return _merge("inverse_laws", mode, parts)


def _gen_any_kind(rng: random.Random, cfg: GenConfig, src: SoftClass, tag: str) -> SoftMapping:
    """A mapping that is one-one, onto, bijective or unconstrained, equally often."""
    kind = rng.choice(["any", "injective", "surjective", "bijective"])
    n, m = len(src.universe), len(src.attributes)
    if kind == "bijective":
        tgt = gen_class(rng, cfg, tag, like=src)
    elif kind == "injective":
        tgt = mk_class(
            [f"{tag}{i}" for i in range(rng.randint(n, max(n, cfg.max_universe)))],
            [f"{tag}e{i}" for i in range(rng.randint(m, max(m, cfg.max_attributes)))],
        )
    elif kind == "surjective":
        tgt = mk_class(
            [f"{tag}{i}" for i in range(rng.randint(1, n))],
            [f"{tag}e{i}" for i in range(rng.randint(1, m))],
        )
    else:
        tgt = gen_class(rng, cfg, tag)
    return gen_mapping(rng, src, tgt, kind)


def check_bijectivity_preservation(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    """If ``f`` and ``g`` are one-one (onto, bijective) then so is ``g o f``."""
    mode = UnionMode.coerce(mode)
    rep = LawReport("bijectivity_preservation", mode)
    hits = {"injective": 0, "surjective": 0, "bijective": 0}
    for k in range(cfg.cases):
        rng = cfg.rng(rep.law, k)
        U = gen_class(rng, cfg, "u")
        f = _gen_any_kind(rng, cfg, U, "v")
        g = _gen_any_kind(rng, cfg, f.target, "w")
        gf = compose(g, f)
        passed = True
        for name, pred in (("injective", is_injective), ("surjective", is_surjective), ("bijective", is_bijective)):
            if pred(f) and pred(g):
                hits[name] += 1
                passed = passed and pred(gf)
        rep.record(passed, lambda: _witness([("f", f), ("g", g)], (), mode))
    rep.note = ", ".join(f"{k} premises={v}" for k, v in hits.items())
    return rep


def check_composite_consistency(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> list[LawReport]:
    """Stepwise ``g(f(F))`` against the image under the pointwise composite.

    Returns two reports: the whole population (report-only, with the
    agreement rate in ``note``) and its bijective part (asserted).
    """
    mode = UnionMode.coerce(mode)
    everything = LawReport("composite_consistency", mode, asserted=False)
    bij = LawReport("composite_consistency_bijective", mode)
    for k in range(cfg.cases):
        rng = cfg.rng(everything.law, k)
        U = gen_class(rng, cfg, "u")
        if rng.random() < 0.5:
            V, W = gen_class(rng, cfg, "v", like=U), gen_class(rng, cfg, "w", like=U)
            f, g = gen_mapping(rng, U, V, "bijective"), gen_mapping(rng, V, W, "bijective")
        else:
            V, W = gen_class(rng, cfg, "v"), gen_class(rng, cfg, "w")
            f, g = gen_mapping(rng, U, V), gen_mapping(rng, V, W)
        F = gen_hfss(cfg, U, rng=rng)
        passed = hfss_equal(composite_image(g, f, F, mode), image(compose(g, f), F, mode))

        def witness():
            return _witness([("f", f), ("g", g)], [("F", F)], mode)

        everything.record(passed, witness)
        if is_bijective(f) and is_bijective(g):
            bij.record(passed, witness)
    agree = everything.cases - everything.failures
    everything.note = f"agreement {agree}/{everything.cases}"
    return [everything, bij]


def construct_many_one_witness(f: SoftMapping, base: HFSS) -> tuple[HFSS, HFSS]:
    """Two distinct soft sets with the same image under a non-injective ``f``.

    ``{1}`` absorbs every HFE under union in both modes, so planting it in one
    cell of a merged fiber hides whatever sits in the other cells of that
    fiber; the second set differs from the first only in such a hidden cell.
    """
    if not is_many_one(f):
        raise NotManyOne("an injective mapping has no colliding pair")
    U = f.source.universe
    for y, fiber in f.p.fibers.items():
        if len(fiber) >= 2:
            s1, s2 = fiber[:2]
            alpha = base.support[0] if base.support else f.source.attributes[0]
            F = with_cells(base, {(alpha, s1): ONE})
            old = F.get(alpha, s2)
            F2 = with_cells(F, {(alpha, s2): NULL if old == ONE else ONE})
            return F, F2
    for beta, fiber in f.q.fibers.items():
        if len(fiber) >= 2:
            a1, a2 = fiber[:2]
            F = with_cells(base, {(a1, x): ONE for x in U})
            if a2 not in F.table:
                F = with_cells(F, {(a2, x): NULL for x in U})
            old = F.get(a2, U[0])
            F2 = with_cells(F, {(a2, U[0]): NULL if old == ONE else ONE})
            return F, F2
    raise AssertionError("unreachable: non-injective map without a merged fiber")


def check_many_one_witness(
    f: SoftMapping,
    mode: UnionMode | str = UnionMode.SORTED,
    witness: tuple[HFSS, HFSS] | None = None,
    base: HFSS | None = None,
) -> LawReport:
    """Verify (or build and verify) a colliding pair for ``f``."""
    mode = UnionMode.coerce(mode)
    if not is_many_one(f):
        raise NotManyOne("mapping is one-one, so no two soft sets share an image")
    if witness is None:
        witness = construct_many_one_witness(f, base or HFSS(f.source, (), {}))
    F, F2 = witness
    rep = LawReport("many_one_witness", mode)
    passed = not hfss_equal(F, F2) and hfss_equal(image(f, F, mode), image(f, F2, mode))
    rep.record(passed, lambda: _witness([("f", f)], [("F", F), ("F2", F2)], mode))
    return rep


def check_many_one_random(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    mode = UnionMode.coerce(mode)
    rep = LawReport("many_one_witness", mode)
    skipped = 0
    for k in range(cfg.cases):
        rng = cfg.rng(rep.law, k)
        U, V = gen_class(rng, cfg, "u"), gen_class(rng, cfg, "v")
        f = gen_mapping(rng, U, V)
        if not is_many_one(f):
            skipped += 1
            continue
        base = gen_hfss(cfg, U, rng=rng)
        sub = check_many_one_witness(f, mode, base=base)
        rep.cases += sub.cases
        rep.failures += sub.failures
        rep.counterexample = rep.counterexample or sub.counterexample
    rep.note = f"skipped {skipped} one-one draws"
    return rep


def all_hfes(grid: Sequence[float], max_len: int) -> list[HFE]:
    """Every canonical HFE with 1..max_len distinct degrees from ``grid``."""
    grid = mk_hfe(grid).degrees
    return [HFE(c) for n in range(1, max_len + 1) for c in itertools.combinations(grid, n)]


def enumerate_hfss(c: SoftClass, hfes: Sequence[HFE], limit: int = MAX_PAIRS) -> Iterator[HFSS]:
    """Every soft set on ``c`` with cell values from ``hfes``."""
    n_rows = len(hfes) ** len(c.universe)
    total = (1 + n_rows) ** len(c.attributes)
    if total > limit:
        raise EnumerationTooLarge(f"{total} soft sets exceed the limit of {limit}")
    rows = [None] + [dict(zip(c.universe, combo)) for combo in itertools.product(hfes, repeat=len(c.universe))]
    for choice in itertools.product(rows, repeat=len(c.attributes)):
        table = {a: r for a, r in zip(c.attributes, choice) if r is not None}
        yield HFSS(c, tuple(table), table)


def check_extensional_equality(
    c1: SoftClass,
    c2: SoftClass,
    f: SoftMapping,
    g: SoftMapping,
    grid: Sequence[float] = (0.0, 1.0),
    mode: UnionMode | str = UnionMode.SORTED,
    max_hfe_len: int = 2,
    limit: int = MAX_PAIRS,
) -> LawReport:
    """Check ``f == g`` iff ``f(F) == g(F)`` for every soft set ``F`` on ``c1``.

    All soft sets over ``grid`` (HFE lengths 1..``max_hfe_len``) are
    enumerated; the search stops at the first set that tells ``f`` and ``g``
    apart.  One failure means the biconditional does not hold for this pair.
    """
    mode = UnionMode.coerce(mode)
    rep = LawReport("extensional_equality", mode)
    same = mappings_equal(f, g)
    for m in (f, g):
        if m.source != c1 or m.target != c2:
            same = False
    seen = 0
    separating = None
    for F in enumerate_hfss(c1, all_hfes(grid, max_hfe_len), limit):
        seen += 1
        if not hfss_equal(image(f, F, mode), image(g, F, mode)):
            separating = F
            break
    agree = separating is None
    rep.cases = 1
    if same != agree:
        rep.failures = 1
        sets = [("F", separating)] if separating is not None else []
        rep.counterexample = _witness([("f", f), ("g", g)], sets, mode)
    rep.note = f"{'equal' if same else 'different'} mappings, {seen} soft sets examined"
    return rep


def check_extensional_random(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    """The extensional check on random pairs of maps between tiny classes."""
    mode = UnionMode.coerce(mode)
    rep = LawReport("extensional_equality", mode)
    tiny = GenConfig(cfg.seed, 2, 2, cfg.degree_grid, cfg.max_hfe_len, cfg.cases)
    grid = (0.0, 1.0)
    for k in range(min(cfg.cases, 50)):
        rng = cfg.rng(rep.law, k)
        U, V = gen_class(rng, tiny, "u"), gen_class(rng, tiny, "v")
        f = gen_mapping(rng, U, V)
        g = f if rng.random() < 0.3 else gen_mapping(rng, U, V)
        sub = check_extensional_equality(U, V, f, g, grid, mode)
        rep.cases += 1
        rep.failures += sub.failures
        rep.counterexample = rep.counterexample or sub.counterexample
    return rep


# ----------------------------------------------------------------- HFE laws


def _pairs(hfes: Sequence[HFE], cap: int = MAX_PAIRS):
    return itertools.islice(itertools.product(hfes, repeat=2), cap)


def _hfe_witness(**values) -> dict:
    return {k: list(v.degrees) for k, v in values.items()}


def check_demorgan_set_mode(cfg: GenConfig) -> LawReport:
    """Both De Morgan laws for SET-mode union and intersection, exhaustively."""
    mode = UnionMode.SET
    rep = LawReport("hfe_demorgan", mode)
    for a, b in _pairs(all_hfes(cfg.degree_grid, cfg.max_hfe_len)):
        ok = complement(hfe_union(a, b, mode)) == hfe_intersection(complement(a), complement(b), mode)
        ok = ok and complement(hfe_intersection(a, b, mode)) == hfe_union(complement(a), complement(b), mode)
        rep.record(ok, lambda: _hfe_witness(a=a, b=b))
    return rep


def check_hfe_commutativity(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    mode = UnionMode.coerce(mode)
    rep = LawReport("hfe_commutativity", mode)
    for a, b in _pairs(all_hfes(cfg.degree_grid, cfg.max_hfe_len)):
        ok = hfe_union(a, b, mode) == hfe_union(b, a, mode)
        ok = ok and hfe_intersection(a, b, mode) == hfe_intersection(b, a, mode)
        rep.record(ok, lambda: _hfe_witness(a=a, b=b))
    return rep


def check_hfe_idempotence(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    mode = UnionMode.coerce(mode)
    rep = LawReport("hfe_idempotence", mode)
    for a in all_hfes(cfg.degree_grid, cfg.max_hfe_len):
        ok = hfe_union(a, a, mode) == a and hfe_intersection(a, a, mode) == a
        rep.record(ok, lambda: _hfe_witness(a=a))
    return rep


def check_hfe_null_identity(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    mode = UnionMode.coerce(mode)
    rep = LawReport("hfe_null_identity", mode)
    for a in all_hfes(cfg.degree_grid, cfg.max_hfe_len):
        ok = hfe_union(a, NULL, mode) == a and hfe_union(NULL, a, mode) == a
        rep.record(ok, lambda: _hfe_witness(a=a))
    return rep


def check_hfe_involution(cfg: GenConfig) -> LawReport:
    rep = LawReport("hfe_involution", None)
    for a in all_hfes(cfg.degree_grid, cfg.max_hfe_len):
        rep.record(complement(complement(a)) == a, lambda: _hfe_witness(a=a))
    return rep


def check_hfe_associativity(cfg: GenConfig, mode: UnionMode | str = UnionMode.SORTED) -> LawReport:
    """Union associativity over all triples; asserted for SET only."""
    mode = UnionMode.coerce(mode)
    rep = LawReport("hfe_associativity", mode, asserted=mode is UnionMode.SET)
    hfes = all_hfes(cfg.degree_grid, cfg.max_hfe_len)
    for a, b, c in itertools.islice(itertools.product(hfes, repeat=3), MAX_PAIRS):
        ok = hfe_union(hfe_union(a, b, mode), c, mode) == hfe_union(a, hfe_union(b, c, mode), mode)
        rep.record(ok, lambda: _hfe_witness(a=a, b=b, c=c))
    if not rep.asserted:
        rep.note = f"agreement {rep.cases - rep.failures}/{rep.cases}"
    return rep


def check_canonical_form(cfg: GenConfig, max_len: int = 5) -> LawReport:
    """``mk_hfe`` is idempotent on every raw list over the grid."""
    rep = LawReport("hfe_canonical_form", None)
    for n in range(1, max_len + 1):
        for raw in itertools.product(cfg.degree_grid, repeat=n):
            h = mk_hfe(raw)
            ok = mk_hfe(h.degrees) == h and list(h.degrees) == sorted(set(raw))
            rep.record(ok, lambda: {"raw": list(raw)})
    return rep


# ------------------------------------------------------------------- runner

MAPPING_LAWS = (
    check_identity_laws,
    check_associativity,
    check_inverse_uniqueness,
    check_roundtrip,
    check_inverse_of_composite,
    check_bijectivity_preservation,
    check_many_one_random,
    check_extensional_random,
)


def run_laws(cfg: GenConfig, modes: Sequence[UnionMode | str] = (UnionMode.SORTED, UnionMode.SET)) -> list[LawReport]:
    """Run the whole suite; reports come back in a fixed order."""
    modes = [UnionMode.coerce(m) for m in modes]
    reports: list[LawReport] = []
    for mode in modes:
        for check in MAPPING_LAWS:
            reports.append(check(cfg, mode))
        reports.extend(check_composite_consistency(cfg, mode))
        reports.append(check_hfe_commutativity(cfg, mode))
        reports.append(check_hfe_idempotence(cfg, mode))
        reports.append(check_hfe_null_identity(cfg, mode))
        reports.append(check_hfe_associativity(cfg, mode))
    reports.append(check_demorgan_set_mode(cfg))
    reports.append(check_hfe_involution(cfg))
    reports.append(check_canonical_form(cfg))
    return reports


def laws_document(cfg: GenConfig, reports: Sequence[LawReport]) -> dict:
    return {
        "config": {
            "seed": cfg.seed,
            "cases": cfg.cases,
            "max_universe": cfg.max_universe,
            "max_attributes": cfg.max_attributes,
            "degree_grid": list(cfg.degree_grid),
            "max_hfe_len": cfg.max_hfe_len,
        },
        "ok": all(r.ok for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
