"""Scenario documents: the JSON interchange format.

A scenario names soft classes, mappings between them and soft sets on them::

    {
      "classes":  {"UE": {"universe": ["a", "b"], "attributes": ["e1", "e2"]}},
      "mappings": {"f": {"source": "UE", "target": "VE'",
                         "p": {"a": "x", "b": "y"}, "q": {"e1": "e1'", "e2": "e1'"}}},
      "sets":     {"F_A": {"class": "UE", "support": ["e1"],
                           "table": {"e1": {"a": [0.6, 0.8], "b": [0.3]}}}},
      "options":  {"mode": "sorted"}
    }

An HFE is a JSON array of numbers (any order) or the brace string
``"{0.6, 0.8}"``.  ``support`` may be omitted, in which case it is the set of
table keys.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import ParseError, UnknownClass, ValidationError
from .hfe import HFE, UnionMode, mk_hfe, parse_hfe
from .hfss import HFSS, SoftClass, mk_class, mk_hfss
from .mapping import SoftMapping, mk_mapping

_TOP_KEYS = {"classes", "mappings", "sets", "options"}


@dataclass
class Scenario:
    classes: dict[str, SoftClass] = field(default_factory=dict)
    mappings: dict[str, SoftMapping] = field(default_factory=dict)
    sets: dict[str, HFSS] = field(default_factory=dict)
    mode: UnionMode = UnionMode.SORTED

    def class_name(self, cls: SoftClass) -> str:
        for name, c in self.classes.items():
            if c == cls:
                return name
        raise UnknownClass("soft class is not declared in this scenario")

    def mapping(self, name: str) -> SoftMapping:
        try:
            return self.mappings[name]
        except KeyError:
            raise ValidationError(f"unknown mapping {name!r}; have {sorted(self.mappings)}") from None

    def set(self, name: str) -> HFSS:
        try:
            return self.sets[name]
        except KeyError:
            raise ValidationError(f"unknown soft set {name!r}; have {sorted(self.sets)}") from None


def _rewrap(exc: ValidationError, where: str) -> ValidationError:
    return type(exc)(f"{where}: {exc}")


def _expect(obj, kind, where):
    if not isinstance(obj, kind):
        raise ValidationError(f"{where}: expected a JSON {kind.__name__ if kind is not dict else 'object'}")
    return obj


def _hfe_from_json(value, where) -> HFE:
    if isinstance(value, str):
        return parse_hfe(value)
    if not isinstance(value, list):
        raise ValidationError(f"{where}: an HFE must be an array of numbers")
    for v in value:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ValidationError(f"{where}: {v!r} is not a number")
    return mk_hfe(value)


def _lookup_class(classes, name, where) -> SoftClass:
    try:
        return classes[name]
    except (KeyError, TypeError):
        raise UnknownClass(f"{where}: unknown class {name!r}") from None


def scenario_from_dict(doc) -> Scenario:
    _expect(doc, dict, "scenario")
    extra = set(doc) - _TOP_KEYS
    if extra:
        raise ValidationError(f"scenario: unexpected keys {sorted(extra)}")

    scn = Scenario()
    for name, spec in _expect(doc.get("classes", {}), dict, "classes").items():
        where = f"class {name!r}"
        _expect(spec, dict, where)
        try:
            scn.classes[name] = mk_class(spec.get("universe", []), spec.get("attributes", []))
        except ValidationError as exc:
            raise _rewrap(exc, where) from None

    for name, spec in _expect(doc.get("mappings", {}), dict, "mappings").items():
        where = f"mapping {name!r}"
        _expect(spec, dict, where)
        src = _lookup_class(scn.classes, spec.get("source"), where)
        tgt = _lookup_class(scn.classes, spec.get("target"), where)
        try:
            p = _expect(spec.get("p", {}), dict, f"{where} p")
            q = _expect(spec.get("q", {}), dict, f"{where} q")
            scn.mappings[name] = mk_mapping(src, tgt, p, q)
        except ValidationError as exc:
            raise _rewrap(exc, where) from None

    for name, spec in _expect(doc.get("sets", {}), dict, "sets").items():
        where = f"set {name!r}"
        _expect(spec, dict, where)
        cls = _lookup_class(scn.classes, spec.get("class"), where)
        table = _expect(spec.get("table", {}), dict, f"{where} table")
        try:
            rows = {
                attr: {
                    elem: _hfe_from_json(v, f"{attr}/{elem}")
                    for elem, v in _expect(row, dict, f"row {attr!r}").items()
                }
                for attr, row in table.items()
            }
            scn.sets[name] = mk_hfss(cls, spec.get("support"), rows)
        except ValidationError as exc:
            raise _rewrap(exc, where) from None

    options = _expect(doc.get("options", {}), dict, "options")
    scn.mode = UnionMode.coerce(options.get("mode"))
    return scn


def parse_scenario(text: str) -> Scenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return scenario_from_dict(doc)


def _degrees(h: HFE) -> list[float]:
    return [round(d, 9) for d in h.degrees]


def hfss_to_dict(F: HFSS, class_name: str) -> dict:
    return {
        "class": class_name,
        "support": list(F.support),
        "table": {a: {x: _degrees(F.table[a][x]) for x in F.cls.universe} for a in F.support},
    }


def class_to_dict(c: SoftClass) -> dict:
    return {"universe": list(c.universe), "attributes": list(c.attributes)}


def mapping_to_dict(f: SoftMapping, source: str, target: str) -> dict:
    return {"source": source, "target": target, "p": dict(f.p.pairs), "q": dict(f.q.pairs)}


def scenario_to_dict(scn: Scenario) -> dict:
    return {
        "classes": {n: class_to_dict(c) for n, c in scn.classes.items()},
        "mappings": {
            n: mapping_to_dict(f, scn.class_name(f.source), scn.class_name(f.target))
            for n, f in scn.mappings.items()
        },
        "sets": {n: hfss_to_dict(F, scn.class_name(F.cls)) for n, F in scn.sets.items()},
        "options": {"mode": scn.mode.value},
    }


def render_scenario(scn: Scenario) -> str:
    return json.dumps(scenario_to_dict(scn), indent=2, ensure_ascii=False) + "\n"


def fixture_names() -> list[str]:
    root = resources.files("hfsoft") / "fixtures"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def load_scenario(path: str | Path) -> Scenario:
    """Read a scenario file; bare names of shipped fixtures also resolve."""
    p = Path(path)
    if p.is_file():
        return parse_scenario(p.read_text(encoding="utf-8"))
    name = p.name if p.name.endswith(".json") else p.name + ".json"
    res = resources.files("hfsoft") / "fixtures" / name
    if res.is_file():
        return parse_scenario(res.read_text(encoding="utf-8"))
    raise ValidationError(f"no scenario file {str(path)!r} (shipped fixtures: {fixture_names()})")
