"""Command-line front end.

    hfsoft image    --scenario example_3_5.json --map f --set F_A
    hfsoft preimage --scenario thm_3_11.json --map f --set G_B
    hfsoft compose  --scenario example_3_10.json --outer g --inner f [--set F_A]
    hfsoft invert   --scenario thm_3_11.json --map f
    hfsoft props    --scenario example_3_5.json --map f
    hfsoft union    --scenario example_3_14.json --sets F_A M_A
    hfsoft laws     --seed 42 --cases 200 [--format json]

Exit status: 0 success, 1 an asserted law failed, 2 usage error, 3 invalid
input.  Output is a pure function of the arguments and input files.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from typing import Sequence

from .errors import HFSError
from .hfe import UnionMode
from .hfss import HFSS, hfss_union, render_hfss
from .laws import GenConfig, laws_document, run_laws
from .mapping import (
    SoftMapping,
    compose,
    composite_image,
    image,
    inverse_image,
    invert,
    is_bijective,
    is_injective,
    is_many_one,
    is_surjective,
)
from .scenario import Scenario, hfss_to_dict, load_scenario, mapping_to_dict

EXIT_OK, EXIT_LAW_FAILED, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--scenario", metavar="PATH", help="scenario JSON file or shipped fixture name")
    p.add_argument("--mode", choices=["set", "sorted"], help="HFE union semantics (default: sorted)")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="hfsoft", description="Hesitant fuzzy soft set mappings.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("image", "image of a soft set"), ("preimage", "inverse image of a soft set")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--map", required=True)
        p.add_argument("--set", required=True)

    p = sub.add_parser("compose", parents=[common], help="composite g o f, optionally applied to a set")
    p.add_argument("--outer", required=True, help="g, applied second")
    p.add_argument("--inner", required=True, help="f, applied first")
    p.add_argument("--set")

    for name, help_ in (("invert", "inverse of a bijective mapping"), ("props", "structural predicates")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--map", required=True)

    p = sub.add_parser("union", parents=[common], help="union of two soft sets")
    p.add_argument("--sets", nargs=2, required=True, metavar="NAME")

    sub.add_parser("laws", parents=[common], help="run the law-verification suite")
    return parser


def _render_mapping(name: str, f: SoftMapping, scn: Scenario) -> list[str]:
    src, tgt = scn.class_name(f.source), scn.class_name(f.target)
    return [
        f"{name}: {src} -> {tgt}",
        "p: " + ", ".join(f"{k}->{v}" for k, v in f.p.pairs.items()),
        "q: " + ", ".join(f"{k}->{v}" for k, v in f.q.pairs.items()),
    ]


def _set_doc(F: HFSS, scn: Scenario) -> dict:
    return hfss_to_dict(F, scn.class_name(F.cls))


def _mapping_doc(f: SoftMapping, scn: Scenario) -> dict:
    return mapping_to_dict(f, scn.class_name(f.source), scn.class_name(f.target))


def _dispatch(args, scn: Scenario, mode: UnionMode) -> tuple[int, dict, list[str]]:
    doc: dict = {"command": args.command, "mode": mode.value}
    lines: list[str] = []

    if args.command in ("image", "preimage"):
        f, F = scn.mapping(args.map), scn.set(args.set)
        if args.command == "image":
            out, title = image(f, F, mode), f"{args.map}({args.set})"
        else:
            out, title = inverse_image(f, F), f"{args.map}^-1({args.set})"
            doc.pop("mode")
        doc.update(map=args.map, set=args.set, result=_set_doc(out, scn))
        tag = f" [{mode.value}]" if "mode" in doc else ""
        lines = [title + tag, render_hfss(out)]

    elif args.command == "compose":
        g, f = scn.mapping(args.outer), scn.mapping(args.inner)
        gf = compose(g, f)
        name = f"{args.outer} o {args.inner}"
        doc.update(outer=args.outer, inner=args.inner, mapping=_mapping_doc(gf, scn))
        lines = _render_mapping(name, gf, scn)
        if args.set:
            out = composite_image(g, f, scn.set(args.set), mode)
            doc.update(set=args.set, result=_set_doc(out, scn))
            lines += [f"({name})({args.set}) [{mode.value}]", render_hfss(out)]

    elif args.command == "invert":
        fi = invert(scn.mapping(args.map))
        doc.update(map=args.map, mapping=_mapping_doc(fi, scn))
        lines = _render_mapping(f"{args.map}^-1", fi, scn)

    elif args.command == "props":
        f = scn.mapping(args.map)
        props = {
            "injective": is_injective(f),
            "surjective": is_surjective(f),
            "bijective": is_bijective(f),
            "many_one": is_many_one(f),
        }
        doc.update(map=args.map, properties=props)
        lines = [f"{k}: {str(v).lower()}" for k, v in props.items()]

    elif args.command == "union":
        a, b = args.sets
        out = hfss_union(scn.set(a), scn.set(b), mode)
        doc.update(sets=[a, b], result=_set_doc(out, scn))
        lines = [f"{a} u {b} [{mode.value}]", render_hfss(out)]

    return EXIT_OK, doc, lines


def _run_laws(args) -> tuple[int, dict, list[str]]:
    cfg = GenConfig(seed=args.seed, cases=args.cases)
    modes = [args.mode] if args.mode else [UnionMode.SORTED, UnionMode.SET]
    reports = run_laws(cfg, modes)
    doc = laws_document(cfg, reports)
    lines = [r.summary() for r in reports]
    lines.append("all asserted laws hold" if doc["ok"] else "ASSERTED LAW FAILURE")
    return (EXIT_OK if doc["ok"] else EXIT_LAW_FAILED), doc, lines


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Run one CLI invocation; returns ``(exit status, output text)``."""
    parser = build_parser()
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(buf):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), buf.getvalue()

    try:
        if args.command == "laws":
            status, doc, lines = _run_laws(args)
        else:
            if not args.scenario:
                return EXIT_USAGE, f"hfsoft {args.command}: --scenario is required\n"
            scn = load_scenario(args.scenario)
            mode = UnionMode.coerce(args.mode or scn.mode)
            status, doc, lines = _dispatch(args, scn, mode)
    except HFSError as exc:
        return EXIT_INVALID, f"error: {type(exc).__name__}: {exc}\n"

    if args.format == "json":
        return status, json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return status, "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    status, out = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if status in (EXIT_OK, EXIT_LAW_FAILED) else sys.stderr
    stream.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
