"""Command-line interface: ``homtwist check | deform | induce | example``.

Exit codes: 0 success, 1 an axiom or precheck failed, 2 bad input (parse,
schema, unknown name), 3 the matrix and oracle paths disagree.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import catalog
from .constructions import (
    DeformationInput,
    characterize,
    deform_bundle,
    tensor_comodule,
    tilde_comodule,
)
from .document import (
    FORMAT_VERSION,
    Document,
    NamedComodule,
    format_rational,
    read,
    serialize,
    to_json,
    write_atomic,
)
from .errors import DimensionMismatch, HomtwistError, InvalidStructure, ParseError, PrecheckFailure
from .oracle import AXIOMS, oracle_evaluate, paths_agree
from .structures import (
    Bundle,
    CheckReport,
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    algebra_reports,
    bialgebra_reports,
    bundle_reports,
    check_comodule,
    coalgebra_reports,
)
from .tensor import LinearMap

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DIVERGE = 0, 1, 2, 3

_CHECKER = {
    "comodule_hom_morphism": "check_comodule",
    "comodule_coassociativity": "check_comodule",
}


class UsageError(HomtwistError):
    pass


def _reports_for(name: str, doc: Document) -> list[tuple[str, CheckReport, tuple]]:
    """``(component, report, oracle_args)`` for every check of one structure."""
    s = doc.get(name)
    if isinstance(s, Bundle):
        comps = bundle_reports(s)
        args = {"host": (s.host,), "coalg": (s.coalg,), "coaction": (s.coaction, s.host), "bundle": (s,)}
        return [(comp, r, args[comp]) for comp, reps in comps.items() for r in reps]
    if isinstance(s, HomBialgebra):
        return [("self", r, (s,)) for r in bialgebra_reports(s)]
    if isinstance(s, HomCoalgebra):
        return [("self", r, (s,)) for r in coalgebra_reports(s)]
    if isinstance(s, HomAlgebra):
        return [("self", r, (s,)) for r in algebra_reports(s)]
    if isinstance(s, NamedComodule):
        host = doc.host_of(name)
        return [("self", r, (s.comodule, host)) for r in check_comodule(s.comodule, host)]
    return []


def _residual_entries(r: CheckReport) -> list[list]:
    return [[row, col, format_rational(v)] for row, col, v in r.residual.nonzero()]


def run_check(doc: Document, structure: Optional[str], axioms: str, oracle: bool) -> tuple[dict, int]:
    if axioms == "all":
        selected = set(AXIOMS)
    else:
        selected = {a.strip() for a in axioms.split(",") if a.strip()}
        unknown = sorted(selected - set(AXIOMS))
        if unknown:
            raise UsageError(f"unknown axioms: {', '.join(unknown)}")
    names = [structure] if structure is not None else sorted(doc.structures)
    entries = []
    diverged = False
    for name in names:
        for component, report, args in _reports_for(name, doc):
            if report.axiom_name not in selected:
                continue
            entry = {
                "structure": name,
                "component": component,
                "axiom_name": report.axiom_name,
                "checker": _CHECKER.get(report.axiom_name, "check_" + report.axiom_name),
                "holds": report.holds,
                "residual_nonzero_entries": _residual_entries(report),
            }
            if oracle:
                agrees = paths_agree(report, oracle_evaluate(report.axiom_name, *args))
                entry["oracle_agrees"] = agrees
                diverged |= not agrees
            entries.append(entry)
    entries.sort(key=lambda e: (e["structure"], e["axiom_name"], e["component"]))
    verdict = all(e["holds"] for e in entries)
    out = {"format_version": FORMAT_VERSION, "entries": entries, "verdict": verdict}
    if diverged:
        return out, EXIT_DIVERGE
    return out, EXIT_OK if verdict else EXIT_FAIL


def _endomorphism(doc: Document, name: str) -> LinearMap:
    m = doc.get(name)
    if not isinstance(m, LinearMap):
        raise UsageError(f"{name} is not an endomorphism")
    return m


def _bundle(doc: Document, name: str) -> Bundle:
    b = doc.get(name)
    if not isinstance(b, Bundle):
        raise UsageError(f"{name} is not a bundle")
    return b


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_atomic(out, text)


def cmd_check(args) -> int:
    report, code = run_check(read(args.path), args.structure, args.axioms, args.oracle)
    sys.stdout.write(to_json(report))
    return code


def cmd_deform(args) -> int:
    doc = read(args.path)
    inp = DeformationInput(
        _bundle(doc, args.bundle), _endomorphism(doc, args.alpha_h), _endomorphism(doc, args.alpha_c)
    )
    try:
        deformed = deform_bundle(inp)
    except PrecheckFailure as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except InvalidStructure as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(serialize(Document({args.name or args.bundle: deformed})), args.out)
    return EXIT_OK


def _comodule_and_host(doc: Document, name: str):
    s = doc.get(name)
    if isinstance(s, Bundle):
        return s.coaction, s.host, f"{name}_host"
    if isinstance(s, NamedComodule):
        return s.comodule, doc.host_of(name), s.host
    raise UsageError(f"{name} is neither a bundle nor a comodule with a host")


def cmd_induce(args) -> int:
    doc = read(args.path)
    if args.op == "characterize":
        b = _bundle(doc, args.structure)
        try:
            result = characterize(b)
        except InvalidStructure as exc:
            print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        report = {
            "structure": args.structure,
            "axiom_holds": result.axiom_holds,
            "morphism_holds": result.morphism_holds,
            "agree": result.agree,
        }
        _emit(to_json(report), args.out)
        return EXIT_OK if result.agree else EXIT_DIVERGE

    m, host, host_name = _comodule_and_host(doc, args.structure)
    try:
        if args.op == "tilde":
            induced = tilde_comodule(m, host)
        else:
            if not isinstance(host, HomBialgebra):
                raise UsageError("tensor needs a bialgebra host")
            n = m
            if args.other is not None:
                n, other_host, _ = _comodule_and_host(doc, args.other)
                if other_host != host:
                    raise UsageError("both factors must share one host")
            induced = tensor_comodule(m, n, host)
    except InvalidStructure as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out = Document({host_name: host, f"{args.structure}_{args.op}": NamedComodule(induced, host_name)})
    _emit(serialize(out), args.out)
    return EXIT_OK


def cmd_example(args) -> int:
    if args.list:
        sys.stdout.write("\n".join(catalog.example_names()) + "\n")
        return EXIT_OK
    if args.name is None:
        raise UsageError("example needs a name (or --list)")
    try:
        structures = catalog.example(args.name)
    except KeyError:
        raise UsageError(f"unknown example {args.name!r}") from None
    _emit(serialize(Document(structures)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homtwist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify axioms of the structures in a document")
    c.add_argument("path")
    c.add_argument("--structure", help="check only this structure (default: all)")
    c.add_argument("--axioms", default="all", help="comma-separated axiom ids, or 'all'")
    c.add_argument("--oracle", action="store_true", help="cross-check with the Sweedler oracle")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("deform", help="Yau-twist a classical bundle")
    d.add_argument("path")
    d.add_argument("--bundle", required=True)
    d.add_argument("--alpha-h", required=True)
    d.add_argument("--alpha-c", required=True)
    d.add_argument("--name", help="name of the output structure (default: the bundle's name)")
    d.add_argument("--out", help="output file (default: standard output)")
    d.set_defaults(func=cmd_deform)

    i = sub.add_parser("induce", help="induced comodule structures")
    i.add_argument("path")
    i.add_argument("--op", required=True, choices=("tilde", "tensor", "characterize"))
    i.add_argument("--structure", required=True, help="a bundle, or a comodule with a host")
    i.add_argument("--other", help="right tensor factor (default: the structure itself)")
    i.add_argument("--out")
    i.set_defaults(func=cmd_induce)

    e = sub.add_parser("example", help="write a catalog example document")
    e.add_argument("name", nargs="?")
    e.add_argument("--out")
    e.add_argument("--list", action="store_true")
    e.set_defaults(func=cmd_example)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, UsageError, DimensionMismatch) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
