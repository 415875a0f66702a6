"""Command-line interface: ``lieindex classify | index-complex | verify | catalog``.

Exit codes: 0 success, 1 theorem-check failure, 2 input error, 3 unsupported.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Sequence

from . import verify as V
from .algebra import LieAlgebra, SeriesKind, TriBool, classify_basic
from .catalog import ENTRIES, catalog, catalog_names
from .completions import has_abelian_ideal_completion, ideal_completions, ideal_index, index_complex, is_maximal
from .documents import DocumentError, algebra_to_doc, canonical_json, parse_algebra, parse_vectors, report
from .errors import BoundExceeded, GiveUp, LieIndexError, Unsupported
from .fields import FieldSpec
from .lattice import frattini, nilradical, radical
from .supersolvable import is_supersolvable

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


class InputError(Exception):
    pass


def parse_field(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_json("Q" if text.strip().lower() in ("q", "qq") else text.strip())
    except ValueError as exc:
        raise InputError(f"bad field {text!r}: {exc}") from None


def parse_bounds(text: str | None) -> dict | None:
    """``'{"5": 5}'`` or ``'5=5,2=7'``: largest ambient dimension per prime."""
    if not text:
        return None
    try:
        if text.lstrip().startswith("{"):
            raw = json.loads(text).items()
        else:
            raw = (part.split("=") for part in text.split(","))
        return {int(k): int(v) for k, v in raw}
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad --bounds {text!r}: {exc}") from None


def load_algebra(source: str, field: str | None = None) -> tuple[LieAlgebra, dict]:
    """Read an algebra from a JSON file, ``-`` for stdin, or ``catalog:NAME``."""
    if source.startswith("catalog:"):
        F = parse_field(field) if field else None
        L = catalog(source[len("catalog:"):], F)
        return L, algebra_to_doc(L)
    try:
        text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source} is not valid JSON: {exc}") from None
    return parse_algebra(doc), doc


def _rows(s):
    return s.format_rows()


# -- commands ------------------------------------------------------------------------


def cmd_classify(args) -> tuple[dict, int]:
    L, doc = load_algebra(args.input, args.field)
    bounds = parse_bounds(args.bounds)
    flags = classify_basic(L)
    results = {
        "flags": {
            "abelian": flags.abelian,
            "nilpotent": flags.nilpotent,
            "solvable": flags.solvable,
            "completely_solvable": flags.completely_solvable,
            "supersolvable": is_supersolvable(L).value,
        },
        "series": {
            "derived": [_rows(s) for s in L.series(SeriesKind.DERIVED).chain],
            "lower_central": [_rows(s) for s in L.series(SeriesKind.LOWER_CENTRAL).chain],
        },
        "center": _rows(L.center()),
    }
    skips = {}
    code = EXIT_OK
    wanted = [("radical", lambda: _rows(radical(L, bounds)))]
    if L.field.p:
        wanted += [
            ("nilradical", lambda: _rows(nilradical(L, bounds))),
            ("frattini", lambda: [_rows(x) for x in frattini(L, bounds)]),
        ]
    for key, compute in wanted:
        try:
            results[key] = compute()
        except (Unsupported, BoundExceeded) as exc:
            skips[key] = str(exc)
            code = EXIT_UNSUPPORTED
    if skips:
        results["skipped"] = skips
    summary = {"status": "partial" if skips else "ok"}
    return report(_argv(args), doc, results, summary), code


def _record_json(r) -> dict:
    labels = ["completion"]
    if r.is_ideal:
        labels.append("ideal completion")
    if r.is_maximal_in_IM:
        labels.append("maximal completion")
    if r.is_subideal:
        labels.append("subideal completion")
    if r.in_S_of_M:
        labels.append("S(M)")
    return {
        "space": _rows(r.space),
        "strict_core": _rows(r.strict_core),
        "quotient_dim": r.quotient_dim,
        "quotient_abelian": r.quotient_abelian,
        "labels": labels,
    }


def cmd_index_complex(args) -> tuple[dict, int]:
    L, doc = load_algebra(args.input, args.field)
    bounds = parse_bounds(args.bounds)
    try:
        M = L.span(parse_vectors(args.maximal, L.field, L.dim))
    except (DocumentError, json.JSONDecodeError) as exc:
        raise InputError(f"bad --maximal: {exc}") from None
    if not L.is_subalgebra(M):
        raise InputError("the given subspace is not a subalgebra")
    verdict = is_maximal(L, M, bounds)
    if verdict is TriBool.NO:
        raise InputError("the given subalgebra is not maximal")
    results = {"maximal": _rows(M), "is_maximal": verdict.value}
    if L.field.p:
        ic = index_complex(L, M, bounds)
        results["eta"] = ic.eta
        if not args.eta_only:
            results["records"] = [_record_json(r) for r in ic.records]
    else:
        results["eta"] = ideal_index(L, M, bounds)
        if not args.eta_only:
            results["ideal_completions"] = [
                {"space": _rows(c), "strict_core": _rows(k), "quotient_dim": c.dim - k.dim,
                 "quotient_abelian": L.product_space(c, c) <= k}
                for c, k in ideal_completions(L, M, bounds)
            ]
            results["has_abelian_ideal_completion"] = has_abelian_ideal_completion(L, M, bounds)
    payload = {"algebra": doc, "maximal": args.maximal}
    return report(_argv(args), payload, results, {"status": "ok"}), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    bounds = parse_bounds(args.bounds)
    try:
        checks = V.resolve_checks(args.checks)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    params = {"corpus": args.corpus, "checks": args.checks, "bounds": bounds and {str(k): v for k, v in sorted(bounds.items())}}
    if args.corpus == "catalog":
        fields = [parse_field(args.field)] if args.field else list(V.CATALOG_FIELDS) + [V.Q]
        finite = [F for F in fields if F.p]
        items = V.catalog_corpus(finite, include_rational=False)
        if bounds:
            items = [dataclasses.replace(it, bounds=tuple(sorted({**dict(it.bounds), **bounds}.items())))
                     for it in items]
        rational = any(not F.p for F in fields)
        params["fields"] = [F.name for F in fields]
    else:
        F = parse_field(args.field or "gf2")
        if not F.p:
            raise InputError("random corpora are drawn over prime fields only")
        if not 1 <= args.dim <= 4:
            raise InputError("--dim must be between 1 and 4 for random corpora")
        if args.count < 0:
            raise InputError("--count must be non-negative")
        items = V.random_corpus(args.dim, F, args.count, args.seed)
        if bounds:
            items = [dataclasses.replace(it, bounds=tuple(sorted(bounds.items()))) for it in items]
        rational = False
        params.update(field=F.name, dim=args.dim, seed=args.seed, count=args.count)
    rep = V.run_suite(items, checks, parameters=params, rational=rational)
    code = EXIT_FAIL if rep.failures else EXIT_OK
    body = rep.to_json()
    return report(_argv(args), params, body, rep.summary), code


def cmd_catalog(args) -> tuple[dict, int]:
    if args.action == "list":
        entries = []
        for name in catalog_names():
            e = ENTRIES[name]
            fields = "Q only" if e.rational_only else ("characteristic != 2" if e.odd_characteristic else "any")
            entries.append({"name": name, "fields": fields, "facts": list(e.facts)})
        return {"entries": entries}, EXIT_OK
    if not args.name:
        raise InputError("catalog emit needs an entry name")
    F = parse_field(args.field) if args.field else None
    return algebra_to_doc(catalog(args.name, F)), EXIT_OK


def _argv(args) -> list[str]:
    return list(getattr(args, "argv", []))


# -- plumbing ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lieindex", description="Index complexes of maximal subalgebras over exact fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="algebra JSON file, '-' for stdin, or catalog:NAME")
        p.add_argument("--field", help="field for catalog inputs: Q, gf2, GF(3), ...")
        p.add_argument("--bounds", help='enumeration limits, e.g. \'{"5": 5}\' or 5=5')
        p.add_argument("-o", "--output", help="write the JSON report here and a table to stdout")

    p = sub.add_parser("classify", help="solvability flags, series, radical")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("index-complex", help="completions of a maximal subalgebra")
    common(p)
    p.add_argument("--maximal", required=True, help='spanning vectors as JSON, e.g. \'[["0","1","0"]]\'')
    p.add_argument("--eta-only", action="store_true", help="report only the ideal index")
    p.set_defaults(func=cmd_index_complex)

    p = sub.add_parser("verify", help="run the theorem checks over a corpus")
    common(p, with_input=False)
    p.add_argument("--corpus", choices=["catalog", "random"], default="catalog")
    p.add_argument("--dim", type=int, default=4, help="largest dimension of random algebras")
    p.add_argument("--seed", default="0")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--checks", default="all", help="comma-separated check ids or 'all'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list or emit catalog algebras")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("--field")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)
    return parser


def _summary_table(payload: dict) -> str:
    results = payload.get("results", {})
    if "entries" in results:
        lines = [f"{e['check']:<24} {e['verdict'].upper():<4}  {e['algebra']}  {e.get('reason', '')}".rstrip()
                 for e in results["entries"]]
        s = results["summary"]
        lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['skip']} skip")
        return "\n".join(lines)
    return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(results.items()))


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    try:
        payload, code = args.func(args)
    except (InputError, DocumentError, GiveUp) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (Unsupported, BoundExceeded) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except LieIndexError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = canonical_json(payload)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(_summary_table(payload))
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
