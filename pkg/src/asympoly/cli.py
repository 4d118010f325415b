"""
Command-line interface.  Every verb is a thin shell over one library
call; output is deterministic text (or a JSON mirror under
``--format structured``) so runs are byte-identical and scriptable.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bases, combinat, tableaux
from .bases import basis_polynomial
from .expand import BasisExpansion, expand_via_solver
from .products import conjecture_harness_reiner_shimozono, structure_constants
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_index(basis: str, text: str):
    species = bases.INDEX_SPECIES[basis]
    if species == "permutation":
        return combinat.parse_permutation(text)
    return combinat.parse_composition(text)


def _expansion_payload(expansion: BasisExpansion) -> dict:
    return {
        "basis": expansion.basis,
        "terms": [
            {"index": list(k), "coefficient": v}
            for k, v in sorted(expansion.terms.items())
        ],
    }


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "structured":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_basis(args) -> int:
    index = _parse_index(args.id, args.index)
    poly = basis_polynomial(args.id, index, args.n)
    payload = {
        "basis": args.id,
        "index": list(index),
        "n": args.n,
        "terms": [
            {"coefficient": c, "exponents": list(e)} for e, c in poly.sorted_terms()
        ],
    }
    _emit(args, poly.canonical_text(), payload)
    return 0


def _cmd_expand(args) -> int:
    index = _parse_index(args.source, args.index)
    f = basis_polynomial(args.source, index, args.n)
    expansion = expand_via_solver(f, args.target, args.n)
    _emit(args, "\n".join(expansion.to_lines()), _expansion_payload(expansion))
    return 0


def _cmd_multiply(args) -> int:
    ia = _parse_index(args.basis, args.a)
    ib = _parse_index(args.basis, args.b)
    expansion = structure_constants(args.basis, ia, ib, args.n)
    _emit(args, "\n".join(expansion.to_lines()), _expansion_payload(expansion))
    return 0


def _enumerate_lines(args) -> list[tuple[str, list[int]]]:
    """(rendered object, weight) rows for the requested family."""
    if args.object == "pipedreams":
        p = combinat.parse_permutation(args.perm)
        n = len(p)
        rows = []
        for d in tableaux.enumerate_pipe_dreams(p):
            boxes = ",".join(f"({i},{j})" for i, j in sorted(d))
            rows.append((f"crosses [{boxes}]", list(tableaux.pipe_dream_weight(d, n))))
        return sorted(rows)
    if args.object == "kohnert":
        if args.perm:
            base = frozenset(combinat.rothe_diagram(combinat.parse_permutation(args.perm)))
            n = len(combinat.parse_permutation(args.perm))
        else:
            a = combinat.parse_composition(args.index)
            base = tableaux.composition_diagram(a)
            n = len(a)
        rows = []
        for d in tableaux.kohnert_closure(base):
            boxes = ",".join(f"({i},{j})" for i, j in sorted(d))
            rows.append((f"boxes [{boxes}]", list(tableaux.diagram_weight(d, n))))
        return sorted(rows)
    if args.object == "ctableaux":
        a = combinat.parse_composition(args.index)
        n = len(a)
        rows = []
        for t in tableaux.enumerate_composition_tableaux(a):
            body = "/".join("".join(str(x) for x in row) for row in t)
            rows.append((f"rows [{body}]", list(tableaux.tableau_weight(t, n))))
        return sorted(rows)
    if args.object == "skylines":
        a = combinat.parse_composition(args.index)
        n = len(a)
        rows = []
        for t in tableaux.enumerate_key_skylines(a, n):
            body = "/".join("".join(str(x) for x in row) for row in t)
            rows.append((f"rows [{body}]", list(tableaux.skyline_weight(t, n))))
        return sorted(rows)
    if args.object == "ssyt":
        lam = combinat.parse_composition(args.index)
        rows = []
        for t in tableaux.enumerate_ssyt(lam, args.n):
            body = "/".join("".join(str(x) for x in row) for row in t)
            rows.append((f"rows [{body}]", list(tableaux.ssyt_weight(t, args.n))))
        return sorted(rows)
    if args.object == "reduced-words":
        p = combinat.parse_permutation(args.perm)
        return sorted(
            (combinat.format_composition(w), [len(w)])
            for w in combinat.reduced_words(p)
        )
    if args.object == "compatible":
        alpha = combinat.parse_composition(args.index)
        n = max(alpha) if alpha else 1
        return sorted(
            (combinat.format_composition(b), list(tableaux.compatible_weight(b, n)))
            for b in tableaux.enumerate_compatible(alpha)
        )
    raise UsageError(f"unknown object {args.object!r}")


def _cmd_enumerate(args) -> int:
    rows = _enumerate_lines(args)
    text = "\n".join(
        f"{body} weight ({','.join(str(x) for x in weight)})" for body, weight in rows
    )
    payload = {
        "object": args.object,
        "count": len(rows),
        "items": [{"object": body, "weight": weight} for body, weight in rows],
    }
    _emit(args, text + ("\n" if text else "") + f"count {len(rows)}",
          payload)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, max_entry=args.max_entry, max_len=args.max_len)
    payload = {
        "suite": args.suite,
        "ok": report.ok,
        "results": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in report.results
        ],
    }
    _emit(args, report.to_text(), payload)
    return 0 if report.ok else 1


def _cmd_conjecture(args) -> int:
    if args.name != "reiner-shimozono":
        raise UsageError(f"unknown conjecture {args.name!r}")
    report = conjecture_harness_reiner_shimozono(args.max_entry, args.max_len)
    payload = {
        "name": report.name,
        "pairs_checked": report.pairs_checked,
        "max_coefficient": report.max_coefficient,
        "negative_findings": report.negative_findings,
        "ok": report.ok,
    }
    _emit(args, report.to_text(), payload)
    return 0 if report.ok else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="asympoly", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "structured"], default="text")

    p = sub.add_parser("basis", help="print a basis element in canonical text form")
    p.add_argument("--id", required=True, choices=bases.BASIS_IDS)
    p.add_argument("--index", required=True)
    p.add_argument("--n", required=True, type=int)
    add_format(p)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("expand", help="expand a basis element in another basis")
    p.add_argument("--source", required=True, choices=bases.BASIS_IDS)
    p.add_argument("--index", required=True)
    p.add_argument("--target", required=True, choices=bases.BASIS_IDS)
    p.add_argument("--n", required=True, type=int)
    add_format(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("multiply", help="structure constants of a product")
    p.add_argument("--basis", required=True, choices=bases.BASIS_IDS)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_multiply)

    p = sub.add_parser("enumerate", help="list combinatorial objects with weights")
    p.add_argument("--object", required=True, choices=[
        "pipedreams", "kohnert", "ctableaux", "skylines", "ssyt",
        "reduced-words", "compatible",
    ])
    p.add_argument("--perm", default=None)
    p.add_argument("--index", default=None)
    p.add_argument("--n", type=int, default=0)
    add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--max-len", type=int, default=4)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture", help="run a conjecture harness")
    p.add_argument("--name", required=True)
    p.add_argument("--max-entry", type=int, default=2)
    p.add_argument("--max-len", type=int, default=3)
    add_format(p)
    p.set_defaults(func=_cmd_conjecture)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
