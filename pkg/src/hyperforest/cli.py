"""Command line interface over the library.

Usage:
    hyperforest validate [-i forest-or-code.json]
    hyperforest encode [-i forest.json]
    hyperforest decode [-i code.json]
    hyperforest count --kind forests --b 3 --s 2 --k 0
    hyperforest enumerate --kind codes --b 2 --s 2 --k 0
    hyperforest audit --b 3 --s 2
    hyperforest sample --b 3 --s 4 --k 1 --seed 7 --m 2
    hyperforest rank [-i code.json]
    hyperforest unrank --index 8 --b 2 --s 2 --k 0
    hyperforest ids --b 2 --s 2 --k 0 --m 5

Documents are JSON.  A forest document has keys n, b, edges, roots; a code
document has keys b, s, k, R, r, P, N (r is null when s is 0).  Output is
canonical: ascending lists, fixed key order, counts and indexes rendered as
decimal strings.  Single-document commands pretty-print one document;
sample and ids write one compact document per line; enumerate and audit
write one compact document per line followed by a summary record.

Exit status: 0 on success, 1 when a document fails validation, 2 on usage
or parameter errors (including enumeration budget refusals).  Errors print
one JSON line {"error": code, "message": ...} to stderr.  The environment
variable HYPERFOREST_BUDGET overrides the oracle's candidate budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from .codec import (
    ForestCode,
    ForestShape,
    decode_code,
    encode_forest,
    validate_code,
)
from .counting import (
    count_forests,
    count_hypercycles,
    count_rooted_hypertrees,
    hypercycle_class_count,
)
from .errors import (
    BudgetExceededError,
    InvalidStructureError,
    ParameterRangeError,
)
from .forest import RootedForest, validate_forest
from .oracle import (
    DEFAULT_BUDGET,
    audit_hypercycles,
    enumerate_code_space,
    enumerate_forests,
    enumerate_hypercycles,
)
from .ranking import generate_ids, rank_code, sample_forests, unrank_code


class _UsageError(Exception):
    pass


class _DocumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D401 - argparse hook
        raise _UsageError(message)


def _print_document(doc: dict[str, Any]) -> None:
    print(json.dumps(doc, indent=2))


def _print_line(doc: dict[str, Any]) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _fail(code: str, message: str) -> None:
    sys.stderr.write(
        json.dumps({"error": code, "message": message}, separators=(",", ":")) + "\n"
    )


def _load_json(path: str | None) -> Any:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return json.loads(text)


def _require(doc: Any, key: str, kind: type, what: str) -> Any:
    if not isinstance(doc, dict):
        raise _DocumentError(f"{what} document must be a JSON object")
    if key not in doc:
        raise _DocumentError(f"{what} document is missing key {key!r}")
    value = doc[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise _DocumentError(f"{what} document key {key!r} must be an integer")
    if kind is list and not isinstance(value, list):
        raise _DocumentError(f"{what} document key {key!r} must be a list")
    return value


def _int_list(values: Any, what: str) -> list[int]:
    if not isinstance(values, list) or any(
        not isinstance(v, int) or isinstance(v, bool) for v in values
    ):
        raise _DocumentError(f"{what} must be a list of integers")
    return values


def forest_from_document(doc: Any) -> RootedForest:
    n = _require(doc, "n", int, "forest")
    b = _require(doc, "b", int, "forest")
    edges = _require(doc, "edges", list, "forest")
    roots = _require(doc, "roots", list, "forest")
    edge_tuples = tuple(
        tuple(_int_list(e, "each edge")) for e in edges
    )
    return RootedForest(
        n=n, b=b, edges=edge_tuples, roots=tuple(_int_list(roots, "roots"))
    )


def forest_to_document(forest: RootedForest) -> dict[str, Any]:
    return {
        "n": forest.n,
        "b": forest.b,
        "edges": [list(e) for e in forest.edges],
        "roots": list(forest.roots),
    }


def code_from_document(doc: Any) -> ForestCode:
    b = _require(doc, "b", int, "code")
    s = _require(doc, "s", int, "code")
    k = _require(doc, "k", int, "code")
    roots = _int_list(_require(doc, "R", list, "code"), "R")
    final_root = doc.get("r") if isinstance(doc, dict) else None
    if final_root is not None and (
        not isinstance(final_root, int) or isinstance(final_root, bool)
    ):
        raise _DocumentError("code document key 'r' must be an integer or null")
    blocks = _require(doc, "P", list, "code")
    links = _int_list(_require(doc, "N", list, "code"), "N")
    try:
        shape = ForestShape(b=b, s=s, k=k)
    except ParameterRangeError as exc:
        raise _DocumentError(f"code document shape is invalid: {exc}") from exc
    block_tuples = tuple(tuple(_int_list(blk, "each block")) for blk in blocks)
    return ForestCode(shape, tuple(roots), final_root, block_tuples, tuple(links))


def code_to_document(code: ForestCode) -> dict[str, Any]:
    return {
        "b": code.shape.b,
        "s": code.shape.s,
        "k": code.shape.k,
        "R": list(code.roots),
        "r": code.final_root,
        "P": [list(blk) for blk in code.blocks],
        "N": list(code.links),
    }


def _budget() -> int:
    raw = os.environ.get("HYPERFOREST_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ParameterRangeError(
            f"HYPERFOREST_BUDGET must be an integer, got {raw!r}"
        ) from None
    if value < 0:
        raise ParameterRangeError("HYPERFOREST_BUDGET must be non-negative")
    return value


def _shape_from_args(args: argparse.Namespace) -> ForestShape:
    if args.k is None:
        raise _UsageError("this command requires --k")
    return ForestShape(b=args.b, s=args.s, k=args.k)


def _cmd_validate(args: argparse.Namespace) -> int:
    doc = _load_json(args.input)
    if isinstance(doc, dict) and "edges" in doc:
        forest = forest_from_document(doc)
        report = validate_forest(forest)
        kind = "forest"
    elif isinstance(doc, dict) and ("P" in doc or "R" in doc):
        code = code_from_document(doc)
        report = validate_code(code)
        kind = "code"
    else:
        raise _DocumentError(
            "document is neither a forest (edges) nor a code (R, P)"
        )
    _print_document(
        {
            "kind": kind,
            "valid": report.valid,
            "s": report.s,
            "k": report.k,
            "violations": list(report.violations),
        }
    )
    return 0 if report.valid else 1


def _cmd_encode(args: argparse.Namespace) -> int:
    forest = forest_from_document(_load_json(args.input))
    _print_document(code_to_document(encode_forest(forest)))
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    code = code_from_document(_load_json(args.input))
    _print_document(forest_to_document(decode_code(code)))
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "forests":
        if args.k is None:
            raise _UsageError("count --kind forests requires --k")
        value = count_forests(args.b, args.s, args.k)
        doc = {
            "kind": kind,
            "b": args.b,
            "s": args.s,
            "k": args.k,
            "n": args.s * (args.b - 1) + args.k + 1,
            "count": str(value),
        }
    elif kind == "hypertrees":
        value = count_rooted_hypertrees(args.b, args.s)
        doc = {
            "kind": kind,
            "b": args.b,
            "s": args.s,
            "n": args.s * (args.b - 1) + 1,
            "count": str(value),
        }
    elif kind == "hypercycles":
        value = count_hypercycles(args.b, args.s, args.form)
        doc = {
            "kind": kind,
            "b": args.b,
            "s": args.s,
            "n": args.s * (args.b - 1),
            "form": args.form,
            "count": str(value),
        }
    else:
        if args.j is None:
            raise _UsageError("count --kind hypercycle-class requires --j")
        value = hypercycle_class_count(args.b, args.s, args.j)
        doc = {
            "kind": kind,
            "b": args.b,
            "s": args.s,
            "n": args.s * (args.b - 1),
            "j": args.j,
            "count": str(value),
        }
    _print_document(doc)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    budget = _budget()
    kind = args.kind
    total = 0
    if kind == "forests":
        if args.k is None:
            raise _UsageError("enumerate --kind forests requires --k")
        for forest in enumerate_forests(args.b, args.s, args.k, budget):
            _print_line(forest_to_document(forest))
            total += 1
        summary = {"kind": kind, "b": args.b, "s": args.s, "k": args.k}
    elif kind == "codes":
        if args.k is None:
            raise _UsageError("enumerate --kind codes requires --k")
        for code in enumerate_code_space(args.b, args.s, args.k, budget):
            _print_line(code_to_document(code))
            total += 1
        summary = {"kind": kind, "b": args.b, "s": args.s, "k": args.k}
    else:
        for edges in enumerate_hypercycles(args.b, args.s, args.multiset, budget):
            _print_line(
                {
                    "n": args.s * (args.b - 1),
                    "b": args.b,
                    "edges": [list(e) for e in edges],
                }
            )
            total += 1
        summary = {
            "kind": kind,
            "b": args.b,
            "s": args.s,
            "multiset": bool(args.multiset),
        }
    summary["count"] = str(total)
    _print_line({"summary": summary})
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    report = audit_hypercycles(args.b, args.s, _budget())
    for j, value in report.count_by_cycle_length:
        _print_line({"j": j, "count": str(value)})
    _print_line(
        {
            "summary": {
                "b": report.b,
                "s": report.s,
                "n": report.n,
                "closed_form_count": str(report.closed_form_count),
                "cycle_length_total": str(report.cycle_length_total),
                "set_count": (
                    None if report.set_count is None else str(report.set_count)
                ),
                "multiset_count": (
                    None
                    if report.multiset_count is None
                    else str(report.multiset_count)
                ),
                "notes": report.notes,
            }
        }
    )
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    shape = _shape_from_args(args)
    for forest in sample_forests(shape, args.seed, args.m):
        _print_line(forest_to_document(forest))
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    code = code_from_document(_load_json(args.input))
    index = rank_code(code)
    _print_document(
        {
            "b": code.shape.b,
            "s": code.shape.s,
            "k": code.shape.k,
            "index": str(index),
        }
    )
    return 0


def _cmd_unrank(args: argparse.Namespace) -> int:
    shape = _shape_from_args(args)
    _print_document(code_to_document(unrank_code(args.index, shape)))
    return 0


def _cmd_ids(args: argparse.Namespace) -> int:
    shape = _shape_from_args(args)
    for code in generate_ids(shape, args.m):
        _print_line(code_to_document(code))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="hyperforest",
        description=(
            "Encode, decode, count, enumerate, audit, sample, rank, and "
            "unrank forests of labelled rooted uniform hypertrees."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: _Parser) -> None:
        p.add_argument(
            "-i",
            "--input",
            default=None,
            help="input JSON document (default: standard input)",
        )

    def add_shape(p: _Parser, k_required: bool) -> None:
        p.add_argument("--b", type=int, required=True, help="vertices per hyperedge")
        p.add_argument("--s", type=int, required=True, help="number of hyperedges")
        if k_required:
            p.add_argument(
                "--k", type=int, default=None, help="number of trees minus one"
            )

    p = sub.add_parser("validate", help="validate a forest or code document")
    add_input(p)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("encode", help="forest document to code document")
    add_input(p)
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("decode", help="code document to forest document")
    add_input(p)
    p.set_defaults(handler=_cmd_decode)

    p = sub.add_parser("count", help="exact counts from the closed formulas")
    p.add_argument(
        "--kind",
        required=True,
        choices=["forests", "hypertrees", "hypercycles", "hypercycle-class"],
    )
    add_shape(p, k_required=True)
    p.add_argument("--j", type=int, default=None, help="cycle length class")
    p.add_argument("--form", choices=["closed", "sum"], default="closed")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("enumerate", help="exhaustive desk-scale enumeration")
    p.add_argument("--kind", required=True, choices=["forests", "codes", "hypercycles"])
    add_shape(p, k_required=True)
    p.add_argument(
        "--multiset",
        action="store_true",
        help="hypercycles only: allow repeated edges",
    )
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("audit", help="hypercycle counts side by side")
    add_shape(p, k_required=False)
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("sample", help="uniform random forests, seeded")
    add_shape(p, k_required=True)
    p.add_argument("--seed", type=int, required=True, help="64-bit unsigned seed")
    p.add_argument("--m", type=int, default=1, help="number of draws")
    p.set_defaults(handler=_cmd_sample)

    p = sub.add_parser("rank", help="canonical index of a code document")
    add_input(p)
    p.set_defaults(handler=_cmd_rank)

    p = sub.add_parser("unrank", help="code document at a canonical index")
    p.add_argument("--index", type=int, required=True)
    add_shape(p, k_required=True)
    p.set_defaults(handler=_cmd_unrank)

    p = sub.add_parser("ids", help="the first m codes, as unique identifiers")
    add_shape(p, k_required=True)
    p.add_argument("--m", type=int, required=True, help="number of identifiers")
    p.set_defaults(handler=_cmd_ids)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        _fail("usage", str(exc))
        return 2
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)

    try:
        return args.handler(args)
    except _UsageError as exc:
        _fail("usage", str(exc))
        return 2
    except _DocumentError as exc:
        _fail("invalid-document", str(exc))
        return 1
    except json.JSONDecodeError as exc:
        _fail("invalid-document", f"input is not valid JSON: {exc}")
        return 1
    except InvalidStructureError as exc:
        _fail("invalid-structure", str(exc))
        return 1
    except BudgetExceededError as exc:
        _fail("budget", str(exc))
        return 2
    except ParameterRangeError as exc:
        _fail("range", str(exc))
        return 2
    except OSError as exc:
        _fail("io", str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
