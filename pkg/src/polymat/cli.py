"""Command-line interface.

    polymat <command> [--kind interior|exterior|both] [--method direct|recursion]
            [--element T] [--machine] [--max-n N] <file>

Commands: validate, bases, poly, structure, coeffs, verify.  The input
file (or ``-`` for standard input) holds one document in the format of
:mod:`polymat.documents`; graphs, matroids, and hypergraphs are turned
into polymatroids before the polynomial commands run.

Exit codes: 0 success, 1 a verification or in-range coefficient check
failed, 2 the input could not be parsed, validated, or sized.
"""

from __future__ import annotations

import argparse
import json
import sys

from .activity import exterior_by_slices, interior_by_slices, polynomial_pair
from .core import DEFAULT_MAX_GROUND_SET, Polymatroid, RankTable, SizeLimitError
from .documents import (
    GraphDocument,
    HypergraphDocument,
    InputDocument,
    MatroidDocument,
    RankTableDocument,
    parse_document,
)
from .graphs import Graph
from .hypergraphs import Hypergraph
from .matroids import DEFAULT_MAX_ELEMENTS, Matroid
from .polynomials import Polynomial
from .structure import (
    exterior_coefficient_formula,
    exterior_formula_range,
    interior_coefficient_formula,
    interior_formula_range,
    structure_summary,
)
from .subsets import elements_of
from .verify import verify_graph, verify_hypergraph, verify_matroid, verify_polymatroid

_COMMAND_HELP = {
    "validate": "parse the document and check its defining axioms",
    "bases": "list every basis vector",
    "poly": "compute the interior and/or exterior polynomial",
    "structure": "report flats, set families, and thresholds",
    "coeffs": "compare closed-form coefficients against enumeration",
    "verify": "run the full identity suite for the input",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymat",
        description="Interior and exterior polynomials of integer polymatroids, "
        "with graph, matroid, and hypergraph frontends.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in _COMMAND_HELP.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--kind",
            choices=("interior", "exterior", "both"),
            default="both",
            help="which polynomial(s) to use (poly, coeffs); default both",
        )
        p.add_argument(
            "--method",
            choices=("direct", "recursion"),
            default="direct",
            help="poly route: activity enumeration or coordinate-slice recursion",
        )
        p.add_argument(
            "--element",
            type=int,
            default=None,
            help="pivot element for '--method recursion' (default: the last one)",
        )
        p.add_argument(
            "--machine",
            action="store_true",
            help="emit a JSON report instead of text",
        )
        p.add_argument(
            "--max-n",
            type=int,
            default=None,
            dest="max_n",
            help="override the size guard (default "
            f"{DEFAULT_MAX_GROUND_SET} for rank tables and hypergraphs, "
            f"{DEFAULT_MAX_ELEMENTS} for graphs and matroids)",
        )
        p.add_argument("file", help="input document path, or - for standard input")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _size_cap(args, default: int, size: int, what: str) -> None:
    cap = args.max_n if args.max_n is not None else default
    if args.max_n is not None and args.max_n > default:
        print(
            f"warning: size limit raised to {args.max_n} (default {default}); "
            "run time grows exponentially",
            file=sys.stderr,
        )
    if size > cap:
        raise SizeLimitError(
            f"{what} {size} exceeds the limit {cap}; raise it with --max-n"
        )


def _build_object(doc: InputDocument, args):
    """Construct the frontend object named by the document, behind size guards."""
    if isinstance(doc, RankTableDocument):
        _size_cap(args, DEFAULT_MAX_GROUND_SET, doc.n, "ground-set size")
        table = RankTable.from_subsets(doc.n, dict(doc.entries), max_n=max(doc.n, 1))
        return Polymatroid(table)
    if isinstance(doc, GraphDocument):
        _size_cap(args, DEFAULT_MAX_ELEMENTS, len(doc.edges), "edge count")
        return Graph(doc.vertex_count, doc.edges)
    if isinstance(doc, MatroidDocument):
        _size_cap(args, DEFAULT_MAX_ELEMENTS, doc.n, "ground-set size")
        return Matroid(doc.n, doc.bases)
    if isinstance(doc, HypergraphDocument):
        _size_cap(args, DEFAULT_MAX_GROUND_SET, len(doc.hyperedges), "hyperedge count")
        return Hypergraph(doc.vertices, doc.hyperedges)
    raise TypeError(f"unhandled document {doc!r}")


def _as_polymatroid(obj) -> Polymatroid:
    if isinstance(obj, Polymatroid):
        return obj
    if isinstance(obj, Matroid):
        return obj.to_polymatroid()
    if isinstance(obj, Graph):
        return obj.cycle_matroid().to_polymatroid()
    if isinstance(obj, Hypergraph):
        return obj.to_polymatroid()
    raise TypeError(f"unhandled input object {obj!r}")


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.machine:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _subset_lists(masks) -> list[list[int]]:
    return sorted((list(elements_of(m)) for m in masks), key=lambda s: (len(s), s))


def _subset_text(mask: int) -> str:
    els = elements_of(mask)
    return ",".join(map(str, els)) if els else "empty"


def _family_payload(groups: dict[int, frozenset[int]]) -> dict[str, list[list[int]]]:
    return {str(j): _subset_lists(s) for j, s in groups.items() if s}


def _poly_payload(poly: Polynomial) -> dict:
    return {"coefficients": list(poly.coeffs), "pretty": poly.pretty()}


# -- commands -----------------------------------------------------------


def _cmd_validate(doc, obj, args) -> int:
    P = _as_polymatroid(obj)
    lines = [f"valid {doc.kind}"]
    payload = {"command": "validate", "kind": doc.kind, "valid": True}
    if isinstance(obj, Graph):
        lines.append(f"vertices {obj.vertex_count} edges {obj.edge_count} connected")
        payload.update(vertices=obj.vertex_count, edges=obj.edge_count, connected=True)
    elif isinstance(obj, Matroid):
        lines.append(f"elements {obj.n} rank {obj.rank} bases {len(obj.base_masks)}")
        payload.update(elements=obj.n, rank=obj.rank, bases=len(obj.base_masks))
    elif isinstance(obj, Hypergraph):
        lines.append(
            f"vertices {obj.vertex_count} hyperedges {obj.edge_count} connected"
        )
        payload.update(
            vertices=obj.vertex_count, hyperedges=obj.edge_count, connected=True
        )
    lines.append(f"ground-set {P.n} full-rank {P.full_rank}")
    payload.update(ground_set=P.n, full_rank=P.full_rank)
    _emit(args, lines, payload)
    return 0


def _cmd_bases(doc, obj, args) -> int:
    P = _as_polymatroid(obj)
    bases = P.bases()
    lines = [f"bases {len(bases)}"]
    lines.extend(" ".join(map(str, b)) for b in bases)
    payload = {
        "command": "bases",
        "kind": doc.kind,
        "count": len(bases),
        "bases": [list(b) for b in bases],
    }
    _emit(args, lines, payload)
    return 0


def _compute_polynomials(P: Polymatroid, args) -> dict[str, Polynomial]:
    if args.element is not None and args.method != "recursion":
        print("warning: --element only affects --method recursion", file=sys.stderr)
    out: dict[str, Polynomial] = {}
    if args.method == "direct":
        interior, exterior = polynomial_pair(P)
        if args.kind in ("interior", "both"):
            out["interior"] = interior
        if args.kind in ("exterior", "both"):
            out["exterior"] = exterior
    else:
        if args.kind in ("interior", "both"):
            out["interior"] = interior_by_slices(P, args.element)
        if args.kind in ("exterior", "both"):
            out["exterior"] = exterior_by_slices(P, args.element)
    return out


def _cmd_poly(doc, obj, args) -> int:
    P = _as_polymatroid(obj)
    polys = _compute_polynomials(P, args)
    lines = []
    payload = {"command": "poly", "kind": doc.kind, "method": args.method}
    for name in ("interior", "exterior"):
        if name not in polys:
            continue
        poly = polys[name]
        lines.append(f"{name} " + " ".join(map(str, poly.coeffs)))
        lines.append(f"{name}-pretty {poly.pretty()}")
        payload[name] = _poly_payload(poly)
    _emit(args, lines, payload)
    return 0


def _cmd_structure(doc, obj, args) -> int:
    P = _as_polymatroid(obj)
    summary = structure_summary(P)
    lines = [
        f"ground-set {P.n}",
        f"full-rank {P.full_rank}",
        f"full-deficiency {summary.full_deficiency}",
        "rank-drop-thresholds "
        + " ".join(f"{k}:{v}" for k, v in sorted(summary.rank_drop.items())),
        "deficiency-thresholds "
        + " ".join(f"{k}:{v}" for k, v in sorted(summary.deficiency.items())),
        f"flats {len(summary.flats)}",
    ]
    lines.extend(f"flat {_subset_text(m)}" for m in summary.flats)
    for j in sorted(summary.hyperplanes):
        group = summary.hyperplanes[j]
        if group:
            members = " ".join(_subset_text(m) for m in sorted(group))
            lines.append(f"hyperplanes complement-size {j} count {len(group)}: {members}")
    for j in sorted(summary.circuits):
        group = summary.circuits[j]
        if group:
            members = " ".join(_subset_text(m) for m in sorted(group))
            lines.append(f"circuits size {j} count {len(group)}: {members}")
    payload = {
        "command": "structure",
        "kind": doc.kind,
        "ground_set": P.n,
        "full_rank": P.full_rank,
        "full_deficiency": summary.full_deficiency,
        "rank_drop_thresholds": {str(k): v for k, v in summary.rank_drop.items()},
        "deficiency_thresholds": {str(k): v for k, v in summary.deficiency.items()},
        "flats": _subset_lists(summary.flats),
        "hyperplanes": _family_payload(summary.hyperplanes),
        "circuits": _family_payload(summary.circuits),
    }
    _emit(args, lines, payload)
    return 0


def _coeff_rows(P: Polymatroid, poly: Polynomial, formula, valid_range: int):
    top = max(poly.degree, valid_range - 1, 0)
    rows = []
    for i in range(top + 1):
        value = formula(P, i, unchecked=True)
        enumerated = poly.coefficient(i)
        rows.append(
            {
                "i": i,
                "formula": value,
                "enumerated": enumerated,
                "in_range": i < valid_range,
                "match": value == enumerated,
            }
        )
    return rows


def _cmd_coeffs(doc, obj, args) -> int:
    P = _as_polymatroid(obj)
    interior, exterior = polynomial_pair(P)
    sections = []
    if args.kind in ("interior", "both"):
        sections.append(
            ("interior", interior, interior_coefficient_formula, interior_formula_range(P))
        )
    if args.kind in ("exterior", "both"):
        sections.append(
            ("exterior", exterior, exterior_coefficient_formula, exterior_formula_range(P))
        )
    lines = []
    payload = {"command": "coeffs", "kind": doc.kind}
    failed = False
    for name, poly, formula, valid_range in sections:
        rows = _coeff_rows(P, poly, formula, valid_range)
        lines.append(f"{name} guaranteed-range {valid_range}")
        for row in rows:
            tag = "in-range" if row["in_range"] else "flagged"
            verdict = "match" if row["match"] else "differs"
            lines.append(
                f"{name} i={row['i']} formula {row['formula']} "
                f"enumerated {row['enumerated']} {tag} {verdict}"
            )
            if row["in_range"] and not row["match"]:
                failed = True
        payload[name] = {"guaranteed_range": valid_range, "rows": rows}
    payload["passed"] = not failed
    lines.append("coeffs " + ("ok" if not failed else "FAILED: in-range mismatch"))
    _emit(args, lines, payload)
    return 1 if failed else 0


def _cmd_verify(doc, obj, args) -> int:
    if isinstance(obj, Graph):
        checks = verify_graph(obj)
    elif isinstance(obj, Matroid):
        checks = verify_matroid(obj)
    elif isinstance(obj, Hypergraph):
        checks = verify_hypergraph(obj)
    else:
        checks = verify_polymatroid(obj)
    lines = []
    for check in checks:
        if check.passed:
            lines.append(f"PASS {check.name}")
        else:
            lines.append(f"FAIL {check.name} — {check.detail}")
    good = sum(1 for c in checks if c.passed)
    lines.append(f"verify {good}/{len(checks)} checks passed")
    payload = {
        "command": "verify",
        "kind": doc.kind,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
        ],
        "passed": good == len(checks),
    }
    _emit(args, lines, payload)
    return 0 if good == len(checks) else 1


_COMMANDS = {
    "validate": _cmd_validate,
    "bases": _cmd_bases,
    "poly": _cmd_poly,
    "structure": _cmd_structure,
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        text = _read_input(args.file)
        doc = parse_document(text)
        obj = _build_object(doc, args)
        return _COMMANDS[args.command](doc, obj, args)
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # Parse errors, axiom violations, size guards, and other bad input.
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
