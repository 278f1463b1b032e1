"""Command-line interface: genetic codes, duality values, tables, verification.

Exit codes: 0 on success and passing checks, 1 when a mathematical check
fails (or a realization search is exhausted), 2 on input or contract errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .combinatorics import GeeParams, IndexSet, block_counts, compositions, is_subgee_profile
from .duality import (
    TopMonomial,
    admissible_summands,
    pairing,
    pairing_by_profile,
    pairing_set,
)
from .errors import PolyphiError, RealizationNotFoundError, SizeLimitError
from .lengths import (
    DEFAULT_MAX_N,
    LengthVector,
    genetic_code,
    monogenic_gee,
    normalize,
    realize_gee,
)
from .relations import (
    DEFAULT_MAX_BASIS,
    annihilation_failures,
    cross_validate,
    subgee_count,
)

__all__ = ["main"]


def _parse_lengths(text: str) -> LengthVector:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise ValueError("empty length list")
    values = []
    for tok in tokens:
        try:
            values.append(Fraction(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {tok!r}") from exc
    return normalize(values)


def _parse_gee(text: str) -> GeeParams:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    return GeeParams(tuple(int(t) for t in tokens))


def _parse_subset(text: str) -> IndexSet:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    return IndexSet(int(t) for t in tokens)


def _render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_rows(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _fmt_gee(gee: GeeParams) -> str:
    return f"({','.join(map(str, gee.a))})"


def _fmt_set_desc(s: IndexSet) -> str:
    return "{" + ",".join(map(str, s.descending())) + "}"


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _gee_from_args(args: argparse.Namespace) -> tuple[GeeParams, LengthVector | None]:
    """Resolve the gee either directly or through a monogenic length vector."""
    if getattr(args, "a", None) is not None:
        return _parse_gee(args.a), None
    lv = _parse_lengths(args.lengths)
    code = genetic_code(lv, max_n=args.max_n)
    return monogenic_gee(code), lv


def _cmd_gene(args: argparse.Namespace) -> int:
    lv = _parse_lengths(args.lengths)
    code = genetic_code(lv, max_n=args.max_n)
    gee = monogenic_gee(code) if code.is_monogenic else None
    if args.format == "json":
        payload = {
            "n": code.n,
            "generic": True,
            "code": [list(g.descending()) for g in code.genes],
            "monogenic": code.is_monogenic,
            "a": list(gee.a) if gee is not None else None,
        }
        sys.stdout.write(_render_json(payload))
    elif args.format == "csv":
        sys.stdout.write(
            _csv_rows(
                ["n", "generic", "monogenic", "a", "code"],
                [[
                    str(code.n),
                    "true",
                    _bool(code.is_monogenic),
                    " ".join(map(str, gee.a)) if gee is not None else "",
                    ";".join(" ".join(map(str, g.descending())) for g in code.genes),
                ]],
            )
        )
    else:
        print(f"n: {code.n}")
        print("generic: true")
        print(f"code: {'; '.join(_fmt_set_desc(g) for g in code.genes)}")
        print(f"monogenic: {_bool(code.is_monogenic)}")
        if gee is not None:
            print(f"a: {_fmt_gee(gee)}")
    return 0


def _cmd_phi(args: argparse.Namespace) -> int:
    gee, lv = _gee_from_args(args)
    subset = _parse_subset(args.J)
    if lv is not None:
        value = pairing(gee, TopMonomial(subset, lv.n))
    else:
        value = pairing_set(gee, subset)
    in_span = not subset or max(subset) <= gee.span
    profile = block_counts(subset, gee) if in_span else None
    subgee = in_span and is_subgee_profile(profile)
    explain = (
        admissible_summands(gee, profile)
        if args.explain and profile is not None
        else None
    )
    if args.format == "json":
        payload = {
            "a": list(gee.a),
            "J": list(subset.elements),
            "n": lv.n if lv is not None else None,
            "theta": list(profile) if profile is not None else None,
            "subgee": subgee,
            "phi": value,
        }
        if explain is not None:
            payload["explain"] = [{"b": list(b), "term": term} for b, term in explain]
        sys.stdout.write(_render_json(payload))
    elif args.format == "csv":
        sys.stdout.write(
            _csv_rows(
                ["a", "J", "theta", "subgee", "phi"],
                [[
                    " ".join(map(str, gee.a)),
                    " ".join(map(str, subset.elements)),
                    " ".join(map(str, profile)) if profile is not None else "",
                    _bool(subgee),
                    str(value),
                ]],
            )
        )
    else:
        print(f"phi: {value}")
        print(f"theta: {profile if profile is not None else 'undefined (subscript beyond gee span)'}")
        print(f"subgee: {_bool(subgee)}")
        if explain is not None:
            for b, term in explain:
                print(f"B: {b} term={term}")
    return 0


def _table_profiles(gee: GeeParams) -> list[tuple[int, ...]]:
    rows = []
    for r in range(gee.k + 1):
        for profile in compositions(r, gee.k):
            if is_subgee_profile(profile) and all(c <= a for c, a in zip(profile, gee.a)):
                rows.append(profile)
    return rows


def _cmd_table(args: argparse.Namespace) -> int:
    gee = _parse_gee(args.a)
    limit = 1
    for a in gee.a:
        limit *= a + 1
    if limit > args.max_basis:
        raise SizeLimitError(f"table may reach {limit} rows, exceeding max_basis={args.max_basis}")
    rows = [(t, pairing_by_profile(gee, t)) for t in _table_profiles(gee)]
    if args.format == "json":
        payload = {
            "a": list(gee.a),
            "rows": [{"theta": list(t), "phi": v} for t, v in rows],
        }
        sys.stdout.write(_render_json(payload))
    elif args.format == "csv":
        sys.stdout.write(
            _csv_rows(["theta", "phi"], [[" ".join(map(str, t)), str(v)] for t, v in rows])
        )
    else:
        width = max(5, 2 * gee.k - 1)
        print(f"{'theta':<{width}}  phi")
        for t, v in rows:
            print(f"{' '.join(map(str, t)):<{width}}  {v}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    gee = _parse_gee(args.a)
    failures = annihilation_failures(gee, max_basis=args.max_basis)
    relations = subgee_count(gee) - 1 if gee.k else 0
    ok = not failures
    if args.format == "json":
        payload = {
            "a": list(gee.a),
            "relations": relations,
            "all_annihilated": ok,
            "failures": [list(f.descending()) for f in failures],
        }
        sys.stdout.write(_render_json(payload))
    elif args.format == "csv":
        sys.stdout.write(
            _csv_rows(
                ["a", "relations", "all_annihilated", "failures"],
                [[
                    " ".join(map(str, gee.a)),
                    str(relations),
                    _bool(ok),
                    ";".join(" ".join(map(str, f.descending())) for f in failures),
                ]],
            )
        )
    else:
        if ok:
            print(f"all {relations} relations annihilated")
        else:
            for f in failures:
                print(f"relation not annihilated: I={_fmt_set_desc(f)}")
    return 0 if ok else 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    gee = _parse_gee(args.a)
    report = cross_validate(gee, max_basis=args.max_basis)
    if args.format == "json":
        payload = {
            "a": list(gee.a),
            "basis": report.basis_size,
            "rank": report.rank,
            "nullspace_dim": report.nullspace_dim,
            "agree": report.agree,
        }
        if args.explain:
            payload["values"] = [
                {
                    "J": list(c.elements),
                    "formula": report.formula[c],
                    "oracle": report.oracle[c] if report.oracle is not None else None,
                }
                for c in sorted(report.formula, key=lambda s: (len(s.elements), s.elements))
            ]
        sys.stdout.write(_render_json(payload))
    elif args.format == "csv":
        sys.stdout.write(
            _csv_rows(
                ["a", "basis", "rank", "nullspace_dim", "agree"],
                [[
                    " ".join(map(str, gee.a)),
                    str(report.basis_size),
                    str(report.rank),
                    str(report.nullspace_dim),
                    _bool(report.agree),
                ]],
            )
        )
    else:
        print(f"a: {_fmt_gee(gee)}")
        print(f"basis: {report.basis_size}")
        print(f"rank: {report.rank}")
        print(f"nullspace_dim: {report.nullspace_dim}")
        print(f"agree: {_bool(report.agree)}")
        if args.explain:
            for c in sorted(report.formula, key=lambda s: (len(s.elements), s.elements)):
                oracle = report.oracle[c] if report.oracle is not None else "-"
                print(f"J={{{','.join(map(str, c.elements))}}} formula={report.formula[c]} oracle={oracle}")
    return 0 if report.agree else 1


def _cmd_realize(args: argparse.Namespace) -> int:
    gee = _parse_gee(args.a)
    lv = realize_gee(gee, search_bound=args.bound)
    total = sum(lv.lengths)
    if args.format == "json":
        payload = {
            "a": list(gee.a),
            "n": lv.n,
            "lengths": [str(x) for x in lv.lengths],
            "total": str(total),
        }
        sys.stdout.write(_render_json(payload))
    elif args.format == "csv":
        sys.stdout.write(
            _csv_rows(
                ["a", "n", "total", "lengths"],
                [[
                    " ".join(map(str, gee.a)),
                    str(lv.n),
                    str(total),
                    " ".join(str(x) for x in lv.lengths),
                ]],
            )
        )
    else:
        print(f"n: {lv.n}")
        print(f"lengths: {','.join(str(x) for x in lv.lengths)}")
        print(f"total: {total}")
    return 0


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyphi",
        description="Genetic codes of length vectors and the mod-2 duality functional "
        "of planar polygon spaces with monogenic codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gene = sub.add_parser("gene", help="compute the genetic code of a length vector")
    p_gene.add_argument("--lengths", required=True, help="comma-separated rationals, e.g. 1,1,1/2,3")
    p_gene.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n")
    _add_format(p_gene)
    p_gene.set_defaults(func=_cmd_gene)

    p_phi = sub.add_parser("phi", help="evaluate the duality functional on a monomial")
    src = p_phi.add_mutually_exclusive_group(required=True)
    src.add_argument("--a", help="gee increments, e.g. 2,2,2 (empty string for k=0)")
    src.add_argument("--lengths", help="length vector with a monogenic code")
    p_phi.add_argument("--J", required=True, help="subscript set, e.g. 1,3 (empty string for none)")
    p_phi.add_argument("--explain", action="store_true", help="list the contributing summand profiles")
    p_phi.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n")
    _add_format(p_phi)
    p_phi.set_defaults(func=_cmd_phi)

    p_table = sub.add_parser("table", help="tabulate the functional over all block profiles")
    p_table.add_argument("--a", required=True)
    p_table.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS, dest="max_basis")
    _add_format(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="check that the formula annihilates every relation")
    p_verify.add_argument("--a", required=True)
    p_verify.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS, dest="max_basis")
    _add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="solve the relation nullspace and compare with the formula")
    p_oracle.add_argument("--a", required=True)
    p_oracle.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS, dest="max_basis")
    p_oracle.add_argument("--explain", action="store_true", help="include per-subgee values")
    _add_format(p_oracle)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_realize = sub.add_parser("realize", help="search for a length vector with the given single gee")
    p_realize.add_argument("--a", required=True)
    p_realize.add_argument("--bound", type=int, default=40, help="maximum total integer length to try")
    _add_format(p_realize)
    p_realize.set_defaults(func=_cmd_realize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RealizationNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (PolyphiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
