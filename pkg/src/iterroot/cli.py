"""Command-line front end: construct / verify / approx / census / word.

Exit codes: 0 on success, 1 when a verification or search fails, 2 on usage
or parse errors.  All numeric output is exact (rational strings); floats are
added only on request.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import census as census_mod
from .approximation import (
    ApproximationTarget,
    IterationCapError,
    convergence_table,
    find_epsilon_multi_place,
    multi_place_rows,
)
from .construction import (
    build_family,
    parse_word,
    verify_key_congruence,
    verify_lemma_suite,
    word_total_exponent,
)
from .epsilon import epsilon_poly_from_json, epsilon_poly_to_json, LaurentRing
from .polynomials import Poly
from .scalars import QQ, DomainError, parse_field, parse_place


class UsageError(ValueError):
    pass


def _parse_poly(field, text: str) -> Poly:
    try:
        coeffs = [field.parse(tok) for tok in text.split(",")] if text.strip() else []
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad polynomial literal {text!r}: {exc}") from None
    return Poly(field, coeffs)


def _parse_anchors(field, text: str | None):
    if text is None:
        return None
    try:
        return [field.parse(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad anchor list {text!r}: {exc}") from None


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational literal {text!r}: {exc}") from None


def _load_request(args):
    """Build (field, target, r, anchors, n) from flags or a construct JSON."""
    if getattr(args, "json", None):
        with open(args.json, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        field = parse_field(data["field"])
        target = Poly.from_json(field, data["target"])
        anchors = [field.parse(s) for s in data.get("anchors", [])] or None
        return field, target, data["r"], anchors, data.get("n"), data.get("family")
    if args.poly is None:
        raise UsageError("--poly is required (or --json)")
    field = parse_field(args.field)
    target = _parse_poly(field, args.poly)
    anchors = _parse_anchors(field, args.anchors)
    return field, target, args.r, anchors, args.n, None


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands ----------------------------------------------------------------


def _cmd_construct(args) -> int:
    field, target, r, anchors, n, _ = _load_request(args)
    if r is None:
        raise UsageError("--r is required")
    data = build_family(target, r, anchors=anchors, n=n)
    _emit(args, _dump_json(data.to_json()))
    return 0


def _resolve_window_arg(args):
    if getattr(args, "exact", False):
        return None
    if getattr(args, "window", None) is not None:
        return args.window
    return "auto"


def _cmd_verify(args) -> int:
    field, target, r, anchors, n, family_json = _load_request(args)
    if r is None:
        raise UsageError("--r is required")
    data = build_family(target, r, anchors=anchors, n=n)
    out = {"construction": data.to_json()}
    if family_json is not None:
        rebuilt = epsilon_poly_from_json(LaurentRing(field), family_json)
        if rebuilt != data.family:
            out["family_matches_input"] = False
            out["passed"] = False
            _emit(args, _dump_json(out))
            return 1
        out["family_matches_input"] = True
    window = _resolve_window_arg(args)
    key_report = verify_key_congruence(data, window=window)
    lemma_report = verify_lemma_suite(data, window=window)
    out["key_congruence"] = key_report.to_json(include_timing=args.timing)
    out["lemmas"] = lemma_report.to_json(include_timing=args.timing)
    out["passed"] = key_report.passed and lemma_report.passed
    _emit(args, _dump_json(out))
    return 0 if out["passed"] else 1


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_approx(args) -> int:
    if parse_field(args.field) != QQ:
        raise UsageError("approximation works over Q only")
    target = _parse_poly(QQ, args.poly)
    if args.eta is not None:
        places = tuple(parse_place(tok) for tok in args.places.split(","))
        spec = ApproximationTarget(
            target=target,
            order=args.r,
            places=places,
            tolerance=_parse_fraction(args.eta),
        )
        epsilon = find_epsilon_multi_place(spec, max_steps=args.max_steps)
        rows = multi_place_rows(spec, epsilon)
        out = {
            "epsilon": str(epsilon),
            "r": args.r,
            "eta": str(spec.tolerance),
            "places": [
                {
                    "place": row.place.label,
                    "error_norm": str(row.error_norm),
                    "passes": row.error_norm < spec.tolerance,
                }
                for row in rows
            ],
        }
        if args.float:
            for entry, row in zip(out["places"], rows):
                entry["error_norm_float"] = float(row.error_norm)
        _emit(args, _dump_json(out))
        return 0
    if args.epsilons is None:
        raise UsageError("approx needs either --eta (search) or --epsilons (table)")
    place = parse_place(args.place)
    e_list = [_parse_fraction(tok) for tok in args.epsilons.split(",")]
    rows = convergence_table(target, args.r, place, e_list)
    header = ["epsilon", "place", "error_norm", "ratio"]
    if args.float:
        header += ["error_norm_float", "ratio_float"]
    table = []
    for row in rows:
        record = [str(row.epsilon), row.place.label, str(row.error_norm), str(row.ratio)]
        if args.float:
            record += [repr(float(row.error_norm)), repr(float(row.ratio))]
        table.append(record)
    _emit(args, _csv_text(header, table))
    return 0


def _cmd_census(args) -> int:
    d_list = [int(tok) for tok in args.d.split(",")]
    rows = census_mod.density_report(args.q, args.r, d_list, cap=args.limit)
    header = ["q", "r", "d", "count", "total", "ratio_num", "ratio_den", "bound"]
    if args.float:
        header.append("ratio_float")
    table = []
    for row in rows:
        record = [
            row.q,
            row.r,
            row.d,
            row.count,
            row.total,
            row.ratio.numerator,
            row.ratio.denominator,
            row.bound,
        ]
        if args.float:
            record.append(repr(float(row.ratio)))
        table.append(record)
    _emit(args, _csv_text(header, table))
    return 0


def _cmd_word(args) -> int:
    word = parse_word(args.word)
    total = word_total_exponent(word)
    out = {"word": args.word, "total_exponent": total}
    if args.poly is not None:
        field = parse_field(args.field)
        target = _parse_poly(field, args.poly)
        anchors = _parse_anchors(field, args.anchors)
        data = build_family(target, total, anchors=anchors, n=args.n)
        out["construction"] = data.to_json()
    _emit(args, _dump_json(out))
    return 0


# -- parser ----------------------------------------------------------------------


def _add_request_flags(p):
    p.add_argument("--field", default="Q", help="coefficient field: Q or Fp:<p>")
    p.add_argument("--poly", help="target polynomial, ascending comma-separated coefficients")
    p.add_argument("--r", type=int, default=None, help="iteration order")
    p.add_argument("--anchors", help="override anchors, comma-separated scalars")
    p.add_argument("--n", type=int, default=None, help="force a larger degree parameter")
    p.add_argument("--json", help="read field/r/target/anchors from a construct JSON file")
    p.add_argument("--output", help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iterroot",
        description=(
            "Exact construction and verification of polynomial families whose "
            "r-th iterate degenerates to a prescribed target."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit the family and its ingredients as JSON")
    _add_request_flags(p)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="verify the defining congruence and identity suite")
    _add_request_flags(p)
    p.add_argument("--exact", action="store_true", help="force exact (unwindowed) arithmetic")
    p.add_argument("--window", type=int, help="force a specific exponent window")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in reports")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("approx", help="convergence tables and multi-place epsilon search")
    p.add_argument("--field", default="Q", help="must be Q")
    p.add_argument("--poly", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--place", default="inf", help="place for a convergence table")
    p.add_argument("--epsilons", help="comma-separated rationals for a table")
    p.add_argument("--places", help="comma-separated places for a search")
    p.add_argument("--eta", help="tolerance for the search (rational)")
    p.add_argument("--max-steps", type=int, default=200)
    p.add_argument("--float", action="store_true", help="add float renderings")
    p.add_argument("--output")
    p.set_defaults(fn=_cmd_approx)

    p = sub.add_parser("census", help="census of r-th iterates over a prime field")
    p.add_argument("--q", type=int, required=True, help="prime field size")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", required=True, help="degree bound(s), comma-separated")
    p.add_argument("--limit", type=int, default=None, help="enumeration cap override")
    p.add_argument("--float", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("word", help="reduce a free-monoid word to its power order")
    p.add_argument("--word", required=True, help='e.g. "x1^2 x2^3"')
    _add_request_flags(p)
    p.set_defaults(fn=_cmd_word)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, DomainError, census_mod.SizeGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IterationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
