"""Command-line front end.

Every subcommand builds a JSON-serializable payload; the text view is rendered
from that payload alone, so anything shown as text can be recovered from
``--format json``.

Exit status: 0 success, 1 a ``verify`` criterion failed, 2 invalid arguments,
3 internal inconsistency, 4 resource guard exceeded.

D8 elements are printed as ``e, a, b, ab, g, ga, gb, gab``: ``a`` and ``b``
reverse the first and second hyperplane, ``g`` swaps the two, and products are
written left to right as composition (``ga`` applies ``a`` first, then ``g``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import __version__
from .dickson import (
    CLOSING_TABLE_ROWS,
    DEFAULT_PRODUCT_CAP,
    admissible_fh,
    bounds_report,
    closing_table,
    lower_bound,
    minimal_d_star,
)
from .dynamics import enumerate_circles, state_count
from .errors import InconsistencyError, ResourceLimitError
from .jacobian import ROW_ORDERS, block_diagonal_sign, build_configuration, det_sign, sign_matrix
from .obstruction import EPSILON_CONVENTIONS, obstruction_delta0, obstruction_delta1
from .words import (
    count_balanced_circular,
    count_primitive_balanced,
    count_primitive_circular,
    count_star_primitive,
)

SCHEMA = "equipartition/1"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3
EXIT_RESOURCE = 4


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


# -- payload builders ---------------------------------------------------------


def cmd_words(args: argparse.Namespace) -> dict:
    if args.nmin > args.nmax:
        raise ValueError(f"--nmin {args.nmin} exceeds --nmax {args.nmax}")
    rows = []
    for n in range(args.nmin, args.nmax + 1):
        a = count_star_primitive(n, "brute" if args.method == "brute" else "fast")
        p2n = count_primitive_circular(2 * n, args.method)
        rows.append(
            {
                "n": n,
                "R": count_balanced_circular(n, args.method),
                "P": count_primitive_circular(n, args.method),
                "P2n": p2n,
                "Q": count_primitive_balanced(n, args.method),
                "A": a,
                "A_mod2": a % 2,
                "P2n_mod2": p2n % 2,
            }
        )
    return {"command": "words", "method": args.method, "rows": rows}


def cmd_circles(args: argparse.Namespace) -> dict:
    circles = enumerate_circles(args.j)
    return {
        "command": "circles",
        "j": args.j,
        "states": state_count(args.j),
        "circles": [
            {
                "length": c.length,
                "start": str(c.states[0]),
                "compressed": [str(w) for w in c.compressed()],
            }
            for c in circles
        ],
    }


def _bound_line(j: int, d: int, admissible: bool) -> str | None:
    if not admissible:
        return None
    if lower_bound(j, 2) == d:
        return f"Δ({j},2) = {d}"
    return f"Δ({j},2) ≤ {d}"


def cmd_obstruction(args: argparse.Namespace) -> dict:
    delta = 2 * args.d - 3 * args.j
    if delta == 1:
        result = obstruction_delta1(
            args.j,
            args.d,
            epsilon_convention=args.epsilon_convention,
            row_order=args.row_order,
        )
    elif delta == 0:
        result = obstruction_delta0(args.j // 2)
    else:
        raise ValueError(
            f"2d - 3j = {delta} for (d, j) = ({args.d}, {args.j}); only 0 and 1 are supported"
        )
    payload = {"command": "obstruction", **result.to_dict()}
    payload["bound"] = _bound_line(args.j, args.d, result.admissible)
    return payload


def cmd_jacobian(args: argparse.Namespace) -> dict:
    config = build_configuration(args.word)
    matrix = sign_matrix(config, args.row_order)
    sign = det_sign(matrix)
    block = block_diagonal_sign(config, args.row_order)
    if block != sign:
        raise InconsistencyError(f"block-diagonal sign {block} disagrees with determinant {sign}")
    return {
        "command": "jacobian",
        "word": str(config.word),
        "row_order": args.row_order,
        "d": config.d,
        "curve_order": config.curve_order,
        "rows": list(matrix.rows),
        "columns": list(matrix.columns),
        "matrix": matrix.as_lists(),
        "sign": sign,
    }


def cmd_dickson(args: argparse.Namespace) -> dict:
    payload: dict = {
        "command": "dickson",
        "j": args.j,
        "k": args.k,
        "minimal_d": minimal_d_star(args.j, args.k, args.cap),
    }
    if args.d is not None:
        payload["d"] = args.d
        payload["admissible"] = admissible_fh(args.d, args.j, args.k, args.cap)
    return payload


def cmd_bounds(args: argparse.Namespace) -> dict:
    report = bounds_report(
        args.j,
        args.k,
        cap=args.cap,
        epsilon_convention=args.epsilon_convention,
        row_order=args.row_order,
    )
    return {"command": "bounds", **report.to_dict()}


def cmd_table(args: argparse.Namespace) -> dict:
    js = range(1, args.jmax + 1) if args.jmax is not None else CLOSING_TABLE_ROWS
    return {"command": "table", "k": args.k, "rows": closing_table(args.k, js, args.cap)}


def cmd_verify(args: argparse.Namespace) -> dict:
    from .acceptance import run_all

    results = run_all(include_optional=args.include_optional)
    return {
        "command": "verify",
        "criteria": [
            {
                "number": r.number,
                "title": r.title,
                "passed": r.passed,
                "detail": r.detail,
                "failed_checks": r.failures,
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }


# -- text renderers (payload -> text) ------------------------------------------


def _signed(v: int | None) -> str:
    return "." if v is None else f"{v:+d}"


def render_words(p: dict) -> list[str]:
    head = f"{'n':>3} {'R(n)':>10} {'P(n)':>10} {'P(2n)':>12} {'Q(n)':>10} {'A(n)':>8} {'A mod 2':>8} {'P(2n) mod 2':>12}"
    lines = [head]
    for r in p["rows"]:
        lines.append(
            f"{r['n']:>3} {r['R']:>10} {r['P']:>10} {r['P2n']:>12} {r['Q']:>10} "
            f"{r['A']:>8} {r['A_mod2']:>8} {r['P2n_mod2']:>12}"
        )
    return lines


def render_circles(p: dict) -> list[str]:
    lines = [f"j = {p['j']}: {p['states']} states, {len(p['circles'])} circles"]
    for c in p["circles"]:
        lines.append(f"  length {c['length']:>4}  from {c['start']}: {' '.join(c['compressed'])}")
    return lines


def render_obstruction(p: dict) -> list[str]:
    lines = [f"(d, j, k) = ({p['d']}, {p['j']}, {p['k']})  case {p['case']}"]
    if p["classes"]:
        lines.append(f"generating classes: {len(p['classes'])}")
        for c in p["classes"]:
            stab = "{" + ",".join(c["stabilizer"]) + "}"
            lines.append(
                f"  {c['canonical']}{c['signs']}  components {c['components']}  "
                f"length {c['circle_length']}  stabilizer {stab}  monodromy {c['monodromy']}  "
                f"epsilon {_signed(c['epsilon'])}  eta {_signed(c['eta'])}  "
                f"contribution {c['contribution']}"
            )
            lines.append(f"    cycle: {' '.join(c['compressed'])}")
    counters = "  ".join(f"{k}={v}" for k, v in p["counters"].items())
    lines.append(f"counters: {counters}")
    lines.append(f"total: {p['total']}")
    lines.append(f"verdict: {p['verdict']}")
    if p["bound"]:
        lines.append(f"bound: {p['bound']}")
    for note in p["notes"]:
        lines.append(f"note: {note}")
    return lines


def render_jacobian(p: dict) -> list[str]:
    width = max(len(c) for c in p["columns"])
    label = max(len(r) for r in p["rows"])
    lines = [
        f"word {p['word']}  d = {p['d']}  row order {p['row_order']}",
        f"curve order: {' '.join(p['curve_order'])}",
        " " * label + " " + " ".join(f"{c:>{width}}" for c in p["columns"]),
    ]
    for name, row in zip(p["rows"], p["matrix"]):
        lines.append(f"{name:<{label}} " + " ".join(f"{v:>{width}}" for v in row))
    lines.append(f"sign: {p['sign']:+d}")
    return lines


def render_dickson(p: dict) -> list[str]:
    lines = [f"minimal d with P_{p['k']}^{p['j']} outside the ideal: {p['minimal_d']}"]
    if "d" in p:
        word = "admissible" if p["admissible"] else "not certified"
        lines.append(f"(d, j, k) = ({p['d']}, {p['j']}, {p['k']}): {word}")
    return lines


def render_bounds(p: dict) -> list[str]:
    lines = [p["summary"], f"lower: {p['lower']}"]
    for u in p["upper"]:
        lines.append(f"upper: {u['value']}  [{u['provenance']}]")
    for note in p["notes"]:
        lines.append(f"note: {note}")
    return lines


def render_table(p: dict) -> list[str]:
    lines = []
    for r in p["rows"]:
        dmin = "-" if r["dickson_min_d"] is None else r["dickson_min_d"]
        lines.append(
            f"{r['lower']} ≤ Δ({r['j']},{r['k']}) ≤ {r['upper']}  ({r['previous_upper']})  "
            f"minimal d from P_{r['k']}^{r['j']}: {dmin}"
        )
    return lines


def render_verify(p: dict) -> list[str]:
    lines = []
    for c in p["criteria"]:
        status = "PASS" if c["passed"] else "FAIL"
        line = f"[{status}] criterion {c['number']}: {c['title']}"
        if c["detail"]:
            line += f" -- {c['detail']}"
        lines.append(line)
        for name in c["failed_checks"]:
            lines.append(f"    failed: {name}")
    lines.append("all criteria passed" if p["passed"] else "some criteria failed")
    return lines


RENDERERS: dict[str, Callable[[dict], list[str]]] = {
    "words": render_words,
    "circles": render_circles,
    "obstruction": render_obstruction,
    "jacobian": render_jacobian,
    "dickson": render_dickson,
    "bounds": render_bounds,
    "table": render_table,
    "verify": render_verify,
}


def render_text(payload: dict, header: bool = True) -> str:
    lines = RENDERERS[payload["command"]](payload)
    if header:
        lines.insert(0, f"# equipartition {__version__}")
    return "\n".join(lines) + "\n"


def render_json(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA, **payload}, indent=2, ensure_ascii=False) + "\n"


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--no-header", action="store_true", help="omit the version header line")

    conventions = argparse.ArgumentParser(add_help=False)
    conventions.add_argument("--epsilon-convention", choices=EPSILON_CONVENTIONS, default="quarter")
    conventions.add_argument("--row-order", choices=sorted(ROW_ORDERS), default="standard")

    cap = argparse.ArgumentParser(add_help=False)
    cap.add_argument(
        "--cap", type=_positive, default=DEFAULT_PRODUCT_CAP, help="monomial-product guard"
    )

    parser = argparse.ArgumentParser(
        prog="equipartition",
        description="Admissibility of hyperplane mass-equipartition triples (d, j, k).",
        epilog="D8 elements: e, a, b, ab, g, ga, gb, gab (a, b reverse hyperplanes 1, 2; g swaps them).",
    )
    parser.add_argument("--version", action="version", version=f"equipartition {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("words", parents=[common], help="R, P, Q, A counting table")
    p.add_argument("--nmax", type=_positive, required=True)
    p.add_argument("--nmin", type=_positive, default=1)
    p.add_argument("--method", choices=("formula", "brute"), default="formula")

    p = sub.add_parser("circles", parents=[common], help="circles of the solution manifold")
    p.add_argument("--j", type=_positive, required=True)

    p = sub.add_parser(
        "obstruction", parents=[common, conventions], help="obstruction class for k = 2"
    )
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--j", type=_positive, required=True)

    p = sub.add_parser("jacobian", parents=[common], help="Jacobian sign matrix of a word")
    p.add_argument("--word", required=True, help="canonical word such as AAABBB")
    p.add_argument("--row-order", choices=sorted(ROW_ORDERS), default="standard")

    p = sub.add_parser("dickson", parents=[common, cap], help="Dickson ideal-membership test")
    p.add_argument("--j", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--d", type=_positive)

    p = sub.add_parser("bounds", parents=[common, conventions, cap], help="bounds on Delta(j, k)")
    p.add_argument("--j", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)

    p = sub.add_parser("table", parents=[common, cap], help="closing bound table")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--jmax", type=_positive, help="rows j = 1..JMAX instead of j = 7, 6, 15, 14")

    p = sub.add_parser("verify", parents=[common], help="run the acceptance criteria")
    p.add_argument("--include-optional", action="store_true", help="also run the j = 15 case")
    return parser


COMMANDS: dict[str, Callable[[argparse.Namespace], dict]] = {
    "words": cmd_words,
    "circles": cmd_circles,
    "obstruction": cmd_obstruction,
    "jacobian": cmd_jacobian,
    "dickson": cmd_dickson,
    "bounds": cmd_bounds,
    "table": cmd_table,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload = COMMANDS[args.command](args)
    except InconsistencyError as exc:
        print(f"error: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "json":
        text = render_json(payload)
    else:
        text = render_text(payload, header=not args.no_header)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not payload["passed"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
