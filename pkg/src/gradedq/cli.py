"""gradedq command line.

Exit codes: 0 success, 1 failed check, 2 unreadable input, 3 precondition
not met, 4 truncation window too small.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import charrings, scenarios
from .groebner import (
    GroebnerError,
    MonomialOrder,
    NonHomogeneousError,
    buchberger,
    format_lt_ideal,
    leading_term_ideal,
    load_ideal,
)
from .hilbert import DEFAULT_BOUND, hilbert_function
from .invariants import ActionError, UnstableIdealError, load_action, verify_fixed_point_lemma
from .polyring import PolynomialSyntaxError, RingMismatchError
from .specseq import SpectralSequenceError, TruncationError
from .verify import run_verification

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_TRUNCATION = 0, 1, 2, 3, 4


class InputError(Exception):
    """Unreadable or malformed input; maps to exit 2."""


def _read_json(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def _load_ideal_file(path: str, order_flag: str | None = None):
    data = _read_json(path)
    try:
        ideal, order = load_ideal(data)
    except KeyError as exc:
        raise InputError(f"{path}: missing field {exc}") from None
    except (PolynomialSyntaxError, RingMismatchError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None
    if order_flag:
        order = _parse_order(order_flag, ideal.ring)
    return ideal, order


def _parse_order(flag: str, ring):
    """``lex``, ``grevlex``, or ``lex:m,h,n,t`` style with explicit precedence."""
    kind, _, names = flag.partition(":")
    try:
        return MonomialOrder._make(kind, ring, names.split(",") if names else None)
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad --order {flag!r}: {exc}") from None


def _emit_json(payload: dict, dest: str | None, out):
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if dest in (None, "-"):
        out.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


# --- subcommands ------------------------------------------------------------

def cmd_groebner(args, out) -> int:
    ideal, order = _load_ideal_file(args.file, args.order)
    gb = buchberger(ideal, order)
    lt = leading_term_ideal(gb)
    if args.json:
        _emit_json({"order": order.to_json(ideal.ring),
                    "basis": [str(g) for g in gb.elements],
                    "leading_terms": format_lt_ideal(lt, ideal.ring)}, args.json, out)
        return EXIT_OK
    out.write(f"order: {order.describe(ideal.ring)}\n")
    out.write("reduced Groebner basis:\n")
    for g in gb.elements:
        out.write(f"  {g}\n")
    out.write(f"LT ideal: {format_lt_ideal(lt, ideal.ring)}\n")
    return EXIT_OK


def cmd_hilbert(args, out) -> int:
    ideal, order = _load_ideal_file(args.file, args.order)
    dims = hilbert_function(ideal, order, args.max_degree)
    if args.json:
        _emit_json(dims.to_json(), args.json, out)
    else:
        out.write(dims.table() + "\n")
    return EXIT_OK


def cmd_invariants(args, out) -> int:
    ideal, order = _load_ideal_file(args.ideal, args.order)
    data = _read_json(args.action)
    try:
        group = load_action(data, ideal.ring)
    except ActionError:
        raise
    except (KeyError, PolynomialSyntaxError, ValueError) as exc:
        raise InputError(f"{args.action}: {exc}") from None
    rep = verify_fixed_point_lemma(ideal, group, order, args.max_degree, strict=False)
    if args.json:
        _emit_json({"group_order": group.order, **rep.to_json()}, args.json, out)
    else:
        out.write(f"group of order {group.order}\n")
        out.write(f"dim (R/I)^G : {rep.fixed_quotient}\n")
        out.write(f"dim R^G/I^G : {rep.invariant_quotient}\n")
        if rep.holds:
            out.write("fixed-point lemma: holds in every degree\n")
        else:
            out.write(f"fixed-point lemma: FAILS at degree {rep.first_mismatch}\n")
    return EXIT_OK if rep.holds else EXIT_CHECK


def _load_scenario(ref: str):
    try:
        return scenarios.get(ref)
    except KeyError:
        pass
    if not Path(ref).exists():
        raise InputError(f"{ref!r} is neither a built-in scenario "
                         f"({', '.join(scenarios.BUILTIN)}) nor a readable file")
    data = _read_json(ref)
    try:
        return scenarios.from_json(data)
    except (PolynomialSyntaxError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{ref}: {exc}") from None


def cmd_ss(args, out) -> int:
    sc = _load_scenario(args.scenario)
    bound = args.max_degree if args.max_degree is not None else (sc.max_degree or DEFAULT_BOUND)
    res = sc.run(bound)
    if args.json:
        _emit_json({"name": sc.name, **res.to_json()}, args.json, out)
        return EXIT_OK
    out.write(f"{sc.name}: {sc.title}\n" if sc.title else f"{sc.name}\n")
    chart_p = min(args.chart_width, res.box[0])
    for page in res.pages:
        out.write(f"\n{page.chart(chart_p)}\n")
    out.write(f"\ncollapse page: E_{res.collapse_page}\n")
    out.write(f"E_inf totals (degrees 0..{bound}): {res.totals}\n")
    return EXIT_OK


def cmd_charrings(args, out) -> int:
    if args.action == "list":
        for m in charrings.catalogue().values():
            out.write(m.describe() + "\n")
        return EXIT_OK
    try:
        m = charrings.get_map(args.map)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    try:
        p = m.source.ring.poly(args.poly)
    except PolynomialSyntaxError as exc:
        raise InputError(f"--poly: {exc}") from None
    out.write(f"{m.name}({p}) = {m(p)}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = run_verification(args.max_degree)
    out.write(report.text(timings=args.timings))
    if args.json:
        _emit_json(report.to_json(timings=args.timings), args.json, out)
    return report.exit_code


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gradedq",
        description="Exact graded commutative algebra over Q: Groebner bases, Hilbert "
                    "functions, invariants and multiplicative spectral sequences.")
    sub = ap.add_subparsers(dest="command", required=True)
    json_help = "write JSON to PATH ('-' for stdout)"

    p = sub.add_parser("groebner", help="reduced Groebner basis and LT ideal of an ideal file")
    p.add_argument("file")
    p.add_argument("--order", help="lex | grevlex, optionally lex:m,h,n,t")
    p.add_argument("--json", metavar="PATH", help=json_help)
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("hilbert", help="Hilbert function of R/I")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=DEFAULT_BOUND)
    p.add_argument("--order")
    p.add_argument("--json", metavar="PATH", help=json_help)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("invariants", help="fixed-subspace dims and the fixed-point lemma")
    p.add_argument("ideal")
    p.add_argument("action")
    p.add_argument("--max-degree", type=int, default=DEFAULT_BOUND)
    p.add_argument("--order")
    p.add_argument("--json", metavar="PATH", help=json_help)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("ss", help="run a spectral sequence (built-in name or scenario file)")
    p.add_argument("scenario", help=f"one of {', '.join(scenarios.BUILTIN)} (or A-D), or a file")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--chart-width", type=int, default=12, help="columns shown per page chart")
    p.add_argument("--json", metavar="PATH", help=json_help)
    p.set_defaults(func=cmd_ss)

    p = sub.add_parser("charrings", help="catalogue of characteristic-class ring maps")
    csub = p.add_subparsers(dest="action", required=True)
    csub.add_parser("list")
    pa = csub.add_parser("apply")
    pa.add_argument("--map", required=True)
    pa.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_charrings)

    p = sub.add_parser("verify", help="replay the whole computation as anchored checks")
    p.add_argument("target", choices=["paper"])
    p.add_argument("--max-degree", type=int, default=DEFAULT_BOUND)
    p.add_argument("--json", metavar="PATH", help=json_help)
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock per check (output is then not reproducible)")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except TruncationError as exc:
        err.write(f"refused: {exc}\n")
        return EXIT_TRUNCATION
    except (NonHomogeneousError, UnstableIdealError, ActionError,
            charrings.IllDefinedMapError, SpectralSequenceError, GroebnerError) as exc:
        err.write(f"precondition failed: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
