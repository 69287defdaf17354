"""Command line surface: enumeration streams, polynomial printing, Schur
expansion, bijection traces, and identity verification.

Exit codes: 0 success / verification pass, 1 verification counterexample,
2 usage error.  Partitions are comma-separated parts; the empty partition is
spelled "-".  Output is deterministic: every stream and term order is
canonical.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .bijections import (
    BijectionError,
    _adjacent_swap_info,
    iota,
    jdt_forward,
    order_swap_down,
    order_swap_up,
    rsk_forward,
    swap_path,
)
from .core import (
    Tableau,
    TotalOrder,
    ValidationError,
    parse_letter,
    tableau_from_json,
    tableau_to_json,
)
from .enumeration import EnumBounds, enum_family
from .series import Series, Truncation, refined
from .shapes import ShapeError, SkewShape
from .symfunc import SchurExpansion, expand_schur
from .verify import VERIFIERS


class UsageError(ValueError):
    pass


def parse_partition(s: str) -> tuple[int, ...]:
    s = s.strip()
    if s in ("-", ""):
        return ()
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise UsageError(f"cannot parse partition {s!r}") from None


def format_partition(p: tuple[int, ...]) -> str:
    return ",".join(str(x) for x in p) if p else "-"


def parse_order(s: str) -> TotalOrder:
    try:
        return TotalOrder(tuple(parse_letter(t) for t in s.split(",")))
    except ValueError as exc:
        raise UsageError(f"cannot parse order {s!r}: {exc}") from None


def _read_tableau(path: str) -> Tableau:
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    return tableau_from_json(data)


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


# --- subcommands ---------------------------------------------------------------


def cmd_enum(args) -> int:
    shape = SkewShape(parse_partition(args.outer or args.shape or "-"),
                      parse_partition(args.inner))
    bounds = EnumBounds(args.max, args.budget)
    count = 0
    for t in enum_family(args.family, shape, bounds):
        count += 1
        if args.format == "json":
            _emit(json.dumps(tableau_to_json(t), sort_keys=True))
        else:
            _emit(str(t))
            _emit("")
    if args.format == "json":
        _emit(json.dumps({"count": count}))
    else:
        _emit(f"count: {count}")
    return 0


def _default_truncation(lam, args) -> Truncation:
    width = lam[0] if lam else 0
    n_z = args.nz if args.nz is not None else max(len(lam), width, 1)
    return Truncation(args.nvars, 0, n_z, args.degree)


def _print_series(s: Series, fmt: str) -> None:
    if fmt == "json":
        _emit(json.dumps(s.to_json_obj()))
    elif fmt == "latex":
        _emit(s.to_latex())
    else:
        _emit(s.to_text())


def cmd_poly(args) -> int:
    lam = parse_partition(args.shape)
    s = refined(args.variant, lam, _default_truncation(lam, args),
                z_one=args.z_one)
    _print_series(s, args.format)
    return 0


def _print_expansion(e: SchurExpansion, fmt: str) -> None:
    if fmt == "json":
        _emit(json.dumps(e.to_json_obj(), sort_keys=True))
        return
    if not e.terms:
        _emit("0")
        return
    for p, z in e.terms:
        if fmt == "latex":
            body = ",".join(str(x) for x in p)
            _emit(f"s_{{({body})}}: {z.to_text()}")
        else:
            _emit(f"({format_partition(p)}): {z.to_text()}")


def cmd_expand(args) -> int:
    lam = parse_partition(args.shape)
    s = refined(args.variant, lam, _default_truncation(lam, args),
                z_one=args.z_one)
    _print_expansion(expand_schur(s), args.format)
    return 0


def _tableau_out(t: Tableau, fmt: str):
    return tableau_to_json(t) if fmt == "json" else str(t)


def cmd_biject(args) -> int:
    fmt = args.format
    t = _read_tableau(args.input)
    trace: list[Tableau] = []
    if args.map == "rsk":
        if args.trace:
            pair, trace = rsk_forward(t, trace=True)
        else:
            pair = rsk_forward(t)
        out = {"p": _tableau_out(pair.p, fmt), "q": _tableau_out(pair.q, fmt)}
    elif args.map == "jdt":
        if args.trace:
            pair, trace = jdt_forward(t, trace=True)
        else:
            pair = jdt_forward(t)
        out = {"p": _tableau_out(pair.p, fmt), "q": _tableau_out(pair.q, fmt)}
    elif args.map == "iota":
        img = iota(t)
        trace = [t, img]
        out = {"image": _tableau_out(img, fmt)}
    elif args.map == "reorder":
        if not args.order_from or not args.order_to:
            raise UsageError("reorder needs --order-from and --order-to")
        path = swap_path(parse_order(args.order_from), parse_order(args.order_to))
        trace = [t]
        cur = t
        for a, b in zip(path, path[1:]):
            _, _, up = _adjacent_swap_info(a, b)
            cur = order_swap_up(cur, a, b) if up else order_swap_down(cur, a, b)
            trace.append(cur)
        out = {"image": _tableau_out(cur, fmt)}
    else:  # unreachable: argparse restricts choices
        raise UsageError(f"unknown map {args.map!r}")
    if args.trace:
        out["trace"] = [_tableau_out(x, fmt) for x in trace]
    if fmt == "json":
        _emit(json.dumps(out, sort_keys=True))
    else:
        for key in ("p", "q", "image"):
            if key in out:
                _emit(f"{key}:")
                _emit(out[key])
        if args.trace:
            for k, panel in enumerate(out["trace"]):
                _emit(f"step {k}:")
                _emit(panel)
    return 0


def cmd_verify(args) -> int:
    jobs = args.jobs or int(os.environ.get("GROTHLIB_JOBS", "1"))
    fn = VERIFIERS[args.identity]
    size = args.max_size if args.max_size is not None else args.size
    kwargs = {"jobs": jobs}
    if size is not None:
        if args.identity == "lemma-rskjdt":
            kwargs["max_rsk_size"] = size
            kwargs["max_jdt_size"] = size
        else:
            kwargs["max_size"] = size
    report = fn(**kwargs)
    if args.format == "json":
        _emit(json.dumps(report.to_json_obj(), sort_keys=True))
    else:
        _emit(report.to_text())
    return 0 if report.passed else 1


# --- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grothlib",
        description="tableau enumeration, polynomial expansion, and "
                    "exhaustive identity verification")
    parser.add_argument("--format", choices=("text", "json", "latex"),
                        default="text")
    parser.add_argument("--jobs", type=int, default=None,
                        help="worker processes for verification sweeps "
                             "(default: GROTHLIB_JOBS or 1)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized sweep; sweeps here are "
                             "exhaustive, so this only fixes tie-breaking")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"),
                        default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="stream a tableau family", parents=[common])
    p.add_argument("--family", required=True,
                   choices=("OT", "UT", "PT", "OFT", "UFT", "PFT"))
    p.add_argument("--outer", default=None)
    p.add_argument("--shape", default=None, help="alias for --outer")
    p.add_argument("--inner", default="-")
    p.add_argument("--max", type=int, default=3, help="largest letter value")
    p.add_argument("--budget", type=int, default=0,
                   help="extra entries past one per box (OT only)")
    p.set_defaults(func=cmd_enum)

    for name, fn, extra in (("poly", cmd_poly, "print a polynomial"),
                            ("expand", cmd_expand, "Schur-expand a polynomial")):
        p = sub.add_parser(name, help=extra, parents=[common])
        p.add_argument("--variant", required=True,
                       choices=("1A", "1B", "2A", "2B"))
        p.add_argument("--shape", required=True)
        p.add_argument("--nvars", type=int, required=True)
        p.add_argument("--degree", type=int, default=None,
                       help="total degree bound; required for 1A and 1B")
        p.add_argument("--nz", type=int, default=None)
        p.add_argument("--z-one", action="store_true",
                       help="specialize every z variable to 1")
        p.set_defaults(func=fn)

    p = sub.add_parser("biject", help="apply a bijection with an optional trace",
                       parents=[common])
    p.add_argument("map", choices=("rsk", "jdt", "iota", "reorder"))
    p.add_argument("--input", required=True, help="tableau JSON file, or - for stdin")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--order-from", default=None,
                   help="comma-separated letters, e.g. 1',1,2',2")
    p.add_argument("--order-to", default=None)
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("verify", help="run one exhaustive identity sweep",
                       parents=[common])
    p.add_argument("identity", choices=sorted(VERIFIERS))
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--size", type=int, default=None,
                   help="shorthand for --max-size")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        return args.func(args)
    except (UsageError, ShapeError, ValidationError, BijectionError,
            ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
