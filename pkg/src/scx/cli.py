"""``scx`` command line front end.

Exit codes: 0 all checks pass, 1 a check failed (or a state limit was hit),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import witness
from .concat import power_construction, yzs_concat
from .dfa import DEFAULT_STATE_LIMIT, Dfa, DfaError, StateLimitError, enumerate_language, format_word
from .minimize import distinguishing_word, equivalent, minimize


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"3..6"`` -> 3,4,5,6; ``"4"`` -> 4."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected a..b or a single integer") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _read_dfa(path: str) -> Dfa:
    try:
        with open(path) as fh:
            return Dfa.from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except DfaError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text + "\n")
        return
    try:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def _info(msg: str, to_stdout: bool) -> None:
    print(msg, file=sys.stdout if to_stdout else sys.stderr)


# -- verification sweeps ---------------------------------------------------


def _render(reports, fmt: str, timing: bool) -> str:
    if fmt == "csv":
        return "\n".join([witness.CSV_HEADER] + [r.csv_row(timing) for r in reports])
    if fmt == "json":
        return json.dumps([r.to_dict(timing) for r in reports], indent=2)
    head = ("family", "n", "k", "raw", "minimal", "expected", "pass", "ms")
    rows = [
        (r.family, r.n, r.k, r.raw_states, r.minimal_states, r.expected_states,
         "yes" if r.passed else "NO", f"{r.elapsed_ms:.1f}" if timing else "-")
        for r in reports
    ]
    widths = [max(len(str(x)) for x in col) for col in zip(head, *rows)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in [head, *rows]]
    return "\n".join(lines)


def _sweep(cells, fn, args) -> int:
    def one(cell):
        return fn(*cell, state_limit=args.state_limit)

    try:
        if args.parallel:
            with ThreadPoolExecutor() as pool:
                reports = list(pool.map(one, cells))
        else:
            reports = [one(c) for c in cells]
    except (witness.VerificationError, StateLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    timing = args.timing if args.format != "table" else True
    print(_render(reports, args.format, timing))
    return 0 if all(r.passed for r in reports) else 1


def cmd_verify_square(args) -> int:
    if args.n.start < 3:
        raise UsageError("n must be >= 3")
    return _sweep([(n,) for n in args.n], witness.verify_square, args)


def cmd_verify_unary(args) -> int:
    if args.n.start < 2:
        raise UsageError("n must be >= 2")
    if args.k.start < 2:
        raise UsageError("k must be >= 2")
    return _sweep([(n, k) for n in args.n for k in args.k], witness.verify_unary, args)


# -- file commands -----------------------------------------------------------


def cmd_power(args) -> int:
    if args.k < 1:
        raise UsageError("k must be >= 1")
    d = _read_dfa(args.input)
    try:
        result = minimize(power_construction(d, args.k, state_limit=args.state_limit))
    except StateLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(result.to_json(), args.out)
    _info(f"states: {result.num_states}", args.out is not None)
    return 0


def cmd_square(args) -> int:
    d = _read_dfa(args.input)
    try:
        con = yzs_concat(d, d, trim=args.trim, state_limit=args.state_limit)
    except StateLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(con.dfa.to_json(pair_states=[list(p) for p in con.pair_states]), args.out)
    _info(f"states: {con.dfa.num_states}", args.out is not None)
    return 0


def cmd_witness(args) -> int:
    try:
        if args.family == "binary":
            d = witness.binary_witness(args.n)
        else:
            d = witness.unary_cycle_witness(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _write(d.to_json(), args.out)
    return 0


def cmd_min(args) -> int:
    d = _read_dfa(args.input)
    result = minimize(d)
    _write(result.to_json(), args.out)
    _info(f"states: {d.num_states} -> {result.num_states}", args.out is not None)
    return 0


def cmd_equiv(args) -> int:
    a, b = _read_dfa(args.a), _read_dfa(args.b)
    if a.alphabet_size != b.alphabet_size:
        raise UsageError("alphabet sizes differ")
    if equivalent(a, b):
        print("equivalent")
        return 0
    w = distinguishing_word(a, b)
    print(f"different: {format_word(w, a.labels) or 'ε'!s} is accepted by exactly one")
    return 1


def cmd_enum(args) -> int:
    if args.max_len < 0:
        raise UsageError("--max-len must be >= 0")
    d = _read_dfa(args.input)
    for w in enumerate_language(d, args.max_len):
        print(format_word(w, d.labels) or "ε")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scx", description="State complexity of language squares and powers.")
    sub = p.add_subparsers(dest="command", required=True)

    def limits(sp):
        sp.add_argument("--state-limit", type=int, default=DEFAULT_STATE_LIMIT, help="abort constructions beyond this many states")

    def sweep_opts(sp):
        sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
        sp.add_argument("--parallel", action="store_true", help="evaluate cells on worker threads")
        sp.add_argument("--timing", action="store_true", help="fill the ms column in csv/json output")
        limits(sp)

    sp = sub.add_parser("verify-square", help="check the binary square witness for a range of n")
    sp.add_argument("--n", type=parse_range, required=True)
    sweep_opts(sp)
    sp.set_defaults(func=cmd_verify_square)

    sp = sub.add_parser("verify-unary", help="check the unary power witness for ranges of n and k")
    sp.add_argument("--n", type=parse_range, required=True)
    sp.add_argument("--k", type=parse_range, required=True)
    sweep_opts(sp)
    sp.set_defaults(func=cmd_verify_unary)

    sp = sub.add_parser("power", help="minimal DFA for L^k")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--out")
    limits(sp)
    sp.set_defaults(func=cmd_power)

    sp = sub.add_parser("square", help="raw square construction with its pair-state table")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out")
    sp.add_argument("--trim", action="store_true", help="keep only reachable pair states")
    limits(sp)
    sp.set_defaults(func=cmd_square)

    sp = sub.add_parser("witness", help="emit a witness DFA")
    sp.add_argument("family", choices=("binary", "unary"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("min", help="minimize a DFA file")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_min)

    sp = sub.add_parser("equiv", help="exit 0 iff two DFA files accept the same language")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("enum", help="list accepted words up to a length")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--max-len", type=int, default=6)
    sp.set_defaults(func=cmd_enum)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"scx: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
