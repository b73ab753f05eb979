"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 bad input (unreadable or malformed
automaton files, invalid generator parameters).
"""

from __future__ import annotations

import argparse
import sys

from .automata import (
    AutomatonError,
    Dfa,
    INFINITE,
    Nfa,
    complete_and_trim,
    determinize,
    diff_count,
    kernel_preamble,
    minimize,
)
from .almost_equiv import compute_almost_equivalence
from .error_model import ErrorMatrix, comp_access
from .hypermin import merge_states_naive, opt_merge
from .ioformat import parse_automaton, serialize_automaton
from .randgen import RandomModelParams, generate_nfa
from .experiment import ExperimentGrid, default_cyclicities, default_densities, run_experiment, to_csv


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_automaton(path: str) -> Nfa | Dfa:
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read())


def _as_minimal_dfa(a: Nfa | Dfa) -> Dfa:
    if isinstance(a, Nfa):
        a = determinize(a)
    return minimize(complete_and_trim(a))


def _write_out(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_minimize(args) -> int:
    d = _as_minimal_dfa(_read_automaton(args.input))
    _write_out(serialize_automaton(d), args.output)
    return 0


def _cmd_blocks(args) -> int:
    d = _as_minimal_dfa(_read_automaton(args.input))
    part = compute_almost_equivalence(d, kernel_preamble(d))
    for block in part.blocks:
        print(" ".join(str(q) for q in block))
    return 0


def _cmd_hyperminimize(args) -> int:
    d = _as_minimal_dfa(_read_automaton(args.input))
    k = kernel_preamble(d)
    part = compute_almost_equivalence(d, k)
    if args.strategy == "naive":
        out = merge_states_naive(d, part, k)
        errors = diff_count(d, out)
        assert errors != INFINITE
        errors = int(errors)
    else:
        report = opt_merge(d, part, k, ErrorMatrix(d, part), comp_access(d, k))
        out, errors = report.output, report.errors
    if args.output is not None:
        _write_out(serialize_automaton(out), args.output)
    print(f"{d.state_count} {out.state_count} {errors}")
    return 0


def _cmd_errors(args) -> int:
    def load(path):
        a = _read_automaton(path)
        if isinstance(a, Nfa):
            a = determinize(a)
        return complete_and_trim(a)

    c = diff_count(load(args.first), load(args.second))
    print("inf" if c == INFINITE else str(int(c)))
    return 0


def _cmd_gen(args) -> int:
    params = RandomModelParams(
        state_count=args.states,
        alphabet_size=args.alphabet,
        d_delta=args.d_delta,
        d_f=args.d_f,
        cyclicity=args.cyclicity,
        seed=args.seed,
    )
    _write_out(serialize_automaton(generate_nfa(params)), args.output)
    return 0


def _cmd_inspect(args) -> int:
    d = _as_minimal_dfa(_read_automaton(args.input))
    k = kernel_preamble(d)
    part = compute_almost_equivalence(d, k)
    w = comp_access(d, k)
    for q in sorted(k.preamble):
        print(f"w {q} {w.count(q)}")
    if args.pair:
        e = ErrorMatrix(d, part)
        for spec in args.pair:
            try:
                q, p = (int(x) for x in spec.split(","))
            except ValueError:
                raise AutomatonError(f"bad pair {spec!r}, expected 'q,p'") from None
            print(f"E {q} {p} {e.entry(q, p)}")
    return 0


def _cmd_experiment(args) -> int:
    grid = ExperimentGrid(
        densities=tuple(args.densities) if args.densities else default_densities(),
        cyclicities=tuple(args.cyclicities) if args.cyclicities else default_cyclicities(),
        instances=args.instances,
        state_count=args.states,
        alphabet_size=args.alphabet,
        base_seed=args.seed,
    )
    rows = run_experiment(grid)
    _write_out(to_csv(rows), args.output)
    if args.plots is not None:
        from .plots import render_figures

        for path in render_figures(rows, args.plots):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperdfa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minimize", help="determinize/complete/trim/minimize an automaton")
    p.add_argument("input")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("blocks", help="print the almost-equivalence blocks of the minimal DFA")
    p.add_argument("input")
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("hyperminimize", help="hyper-minimize; prints 'before after errors'")
    p.add_argument("input")
    p.add_argument("--strategy", choices=("naive", "optimal"), default="optimal")
    p.add_argument("-o", "--output", default=None, help="write the result automaton here")
    p.set_defaults(func=_cmd_hyperminimize)

    p = sub.add_parser("errors", help="exact |L(A) symdiff L(B)| of two automaton files")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_errors)

    p = sub.add_parser("gen", help="generate a random NFA")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--d-delta", type=float, required=True)
    p.add_argument("--d-f", type=float, required=True)
    p.add_argument("--cyclicity", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("inspect", help="print access counts and requested error entries")
    p.add_argument("input")
    p.add_argument("--pair", action="append", metavar="Q,P",
                   help="error table entry to print (repeatable)")
    p.set_defaults(func=_cmd_inspect)

    p = sub.add_parser("experiment", help="run the density/cyclicity sweep, emit CSV")
    p.add_argument("--densities", type=float, nargs="+", default=None)
    p.add_argument("--cyclicities", type=float, nargs="+", default=None)
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--states", type=int, default=30)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--plots", default=None, metavar="DIR",
                   help="also render heatmap PNGs into DIR")
    p.set_defaults(func=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        return args.func(args)
    except (OSError, AutomatonError) as exc:
        print(f"hyperdfa: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
