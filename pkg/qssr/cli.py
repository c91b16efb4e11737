"""
Command-line front end.

Exit codes: 0 on success, 2 when an input fails validation (or an expected
property does not hold), 1 on an internal error and 64 on a usage error.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, Optional, Sequence
from pydantic import ValidationError
from qssr import __version__
from qssr.bench.experiment import BenchConfig, log_spaced_shots, run_experiment, run_shots_sweep, write_csv
from qssr.builder.build import build, build_mixed_representation
from qssr.builder.modes import SymmetryMode
from qssr.builder.presets import PRESETS
from qssr.config import DEFAULT_SEED, DEFAULT_TOLERANCES
from qssr.dimensions import DimReport, free_parameter_count, manifold_dimension, render_table, table
from qssr.errors import ArgumentError, QssrError
from qssr.serialization import load, load_matrix, load_representations, load_state, save
from qssr.shape import SystemShape
from qssr.states import PureState
from qssr.utils.logging import logger
from qssr.verification.certification import certify_qssr
from qssr.verification.sqs import is_sqs_mixed, is_sqs_pure

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _provenance(argv: Sequence[str], seeds: Dict[str, Any]) -> Dict[str, Any]:
    return {"tool": "qssr", "version": __version__, "argv": list(argv), "seeds": seeds}


def _signs(text: str) -> list[int]:
    signs = []
    for token in text.split(","):
        token = token.strip()
        if token not in ("+", "-"):
            raise ArgumentError(f"signs must be a comma-separated list of + and -, got {text!r}")
        signs.append(1 if token == "+" else -1)
    return signs


def _mixed_counts(text: str) -> tuple[int, int]:
    try:
        sym, asym = (int(part) for part in text.split(":"))
    except ValueError:
        raise ArgumentError(f"--mixed expects S:A, got {text!r}")
    return sym, asym


def _shots_sweep(text: str) -> list[int]:
    try:
        lo, hi, steps = (int(float(part)) for part in text.split(":"))
    except ValueError:
        raise ArgumentError(f"--shots-sweep expects lo:hi:steps, got {text!r}")
    return log_spaced_shots(lo, hi, steps)


def cmd_table(args: argparse.Namespace, argv: Sequence[str]) -> int:
    print(render_table(table(args.n_max, args.N_max), args.format), end="")
    return EXIT_OK


def cmd_dims(args: argparse.Namespace, argv: Sequence[str]) -> int:
    report: Dict[str, Any] = DimReport.of(args.n, args.N).model_dump()
    if args.M is not None:
        sym_count = args.M if args.sym_count is None else args.sym_count
        report["M"] = args.M
        report["sym_count"] = sym_count
        report["free_parameters"] = free_parameter_count(args.n, args.N, args.M)
        report["manifold_dimension"] = manifold_dimension(args.n, args.N, args.M, sym_count)
    elif args.sym_count is not None:
        raise ArgumentError("--sym-count needs --M")
    if args.json:
        print(json.dumps(report))
    else:
        for key, value in report.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_build(args: argparse.Namespace, argv: Sequence[str]) -> int:
    seeds: Dict[str, Any] = {}
    if args.preset is not None:
        channel = PRESETS[args.preset]()
    else:
        if args.n is None or args.N is None or args.M is None:
            raise ArgumentError("build needs --n, --N and --M unless --preset is given")
        shape = SystemShape.of(args.n, args.N, args.M)
        seed_unitary: Any = "identity"
        if args.seed_unitary is not None:
            seed_unitary = load_matrix(args.seed_unitary)
            seeds["seed_unitary_file"] = args.seed_unitary
        elif args.random_seed is not None:
            seed_unitary = f"random({args.random_seed})"
            seeds["random_seed"] = args.random_seed
        if args.reps is not None:
            if args.mixed is not None:
                raise ArgumentError("--reps cannot be combined with --mixed")
            reps = load_representations(args.reps)
            signs = _signs(args.signs) if args.signs else [-1 if args.antisym else 1] * args.M
            channel = build_mixed_representation(shape, reps, signs, seed_unitary,
                                                 require_qssr=not args.allow_non_qssr)
        else:
            if args.mixed is not None:
                mode = SymmetryMode.mixed(*_mixed_counts(args.mixed))
            elif args.antisym:
                mode = SymmetryMode.antisymmetric()
            else:
                mode = SymmetryMode.symmetric()
            channel = build(shape, mode, seed_unitary)
    channel.metadata["provenance"] = _provenance(argv, seeds)
    save(channel, args.out)
    print(f"wrote {channel.shape.ancilla_dim} Kraus operators for {channel.shape} to {args.out}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, argv: Sequence[str]) -> int:
    if args.seed < 0:
        raise ArgumentError(f"--seed must be non-negative, got {args.seed}")
    status = EXIT_OK
    results: Dict[str, Any] = {}
    channel = load(args.channel) if args.channel is not None else None
    if channel is not None and args.state is None:
        verdict = certify_qssr(channel, samples=args.samples, tol=args.tol, seed=args.seed,
                               exact=args.exact, workers=args.workers)
        results["qssr"] = verdict.to_dict()
        if not args.json:
            print(verdict)
        if args.expect_qssr and not verdict.is_qssr:
            status = EXIT_VALIDATION
    if args.state is not None:
        state, shape = load_state(args.state)
        if channel is not None:
            state = channel.apply(state)
        if isinstance(state, PureState):
            sqs = is_sqs_pure(state, shape, args.tol)
        else:
            sqs = is_sqs_mixed(state, shape, args.tol)
        results["sqs"] = sqs.to_dict()
        if not args.json:
            print(sqs)
        if args.expect_sqs and not sqs.is_sqs:
            status = EXIT_VALIDATION
    if args.json:
        results["provenance"] = _provenance(argv, {"seed": args.seed})
        print(json.dumps(results))
    return status


def cmd_bench(args: argparse.Namespace, argv: Sequence[str]) -> int:
    channel = load(args.channel)
    config = BenchConfig(states=args.states, shots=args.shots, seed=args.seed,
                         exact=args.exact, workers=args.workers)
    provenance = _provenance(argv, {"seed": args.seed})
    if args.shots_sweep is not None:
        sweep = run_shots_sweep(channel, _shots_sweep(args.shots_sweep), config)
        for summary in sweep.summaries:
            print(f"shots={summary.config.shots} {summary.summary_line()} "
                  f"median_A_final={summary.median_a_final!r}")
        print(f"slope={sweep.slope!r}")
        reports = [r for summary in sweep.summaries for r in summary.reports]
    else:
        summary = run_experiment(channel, config)
        print(summary.summary_line())
        reports = summary.reports
    if args.out is not None:
        write_csv(reports, args.out, provenance)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qssr", description="Build, verify and benchmark quantum-state synchronizers.")
    parser.add_argument("--version", action="version", version=f"qssr {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("table", help="minimal ancilla dimension for symmetric synchronizers")
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--N-max", type=int, default=4)
    p.add_argument("--format", choices=["pretty", "csv"], default="pretty")
    p.set_defaults(handler=cmd_table)

    p = commands.add_parser("dims", help="subspace dimensions and parameter counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--M", type=int)
    p.add_argument("--sym-count", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_dims)

    p = commands.add_parser("build", help="construct a synchronizer and write it as JSON")
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--M", type=int)
    symmetry = p.add_mutually_exclusive_group()
    symmetry.add_argument("--sym", action="store_true", help="symmetric columns (default)")
    symmetry.add_argument("--antisym", action="store_true", help="antisymmetric columns")
    symmetry.add_argument("--mixed", metavar="S:A", help="S symmetric and A antisymmetric Kraus operators")
    symmetry.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--reps", metavar="FILE", help="one exchange representation per Kraus operator (n = 2)")
    p.add_argument("--signs", help="exchange signs per Kraus operator, e.g. +,-")
    seed = p.add_mutually_exclusive_group()
    seed.add_argument("--seed-unitary", metavar="FILE")
    seed.add_argument("--random-seed", type=int)
    p.add_argument("--allow-non-qssr", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=cmd_build)

    p = commands.add_parser("verify", help="certify a channel or a state")
    p.add_argument("channel", nargs="?")
    p.add_argument("--state", metavar="FILE")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCES.certify)
    p.add_argument("--exact", action="store_true", help="also run the exact linear certificate")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect-qssr", action="store_true")
    p.add_argument("--expect-sqs", action="store_true")
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser("bench", help="asynchronicity under shot noise")
    p.add_argument("channel")
    p.add_argument("--states", type=int, default=77)
    p.add_argument("--shots", type=int, default=204800)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--shots-sweep", metavar="LO:HI:STEPS")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_bench)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.command == "verify" and args.channel is None and args.state is None:
        parser.print_usage(sys.stderr)
        print("qssr: error: verify needs a channel file or --state", file=sys.stderr)
        return EXIT_USAGE
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    logger.setLevel(level)
    try:
        return args.handler(args, argv)
    except (QssrError, ValidationError) as e:
        print(f"qssr: error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as e:
        logger.exception("internal error")
        print(f"qssr: internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
