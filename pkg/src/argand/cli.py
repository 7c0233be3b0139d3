"""Command-line front end.

Single polynomial::

    argand --input quad.json --check --trace steps.jsonl --svg figure.svg

Random ensemble::

    argand --sweep 100 --degree 8 --seed 7
"""

import argparse
import json
import sys
import time

from .descent import StepConfig
from .directed_line import DirectedLine, modulus
from .errors import ArgandError, EmptyPolynomialError, LeadingZeroError, NumericalFailure, ParseError
from .io import RunReport, TraceRecord, digest_bytes, parse_polynomial_text, write_trace
from .oracle import OracleConfig, durand_kerner
from .polynomial import evaluate, residual_scale
from .sampling import make_rng, random_monic
from .solver import SolverConfig, find_all_roots, pair_root_sets
from .svg import emit_svg

__all__ = ["main", "run_solve", "EXIT_OK", "EXIT_USAGE", "EXIT_PARSE", "EXIT_NUMERIC", "EXIT_ORACLE"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NUMERIC = 3
EXIT_ORACLE = 4

#: Under --check, solver and oracle root sets further apart than this fail.
CHECK_TOLERANCE = 1e-4
SWEEP_RADIUS = 2.0

EPILOG = """\
exit status:
  0  success
  1  usage error
  2  input could not be parsed (bad syntax, leading zero, too few coefficients)
  3  numerical failure (stagnation, step budget, shrink failure, oracle did not converge)
  4  --check found solver and oracle roots more than 1e-4 apart
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _start_point(text):
    try:
        re_part, im_part = text.split(",")
        return DirectedLine(float(re_part), float(im_part))
    except (ValueError, ArithmeticError):
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None


def build_parser():
    ap = _Parser(
        prog="argand",
        description="Find all complex roots of a polynomial by minimum-modulus descent.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ap.add_argument("--input", metavar="PATH", help="polynomial file (JSON or text)")
    ap.add_argument("--epsilon", type=float, default=1e-12, help="relative root tolerance")
    ap.add_argument("--max-steps", type=int, default=10000, help="step budget per root")
    ap.add_argument("--start", type=_start_point, default=DirectedLine(0.0, 0.0),
                    metavar="RE,IM", help="start point of every root search")
    ap.add_argument("--check", action="store_true", help="compare against Durand-Kerner")
    ap.add_argument("--trace", metavar="PATH", help="write one JSON record per step")
    ap.add_argument("--svg", metavar="PATH", help="write an SVG figure of the descent")
    ap.add_argument("--svg-iter", type=int, metavar="K",
                    help="trace record drawn as the broken line (default: first general step)")
    ap.add_argument("--output", metavar="PATH", help="report destination (default stdout)")
    ap.add_argument("--sweep", type=int, metavar="N", help="solve N random monic polynomials")
    ap.add_argument("--degree", type=int, metavar="D", help="degree for --sweep")
    ap.add_argument("--seed", type=int, metavar="S", help="generator seed for --sweep")
    return ap


def _validate(args):
    if args.epsilon <= 0 or args.max_steps < 1:
        raise UsageError("--epsilon and --max-steps must be positive")
    if args.sweep is None:
        if args.input is None:
            raise UsageError("--input is required (or use --sweep)")
        if args.degree is not None or args.seed is not None:
            raise UsageError("--degree and --seed only apply to --sweep")
    else:
        if args.input is not None:
            raise UsageError("--input and --sweep are mutually exclusive")
        if args.degree is None or args.seed is None:
            raise UsageError("--sweep needs --degree and --seed")
        if args.sweep < 1 or args.degree < 1 or args.seed < 0:
            raise UsageError("--sweep and --degree must be positive, --seed non-negative")
        if args.trace or args.svg:
            raise UsageError("--trace and --svg are not available with --sweep")
    if args.svg_iter is not None and not args.svg:
        raise UsageError("--svg-iter needs --svg")


def _solver_config(args):
    return SolverConfig(
        root_tolerance=args.epsilon,
        max_steps_per_root=args.max_steps,
        start_point=args.start,
    )


def _config_echo(cfg):
    step = cfg.step_config
    return {
        "root_tolerance": cfg.root_tolerance,
        "max_steps_per_root": cfg.max_steps_per_root,
        "stagnation_window": cfg.stagnation_window,
        "stagnation_ratio": cfg.stagnation_ratio,
        "start_point": [cfg.start_point.re, cfg.start_point.im],
        "initial_fraction": step.initial_fraction,
        "max_halvings": step.max_halvings,
        "zero_threshold": step.zero_threshold,
        "fallback_ratio": step.fallback_ratio,
    }


def compare_with_oracle(p, result):
    """Durand-Kerner roots of ``p`` paired against ``result``."""
    oracle_roots = durand_kerner(p, OracleConfig())
    _, distance = pair_root_sets(list(result.roots), oracle_roots)
    return {
        "max_distance": distance,
        "solver_max_residual": max(result.residuals),
        "oracle_max_residual": max(modulus(evaluate(p, x)) for x in oracle_roots),
    }


def _emit(report, args):
    text = report.to_json()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _single(args):
    try:
        with open(args.input, "rb") as fh:
            raw = fh.read()
        p = parse_polynomial_text(raw.decode("utf-8"))
    except (OSError, UnicodeDecodeError) as exc:
        print(f"argand: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ParseError, LeadingZeroError, EmptyPolynomialError) as exc:
        print(f"argand: {args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE

    cfg = _solver_config(args)
    records = []

    def on_step(root_index, iteration, z, outcome):
        records.append(TraceRecord.from_outcome(root_index, iteration, z, outcome))

    started = time.perf_counter()
    try:
        result = find_all_roots(p, cfg, on_step=on_step)
        comparison = compare_with_oracle(p, result) if args.check else None
    except NumericalFailure as exc:
        print(f"argand: {type(exc).__name__}: {exc}", file=sys.stderr)
        if args.trace:
            write_trace(records, args.trace)
        return EXIT_NUMERIC
    elapsed = time.perf_counter() - started

    if args.trace:
        write_trace(records, args.trace)
    if args.svg:
        if args.svg_iter is not None and not 0 <= args.svg_iter < len(records):
            print(f"argand: --svg-iter {args.svg_iter} outside 0..{len(records) - 1}",
                  file=sys.stderr)
            return EXIT_USAGE
        emit_svg(records, args.svg, args.svg_iter)

    config = _config_echo(cfg)
    config["check"] = bool(args.check)
    report = RunReport(
        input_digest=digest_bytes(raw),
        config=config,
        result=result,
        wall_time=elapsed,
        oracle_comparison=comparison,
    )
    _emit(report, args)
    if comparison is not None and comparison["max_distance"] > CHECK_TOLERANCE:
        return EXIT_ORACLE
    return EXIT_OK


def run_sweep(n, degree, seed, cfg, check=False):
    """Solve ``n`` random monic polynomials; returns ``(summary, digest)``."""
    rng = make_rng(seed)
    polys = [random_monic(rng, degree, SWEEP_RADIUS) for _ in range(n)]
    canonical = json.dumps([[[c.re, c.im] for c in p.coefficients] for p in polys])

    solved = 0
    failures = []
    failure_counts = {}
    total_steps = total_polish = max_steps = 0
    worst_relative = 0.0
    worst_distance = 0.0
    disagreements = 0
    for index, p in enumerate(polys):
        try:
            result = find_all_roots(p, cfg)
            comparison = compare_with_oracle(p, result) if check else None
        except NumericalFailure as exc:
            name = type(exc).__name__
            failure_counts[name] = failure_counts.get(name, 0) + 1
            failures.append({"index": index, "error": name, "message": str(exc)})
            continue
        solved += 1
        total_steps += sum(result.steps_per_root)
        total_polish += sum(result.polish_steps)
        max_steps = max(max_steps, max(result.steps_per_root))
        for root, res in zip(result.roots, result.residuals):
            worst_relative = max(worst_relative, res / residual_scale(p, root))
        if comparison is not None:
            worst_distance = max(worst_distance, comparison["max_distance"])
            if comparison["max_distance"] > CHECK_TOLERANCE:
                disagreements += 1

    roots_found = solved * degree
    summary = {
        "count": n,
        "degree": degree,
        "seed": seed,
        "coefficient_radius": SWEEP_RADIUS,
        "generator": "numpy PCG64",
        "solved": solved,
        "failed": len(failures),
        "failure_counts": failure_counts,
        "failures": failures,
        "total_steps": total_steps,
        "total_polish_steps": total_polish,
        "mean_steps_per_root": total_steps / roots_found if roots_found else 0.0,
        "max_steps_per_root": max_steps,
        "max_relative_residual": worst_relative,
    }
    if check:
        summary["oracle_max_distance"] = worst_distance
        summary["oracle_disagreements"] = disagreements
    return summary, digest_bytes(canonical.encode("utf-8"))


def _sweep(args):
    cfg = _solver_config(args)
    started = time.perf_counter()
    summary, digest = run_sweep(args.sweep, args.degree, args.seed, cfg, args.check)
    config = _config_echo(cfg)
    config["check"] = bool(args.check)
    report = RunReport(
        input_digest=digest,
        config=config,
        sweep=summary,
        wall_time=time.perf_counter() - started,
    )
    _emit(report, args)
    if summary["failed"]:
        return EXIT_NUMERIC
    if args.check and summary["oracle_disagreements"]:
        return EXIT_ORACLE
    return EXIT_OK


def run_solve(argv=None):
    """Run the CLI with ``argv`` and return the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"argand: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _sweep(args) if args.sweep is not None else _single(args)
    except ArgandError as exc:
        print(f"argand: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def main():
    sys.exit(run_solve())


if __name__ == "__main__":
    main()
