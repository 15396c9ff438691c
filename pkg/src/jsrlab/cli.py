"""Command-line front door.

Exit codes: 0 success, 2 argument/domain error, 3 precision exhaustion.
Machine output goes to stdout, diagnostics to stderr.  The default working
precision comes from the JSRLAB_PRECISION environment variable (bits).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__, alphastar, jsr, scurve, verify, words
from .balls import (
    MAX_PREC,
    PrecisionExhausted,
    RealBall,
    ball_decimal_pair,
)
from .words import WordError


@dataclass
class RunConfig:
    precision_bits: int = 128
    max_precision_bits: int = MAX_PREC
    output_format: str = "text"
    threads: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.precision_bits < 8:
            raise ValueError("precision_bits must be >= 8")
        if self.precision_bits > self.max_precision_bits:
            raise ValueError("precision_bits must not exceed max_precision_bits")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.output_format not in ("text", "csv", "json"):
            raise ValueError("output format must be text, csv or json")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def _parse_grid(spec: str) -> list[Fraction]:
    """start:stop:count, rationalized exactly (endpoints included)."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError("grid spec must be start:stop:count")
    start, stop = _parse_fraction(parts[0]), _parse_fraction(parts[1])
    count = int(parts[2])
    if count < 1:
        raise ValueError("grid count must be >= 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + k * step for k in range(count)]


def _target_rad(cfg: RunConfig) -> Fraction:
    return Fraction(1, 2 ** max(cfg.precision_bits // 2, 48))


def _emit(line: str, out) -> None:
    print(line, file=out)


def cmd_alphastar(args, cfg: RunConfig, out) -> int:
    cert = alphastar.alpha_star(args.digits)
    if args.json or cfg.output_format == "json":
        _emit(json.dumps(cert.to_dict()), out)
    else:
        _emit(cert.digits, out)
        print(
            f"N_used={cert.n_used} certified |alpha_N - alpha_*| < 10^{cert.error_exponent}",
            file=sys.stderr,
        )
    return 0


def cmd_tau(args, cfg: RunConfig, out) -> int:
    seq = alphastar.tau(args.n)
    if cfg.output_format == "json":
        _emit(json.dumps({"values": [str(v) for v in seq.values]}), out)
    else:
        for n, value in enumerate(seq.values):
            _emit(f"{n},{value}", out)
    return 0


def cmd_s_eval(args, cfg: RunConfig, out) -> int:
    point = scurve.s_of(
        args.p, args.q, _target_rad(cfg), cfg.precision_bits, cfg.max_precision_bits
    )
    mid, rad = ball_decimal_pair(point.value, digits=max(args.digits, 1))
    if cfg.output_format == "json":
        _emit(
            json.dumps(
                {"gamma": f"{args.p}/{args.q}", "trace": str(point.trace), "s_mid": mid, "s_rad": rad}
            ),
            out,
        )
    else:
        _emit(f"{mid},{rad}", out)
    return 0


def cmd_s_curve(args, cfg: RunConfig, out) -> int:
    rows = scurve.scurve_table(
        args.max_den, _target_rad(cfg), cfg.precision_bits, cfg.max_precision_bits
    )
    _emit("gamma_num,gamma_den,s_mid,s_rad", out)
    for point in rows:
        mid, rad = ball_decimal_pair(point.value, digits=30)
        _emit(f"{point.gamma.numerator},{point.gamma.denominator},{mid},{rad}", out)
    return 0


def cmd_r_curve(args, cfg: RunConfig, out) -> int:
    grid = [a for a in _parse_grid(args.grid) if 0 < a <= 1]
    if not grid:
        raise ValueError("grid contains no alpha values in (0, 1]")
    rows = scurve.rcurve_table(
        grid, args.max_den, _target_rad(cfg), cfg.precision_bits, cfg.max_precision_bits
    )
    _emit("alpha_num,alpha_den,r_num,r_den,bracket_lo,bracket_hi", out)
    for alpha, res in rows:
        lo, hi = res.bracket
        _emit(
            f"{alpha.numerator},{alpha.denominator},"
            f"{res.best.numerator},{res.best.denominator},{lo},{hi}",
            out,
        )
    return 0


def cmd_jsr(args, cfg: RunConfig, out) -> int:
    alpha = _parse_fraction(args.alpha)
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    _emit("n,lower_mid,lower_rad,upper_mid,upper_rad,witness", out)
    for n in range(1, args.n_max + 1):
        low = jsr.lower_bound(
            alpha,
            n,
            balanced_only=args.balanced_only,
            target_rad=_target_rad(cfg),
            start_prec=cfg.precision_bits,
            max_prec=cfg.max_precision_bits,
        )
        up = jsr.upper_bound(
            alpha,
            n,
            target_rad=_target_rad(cfg),
            start_prec=cfg.precision_bits,
            max_prec=cfg.max_precision_bits,
        )
        lo_mid, lo_rad = ball_decimal_pair(low.lower, digits=30)
        up_mid, up_rad = ball_decimal_pair(up, digits=30)
        _emit(f"{n},{lo_mid},{lo_rad},{up_mid},{up_rad},{low.lower_witness}", out)
    return 0


def cmd_word(args, cfg: RunConfig, out) -> int:
    action = args.action

    def say_bool(value: bool) -> int:
        _emit("true" if value else "false", out)
        return 0

    if action == "mechanical":
        p, q = int(args.args[0]), int(args.args[1])
        shift = int(args.args[2]) if len(args.args) > 2 else 0
        _emit(words.mechanical_periodic(p, q, shift), out)
        return 0
    if action == "enumerate":
        p, q = int(args.args[0]), int(args.args[1])
        for w in sorted(words.enumerate_X(p, q)):
            _emit(w, out)
        return 0
    if action == "fibonacci":
        _emit(words.fibonacci_word(int(args.args[0])), out)
        return 0

    if not args.args:
        raise ValueError(f"word {action} needs a word argument")
    u = args.args[0]
    if action == "balanced":
        return say_bool(words.is_balanced(words.check_word(u)))
    if action == "power-balanced":
        return say_bool(words.is_power_balanced(u))
    if action == "ones":
        _emit(str(words.ones_count(u)), out)
        return 0
    if action == "ratio":
        ratio = words.one_ratio(u)
        _emit(f"{ratio.numerator}/{ratio.denominator}", out)
        return 0
    if action == "reverse":
        _emit(words.reverse(u), out)
        return 0
    if action == "palindrome":
        return say_bool(words.is_palindrome(u))
    if action == "triple":
        triple = words.find_suboptimal_triple(words.check_word(u))
        _emit("none" if triple is None else f"{triple.a},{triple.w},{triple.b}", out)
        return 0
    raise ValueError(f"unknown word action {action!r}")


def cmd_verify(args, cfg: RunConfig, out) -> int:
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    results = verify.run_suites(names, seed=cfg.seed)
    failures = 0
    for res in results:
        tag = "PASS" if res.ok else "FAIL"
        _emit(f"{tag}  {res.name}" + (f"  {res.detail}" if res.detail else ""), out)
        failures += 0 if res.ok else 1
    _emit(f"{len(results) - failures}/{len(results)} checks passed", out)
    return 0 if failures == 0 else 1


_GLOBAL_DEFAULTS = {
    "precision_bits": None,  # resolved against the environment at parse time
    "max_precision_bits": MAX_PREC,
    "format": "text",
    "threads": 1,
    "seed": 0,
    "out": None,
}


def _common_options() -> argparse.ArgumentParser:
    """Global flags, accepted both before and after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    sup = argparse.SUPPRESS
    common.add_argument(
        "--precision-bits",
        type=int,
        default=sup,
        help="starting working precision in bits (env JSRLAB_PRECISION, else 128)",
    )
    common.add_argument("--max-precision-bits", type=int, default=sup)
    common.add_argument("--format", choices=("text", "csv", "json"), default=sup)
    common.add_argument("--threads", type=int, default=sup, help="reserved; runs are sequential")
    common.add_argument("--seed", type=int, default=sup, help="seed for randomized suites")
    common.add_argument("--out", type=str, default=sup, help="write output to a file")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="jsrlab",
        description="Certified computations for the pair {A0, alpha*A1}: "
        "balanced words, growth curve, JSR bounds, and the alpha_* digits.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"jsrlab {__version__}")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alphastar", parents=[common], help="digits of alpha_* with certificate")
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_alphastar)

    p = sub.add_parser("tau", parents=[common], help="the trace sequence tau_0..tau_N")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("s-eval", parents=[common], help="enclosure of S(p/q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--digits", type=int, default=40)
    p.set_defaults(func=cmd_s_eval)

    p = sub.add_parser("s-curve", parents=[common], help="CSV of S over a Farey grid")
    p.add_argument("--max-den", type=int, default=60)
    p.set_defaults(func=cmd_s_curve)

    p = sub.add_parser(
        "r-curve", parents=[common], help="CSV of the optimal-1-ratio approximation"
    )
    p.add_argument("--grid", type=str, required=True, help="start:stop:count (exact rationals)")
    p.add_argument("--max-den", type=int, default=80)
    p.set_defaults(func=cmd_r_curve)

    p = sub.add_parser(
        "jsr-bounds", parents=[common], help="certified lower/upper JSR bounds (log scale)"
    )
    p.add_argument("--alpha", type=str, required=True, help="rational alpha in [0,1], e.g. 3/4")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--balanced-only", action="store_true")
    p.set_defaults(func=cmd_jsr)

    p = sub.add_parser("word", parents=[common], help="word utilities")
    p.add_argument(
        "action",
        choices=(
            "balanced",
            "power-balanced",
            "ones",
            "ratio",
            "reverse",
            "palindrome",
            "triple",
            "mechanical",
            "enumerate",
            "fibonacci",
        ),
    )
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    merged = dict(_GLOBAL_DEFAULTS)
    for key in merged:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    if merged["precision_bits"] is None:
        merged["precision_bits"] = int(os.environ.get("JSRLAB_PRECISION", "128"))
    try:
        cfg = RunConfig(
            precision_bits=merged["precision_bits"],
            max_precision_bits=merged["max_precision_bits"],
            output_format=merged["format"],
            threads=merged["threads"],
            seed=merged["seed"],
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = sys.stdout
    handle = None
    if merged["out"]:
        handle = open(merged["out"], "w")
        out = handle
    try:
        return args.func(args, cfg, out)
    except (ValueError, WordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return 3
    finally:
        if handle is not None:
            handle.close()


if __name__ == "__main__":
    sys.exit(main())
