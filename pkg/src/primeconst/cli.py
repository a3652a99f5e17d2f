"""Command line interface.

Subcommands mirror the library: `constant` encloses a sequence constant,
`recover` extracts terms from a value or a saved enclosure, `roundtrip`
and `residuals` certify recovery and denominator bounds, `validate`
checks admissibility, `mean` and `alpha` run the independent
cross-checks, and `bench` times large runs.

Exit codes: 0 on success, 2 for invalid input or a failed validation,
1 for an internal error.  All output is deterministic for a given
invocation except `bench` timings, which live under a "timing" key.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .constant import (
    InsufficientTerms,
    ValidationFailed,
    enclose,
    interval_from_enclosure_json,
    plan_terms,
)
from .crosscheck import TermLimitExceeded, alpha_build, alpha_decode, nondivisor_mean
from .exact_arith import (
    NonPositiveInterval,
    ParseError,
    RationalInterval,
    format_rational,
    parse_decimal,
    to_decimal,
)
from .recurrence import (
    AmbiguousFloorError,
    FloorBelowTwo,
    PrecisionExhausted,
    StopReason,
    recover,
    residuals,
    roundtrip,
)
from .sequences import (
    ExplicitExhausted,
    SequenceKind,
    SequenceSpec,
    TooShort,
    validate_bertrand,
)

__all__ = ["build_parser", "main", "run"]

DEFAULT_MAX_TERMS = 1000
DEFAULT_BENCH_SIZES = (1000, 10000, 100000)

_BUILTIN_SEQUENCES = ("primes", "naturals", "doubling", "boundary")


class UsageError(ValueError):
    """A flag combination the parser alone cannot reject."""


_USER_ERRORS = (
    UsageError,
    ParseError,
    NonPositiveInterval,
    TooShort,
    ExplicitExhausted,
    InsufficientTerms,
    ValidationFailed,
    FloorBelowTwo,
    PrecisionExhausted,
    TermLimitExceeded,
    AmbiguousFloorError,
    ValueError,
    OSError,
)


def _add_sequence_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--sequence",
        choices=_BUILTIN_SEQUENCES,
        default=None,
        help="built-in sequence (default: primes)",
    )
    group.add_argument(
        "--sequence-file",
        metavar="PATH",
        default=None,
        help="file with one integer term per line; '#' comments allowed",
    )


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--out", metavar="PATH", default=None, help="write output to a file instead of stdout"
    )


def _resolve_sequence(args: argparse.Namespace) -> SequenceSpec:
    if args.sequence_file is not None:
        return SequenceSpec.from_file(args.sequence_file)
    return SequenceSpec.from_name(args.sequence or "primes")


def _stop_text(stop: StopReason) -> str:
    if stop.kind == "max_terms":
        return "max_terms"
    if stop.kind == "width_exceeds_one":
        return f"width_exceeds_one at step {stop.step}"
    return f"ambiguous_floor at step {stop.step} (straddles {stop.straddled})"


def _decimal_preview(value, max_digits: int = 12) -> str:
    """Truncated decimal of an exact rational, trailing zeros trimmed."""
    digits = to_decimal(RationalInterval(value, value), max_digits)
    text = digits.text
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeconst",
        description="Exact interval enclosures of sequence constants, "
        "term recovery, and irrationality denominator bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constant", help="enclose a sequence constant")
    _add_sequence_flags(p)
    precision = p.add_mutually_exclusive_group(required=True)
    precision.add_argument("--terms", type=int, help="number of series terms to use")
    precision.add_argument(
        "--digits", type=int, help="verified decimal digits to produce (terms are planned)"
    )
    p.add_argument(
        "--max-digits", type=int, default=None, help="cap on printed decimal digits"
    )
    _add_output_flags(p)

    p = sub.add_parser("recover", help="recover sequence terms from a value")
    p.add_argument(
        "--value",
        required=True,
        help="decimal literal (for example 2.920050977316) or path to an enclosure JSON file",
    )
    p.add_argument(
        "--max-terms",
        type=int,
        default=DEFAULT_MAX_TERMS,
        help=f"stop after this many terms (default {DEFAULT_MAX_TERMS})",
    )
    _add_output_flags(p)

    p = sub.add_parser("roundtrip", help="enclose, recover, and compare terms exactly")
    _add_sequence_flags(p)
    p.add_argument("--terms", type=int, required=True, help="series terms for the enclosure")
    p.add_argument(
        "--max-terms", type=int, default=None, help="recovery cap (default: --terms)"
    )
    _add_output_flags(p)

    p = sub.add_parser("residuals", help="certified residuals and denominator bound")
    _add_sequence_flags(p)
    p.add_argument("--terms", type=int, required=True, help="series terms for the enclosure")
    p.add_argument(
        "--count", type=int, default=None, help="residuals to report (default: all certified)"
    )
    _add_output_flags(p)

    p = sub.add_parser("validate", help="check a sequence prefix for admissibility")
    _add_sequence_flags(p)
    p.add_argument(
        "--terms", type=int, default=None, help="prefix length (required for built-ins)"
    )
    _add_output_flags(p)

    p = sub.add_parser("mean", help="average smallest non-dividing prime over a block")
    p.add_argument("--limit", type=int, required=True, help="block is n = 1..limit")
    _add_output_flags(p)

    p = sub.add_parser("alpha", help="digit-packing constant and its decode")
    p.add_argument("--terms", type=int, default=12, help="primes to pack (max 12)")
    _add_output_flags(p)

    p = sub.add_parser("bench", help="time large enclosures")
    p.add_argument(
        "--digits",
        type=int,
        nargs="+",
        default=None,
        help=f"digit sizes to run (default: {' '.join(str(s) for s in DEFAULT_BENCH_SIZES)})",
    )
    _add_output_flags(p)

    return parser


def _cmd_constant(args: argparse.Namespace) -> tuple[str, dict, int]:
    spec = _resolve_sequence(args)
    if args.digits is not None:
        if args.digits < 1:
            raise UsageError("--digits must be >= 1")
        terms_used = plan_terms(spec, args.digits)
        cap = args.max_digits if args.max_digits is not None else args.digits
    else:
        terms_used = args.terms
        cap = args.max_digits
    enclosure = enclose(spec, terms_used, max_digits=cap)
    doc = enclosure.to_json_dict()
    lines = [
        enclosure.digits.text,
        f"sequence: {spec}",
        f"terms_used: {enclosure.terms_used}",
        f"lo: {format_rational(enclosure.interval.lo)}",
        f"hi: {format_rational(enclosure.interval.hi)}",
        f"width: {format_rational(enclosure.interval.width)}",
        f"verified_digits: {enclosure.digits.verified}",
        f"boundary: {str(enclosure.digits.boundary).lower()}",
    ]
    return "\n".join(lines), doc, 0


def _interval_from_value(value: str) -> RationalInterval:
    try:
        return parse_decimal(value)
    except ParseError:
        pass
    path = Path(value)
    if not path.exists():
        raise ParseError(
            f"--value is neither a decimal literal nor an existing file: {value!r}"
        )
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        return interval_from_enclosure_json(doc)
    except (json.JSONDecodeError, ValueError) as exc:
        raise ParseError(f"{value}: not a valid enclosure document: {exc}") from None


def _cmd_recover(args: argparse.Namespace) -> tuple[str, dict, int]:
    interval = _interval_from_value(args.value)
    run = recover(interval, args.max_terms)
    warnings: list[str] = []
    if any(b <= a for a, b in zip(run.recovered, run.recovered[1:])):
        warnings.append(
            "recovered terms do not strictly increase; the input encloses "
            "an integer fixed point or an inadmissible value"
        )
    doc = run.to_json_dict()
    doc["warnings"] = warnings
    recovered_text = " ".join(str(t) for t in run.recovered) or "(none)"
    bound = "none" if run.denominator_bound is None else str(run.denominator_bound)
    lines = [
        f"recovered: {recovered_text}",
        f"count: {len(run.recovered)}",
        f"stop: {_stop_text(run.stop)}",
        f"denominator_bound: {bound}",
    ]
    lines.extend(f"warning: {w}" for w in warnings)
    return "\n".join(lines), doc, 0


def _cmd_roundtrip(args: argparse.Namespace) -> tuple[str, dict, int]:
    spec = _resolve_sequence(args)
    report = roundtrip(spec, args.terms, max_terms=args.max_terms)
    doc = report.to_json_dict()
    lines = [
        f"sequence: {spec}",
        f"terms_used: {report.terms_used}",
        f"recovered_count: {len(report.recovered)}",
        f"match_length: {report.match_length}",
        "mismatches: 0",
        f"stop: {_stop_text(report.stop)}",
        f"degenerate_tail: {str(report.degenerate_tail).lower()}",
    ]
    return "\n".join(lines), doc, 0


def _cmd_residuals(args: argparse.Namespace) -> tuple[str, dict, int]:
    spec = _resolve_sequence(args)
    report = residuals(spec, args.terms, count=args.count)
    doc = report.to_json_dict()
    min_upper = (
        "none" if report.min_upper is None else format_rational(report.min_upper)
    )
    lines = [
        f"sequence: {spec}",
        f"terms_used: {report.terms_used}",
        f"certified: {report.certified}",
        f"count: {len(report.residual_intervals)}",
        f"min_upper: {min_upper}",
        f"denominator_bound: {report.denominator_bound}",
    ]
    for step, residual in enumerate(report.residual_intervals, start=1):
        lines.append(f"residual {step}: {residual!r}")
    return "\n".join(lines), doc, 0


def _cmd_validate(args: argparse.Namespace) -> tuple[str, dict, int]:
    spec = _resolve_sequence(args)
    if spec.kind is SequenceKind.EXPLICIT:
        terms = list(spec.explicit_terms or ())
        if args.terms is not None:
            terms = spec.terms(args.terms)
    else:
        if args.terms is None:
            raise UsageError("--terms is required with a built-in sequence")
        terms = spec.terms(args.terms)
    report = validate_bertrand(terms)
    doc = {"sequence": spec.label(), **report.to_json_dict()}
    lines = [
        f"ok: {str(report.ok).lower()}",
        f"sequence: {spec}",
        f"terms_checked: {report.terms_checked}",
        f"pairs_checked: {report.pairs_checked}",
    ]
    for violation in report.violations:
        lines.append(f"violation: {violation.describe()}")
    equalities = " ".join(str(i) for i in report.upper_bound_equalities) or "(none)"
    lines.append(f"upper_bound_equalities: {equalities}")
    lines.append(f"all_tail_equalities: {str(report.all_tail_equalities).lower()}")
    return "\n".join(lines), doc, 0 if report.ok else 2


def _cmd_mean(args: argparse.Namespace) -> tuple[str, dict, int]:
    value = nondivisor_mean(args.limit)
    preview = _decimal_preview(value)
    doc = {
        "limit": args.limit,
        "mean": format_rational(value),
        "decimal": preview,
    }
    lines = [
        f"mean: {format_rational(value)}",
        f"decimal: {preview}",
        f"limit: {args.limit}",
    ]
    return "\n".join(lines), doc, 0


def _cmd_alpha(args: argparse.Namespace) -> tuple[str, dict, int]:
    alpha = alpha_build(args.terms)
    decoded = [alpha_decode(alpha, i) for i in range(1, args.terms + 1)]
    expected = SequenceSpec.primes().terms(args.terms)
    matches = decoded == expected
    digits = to_decimal(
        RationalInterval(alpha, alpha), max_digits=2 ** (args.terms + 1)
    ).text
    doc = {
        "terms": args.terms,
        "alpha": format_rational(alpha),
        "digits": digits,
        "decoded": decoded,
        "matches_primes": matches,
    }
    lines = [
        f"alpha: {digits}",
        f"terms: {args.terms}",
        f"decoded: {' '.join(str(d) for d in decoded)}",
        f"matches_primes: {str(matches).lower()}",
    ]
    return "\n".join(lines), doc, 0 if matches else 1


def _cmd_bench(args: argparse.Namespace) -> tuple[str, dict, int]:
    sizes = args.digits if args.digits else list(DEFAULT_BENCH_SIZES)
    spec = SequenceSpec.primes()
    results = []
    timings: dict[str, float] = {}
    lines = []
    for size in sizes:
        started = time.perf_counter()
        terms_used = plan_terms(spec, size)
        enclosure = enclose(spec, terms_used, max_digits=size)
        elapsed = time.perf_counter() - started
        product_digits = len(str(enclosure.product))
        results.append(
            {
                "digits_requested": size,
                "terms_used": terms_used,
                "verified_digits": enclosure.digits.verified,
                "product_decimal_digits": product_digits,
            }
        )
        timings[str(size)] = elapsed
        lines.append(
            f"digits={size} terms={terms_used} verified={enclosure.digits.verified} "
            f"product_digits={product_digits} time={elapsed:.3f}s"
        )
    doc = {"sequence": "primes", "results": results, "timing": {"seconds": timings}}
    return "\n".join(lines), doc, 0


_HANDLERS = {
    "constant": _cmd_constant,
    "recover": _cmd_recover,
    "roundtrip": _cmd_roundtrip,
    "residuals": _cmd_residuals,
    "validate": _cmd_validate,
    "mean": _cmd_mean,
    "alpha": _cmd_alpha,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        text, doc, code = handler(args)
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    payload = json.dumps(doc, indent=2) if args.format == "json" else text
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload)
    return code


def run() -> None:
    """Console script entry point."""
    raise SystemExit(main())
