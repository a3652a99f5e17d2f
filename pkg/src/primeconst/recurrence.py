"""Recovery of sequence terms from an enclosure via the floor recurrence.

If F_1 encloses a sequence constant, the map

    F_{n+1} = floor(F_n) * (F_n - floor(F_n) + 1)

peels off one term per step: floor(F_n) is exactly a_n whenever the floor
is certified, because the true value f_n of the constant's n-th shift
satisfies a_n < f_n < a_n + 1.  Each step multiplies the interval width by
the extracted term, so a width-w starting enclosure certifies terms until
the accumulated width product reaches 1.  Recovery is therefore always
finite and the stopping reason is part of the result, not an error.

The residual f_n - a_n lies strictly in (0, 1) for every n.  If the
constant were the rational a/b, every residual would be a multiple of 1/b
and hence at least 1/b; so an interval upper bound u on some residual
certifies that any rational representation needs a denominator of at
least floor(1/u).  `residuals` turns a run of certified steps into that
denominator bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constant import enclose
from .exact_arith import Ambiguous, RationalInterval, format_rational
from .sequences import SequenceSpec, validate_bertrand

__all__ = [
    "AmbiguousFloorError",
    "FloorBelowTwo",
    "MismatchDetected",
    "PrecisionExhausted",
    "RecoveryResult",
    "ResidualReport",
    "RoundtripReport",
    "StopReason",
    "recover",
    "recurrence_step",
    "residuals",
    "roundtrip",
]


class AmbiguousFloorError(ValueError):
    """Raised by `recurrence_step` when the floor cannot be certified."""

    def __init__(self, straddled: int) -> None:
        self.straddled = straddled
        super().__init__(f"interval straddles {straddled}; floor not certified")


class FloorBelowTwo(ValueError):
    """Raised when a certified floor is below 2.

    A valid enclosure of an admissible constant can never reach this state,
    so it indicates corrupted input rather than exhausted precision, and it
    is an error even inside `recover`.
    """

    def __init__(self, floor_value: int, step: int) -> None:
        self.floor_value = floor_value
        self.step = step
        super().__init__(
            f"certified floor {floor_value} < 2 at step {step}; "
            "input is not an enclosure of an admissible constant"
        )


class PrecisionExhausted(ValueError):
    """Raised when more certified steps are requested than the enclosure supports."""


class MismatchDetected(RuntimeError):
    """Raised when a recovered term disagrees with the source sequence.

    The mathematics rules this out for certified steps, so it always
    indicates an implementation bug.
    """

    def __init__(self, step: int, recovered: int, expected: int) -> None:
        self.step = step
        self.recovered = recovered
        self.expected = expected
        super().__init__(
            f"step {step}: recovered {recovered} but the sequence says {expected}"
        )


_STOP_KINDS = ("max_terms", "width_exceeds_one", "ambiguous_floor")


@dataclass(frozen=True)
class StopReason:
    """Why recovery stopped.

    kind is one of "max_terms" (the requested count was reached),
    "width_exceeds_one" (the interval can no longer certify any floor),
    or "ambiguous_floor" (the interval straddles `straddled`).  `step` is
    the 1-based step that could not run, None for "max_terms".
    """

    kind: str
    step: int | None = None
    straddled: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _STOP_KINDS:
            raise ValueError(f"unknown stop kind: {self.kind!r}")

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "step": self.step, "straddled": self.straddled}


def recurrence_step(interval: RationalInterval) -> tuple[int, RationalInterval]:
    """One exact step of the floor recurrence.

    Returns (m, image) where m is the certified floor and the image is
    m * (interval - m + 1).  Raises AmbiguousFloorError when no floor is
    certified and FloorBelowTwo when the certified floor is below 2.
    """
    floor_value = interval.floor_unique()
    if isinstance(floor_value, Ambiguous):
        raise AmbiguousFloorError(floor_value.straddled)
    if floor_value < 2:
        raise FloorBelowTwo(floor_value, step=1)
    return floor_value, interval.add_scalar(1 - floor_value).scale_int(floor_value)


@dataclass(frozen=True)
class RecoveryResult:
    """Certified terms from iterating the floor recurrence on an enclosure.

    `intervals[k]` is the interval the k-th floor was taken from, so
    `recovered` and `intervals` always have equal length and the exact
    residual enclosures can be reconstructed after the fact.
    """

    recovered: tuple[int, ...]
    intervals: tuple[RationalInterval, ...]
    stop: StopReason

    @property
    def step_widths(self) -> list[Fraction]:
        """Width of the interval entering each step; grows by the term extracted."""
        return [iv.width for iv in self.intervals]

    @property
    def residual_intervals(self) -> list[RationalInterval]:
        """Enclosures of f_n - a_n for each certified step."""
        return [
            iv.add_scalar(-m) for iv, m in zip(self.intervals, self.recovered)
        ]

    @property
    def min_residual_upper(self) -> Fraction | None:
        uppers = [r.hi for r in self.residual_intervals]
        return min(uppers) if uppers else None

    @property
    def denominator_bound(self) -> int | None:
        """Certified lower bound on the denominator of any rational value.

        A rational constant a/b forces every residual to be >= 1/b, so b
        must be at least 1/u for the smallest certified residual upper
        bound u.  None when no step was certified or u is not positive.
        """
        upper = self.min_residual_upper
        if upper is None or upper <= 0:
            return None
        return upper.denominator // upper.numerator

    def to_json_dict(self) -> dict:
        return {
            "recovered": list(self.recovered),
            "widths": [format_rational(w) for w in self.step_widths],
            "stop": self.stop.to_json_dict(),
            "denominator_bound": self.denominator_bound,
        }


def recover(start: RationalInterval, max_terms: int) -> RecoveryResult:
    """Extract certified terms from `start` until a stopping condition.

    Checks, in order, before each step: the requested count, then whether
    the width already reaches 1 (no floor can ever be certified again),
    then floor certification itself.  Ambiguity is a normal stop; a
    certified floor below 2 raises FloorBelowTwo since it cannot arise
    from a valid enclosure.
    """
    if not isinstance(max_terms, int) or isinstance(max_terms, bool) or max_terms < 0:
        raise ValueError(f"max_terms must be a nonnegative integer, got {max_terms!r}")
    recovered: list[int] = []
    intervals: list[RationalInterval] = []
    current = start
    while True:
        step = len(recovered) + 1
        if len(recovered) >= max_terms:
            stop = StopReason("max_terms")
            break
        if current.width >= 1:
            stop = StopReason("width_exceeds_one", step=step)
            break
        floor_value = current.floor_unique()
        if isinstance(floor_value, Ambiguous):
            stop = StopReason("ambiguous_floor", step=step, straddled=floor_value.straddled)
            break
        if floor_value < 2:
            raise FloorBelowTwo(floor_value, step=step)
        recovered.append(floor_value)
        intervals.append(current)
        current = current.add_scalar(1 - floor_value).scale_int(floor_value)
    return RecoveryResult(tuple(recovered), tuple(intervals), stop)


@dataclass(frozen=True)
class ResidualReport:
    """Residual enclosures and the denominator bound they certify."""

    sequence: SequenceSpec
    terms_used: int
    certified: int
    residual_intervals: tuple[RationalInterval, ...]
    min_upper: Fraction | None
    denominator_bound: int | None

    def to_json_dict(self) -> dict:
        return {
            "sequence": self.sequence.label(),
            "terms_used": self.terms_used,
            "certified": self.certified,
            "count": len(self.residual_intervals),
            "residuals": [list(r.to_pair()) for r in self.residual_intervals],
            "min_upper": None if self.min_upper is None else format_rational(self.min_upper),
            "denominator_bound": self.denominator_bound,
        }


def residuals(spec: SequenceSpec, terms_used: int, count: int | None = None) -> ResidualReport:
    """Certified residual enclosures from a `terms_used`-term enclosure of `spec`.

    `count` selects how many leading residuals to report; the default is
    every step the enclosure certifies.  Asking for more than the run
    certifies raises PrecisionExhausted, since uncertified residuals would
    prove nothing.
    """
    enclosure = enclose(spec, terms_used)
    run = recover(enclosure.interval, max_terms=terms_used)
    certified = len(run.recovered)
    if count is None:
        count = certified
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if count > certified:
        raise PrecisionExhausted(
            f"enclosure from {terms_used} terms certifies only {certified} "
            f"residuals, {count} requested; increase terms_used"
        )
    rows = run.residual_intervals[:count]
    min_upper = min((r.hi for r in rows), default=None)
    if min_upper is None or min_upper <= 0:
        bound = None
    else:
        bound = min_upper.denominator // min_upper.numerator
    return ResidualReport(
        sequence=spec,
        terms_used=terms_used,
        certified=certified,
        residual_intervals=tuple(rows),
        min_upper=min_upper,
        denominator_bound=bound,
    )


@dataclass(frozen=True)
class RoundtripReport:
    """Outcome of enclosing a sequence constant and recovering the terms back."""

    sequence: SequenceSpec
    terms_used: int
    recovered: tuple[int, ...]
    match_length: int
    stop: StopReason
    degenerate_tail: bool

    def to_json_dict(self) -> dict:
        return {
            "sequence": self.sequence.label(),
            "terms_used": self.terms_used,
            "recovered_count": len(self.recovered),
            "match_length": self.match_length,
            "mismatches": 0,
            "stop": self.stop.to_json_dict(),
            "degenerate_tail": self.degenerate_tail,
        }


def roundtrip(spec: SequenceSpec, terms_used: int, max_terms: int | None = None) -> RoundtripReport:
    """Enclose the constant of `spec`, recover terms, and compare exactly.

    Every certified recovered term must equal the corresponding sequence
    term; any disagreement raises MismatchDetected.  `degenerate_tail`
    flags prefixes where every growth step beyond the first hits the
    upper bound, the shape for which recovery necessarily stops at once.
    """
    enclosure = enclose(spec, terms_used)
    run = recover(enclosure.interval, max_terms=terms_used if max_terms is None else max_terms)
    expected = spec.terms(len(run.recovered))
    for step, (got, want) in enumerate(zip(run.recovered, expected), start=1):
        if got != want:
            raise MismatchDetected(step, got, want)
    report = validate_bertrand(spec.terms(terms_used + 1))
    return RoundtripReport(
        sequence=spec,
        terms_used=terms_used,
        recovered=run.recovered,
        match_length=len(run.recovered),
        stop=run.stop,
        degenerate_tail=report.all_tail_equalities,
    )
