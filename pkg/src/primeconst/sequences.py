"""Integer sequence sources and growth validation.

A sequence a_1, a_2, ... is admissible when every term is an integer >= 2,
terms strictly increase, and each step at most doubles minus one:
a_{n+1} <= 2*a_n - 1.  The primes satisfy this by Bertrand's postulate
(p_{n+1} < 2*p_n, and 2*p_n itself is even hence composite), and so does
anything growing no faster, such as the naturals from 2.  The validator
reports exact violation positions and also
flags the degenerate case where every step beyond the first achieves the
upper bound, which makes the associated constant rational.

Prime generation uses a shared growable sieve so repeated requests do not
re-sieve from scratch.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .exact_arith import ParseError

__all__ = [
    "ExplicitExhausted",
    "PrimeSieve",
    "SequenceKind",
    "SequenceSpec",
    "TooShort",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "load_sequence_file",
    "smallest_nondividing_prime",
    "validate_bertrand",
]


class TooShort(ValueError):
    """Raised when an operation needs at least two terms and got fewer."""


class ExplicitExhausted(ValueError):
    """Raised when more terms are requested than an explicit sequence holds."""


def _sieve_up_to(bound: int) -> list[int]:
    """All primes <= bound by the classic sieve of Eratosthenes."""
    if bound < 2:
        return []
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return [i for i, keep in enumerate(flags) if keep]


class PrimeSieve:
    """Growable prime cache, safe for concurrent readers.

    The sieve re-runs over a doubled bound whenever a request outgrows the
    cache, so a run of increasing requests costs only a constant factor
    more than sieving once at the final size.
    """

    def __init__(self) -> None:
        self._primes: list[int] = []
        self._bound = 0
        self._lock = threading.Lock()

    @staticmethod
    def _bound_for(count: int) -> int:
        # Upper bound for the count-th prime: p_n < n(ln n + ln ln n) for n >= 6.
        if count < 6:
            return 15
        x = float(count)
        return int(x * (math.log(x) + math.log(math.log(x)))) + 10

    def _ensure(self, count: int) -> None:
        if count <= len(self._primes):
            return
        with self._lock:
            while len(self._primes) < count:
                self._bound = max(self._bound_for(count), self._bound * 2, 64)
                self._primes = _sieve_up_to(self._bound)

    def first(self, count: int) -> list[int]:
        """The first `count` primes, in order."""
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        self._ensure(count)
        return self._primes[:count]

    def nth(self, index: int) -> int:
        """The index-th prime, 1-based: nth(1) == 2."""
        if index < 1:
            raise ValueError(f"index must be >= 1, got {index}")
        self._ensure(index)
        return self._primes[index - 1]

    def iter_primes(self):
        """Yield primes indefinitely, growing the cache as needed."""
        k = 1
        while True:
            yield self.nth(k)
            k += 1


_SHARED_SIEVE = PrimeSieve()


class SequenceKind(str, Enum):
    PRIMES = "primes"
    NATURALS = "naturals"
    DOUBLING = "doubling"
    BOUNDARY = "boundary"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class SequenceSpec:
    """A named source of sequence terms.

    Built-in kinds generate terms on demand; the explicit kind wraps a
    finite list and refuses to go past its end.  The boundary kind
    (2^(n-1) + 1: 2, 3, 5, 9, 17, ...) achieves the growth upper bound at
    every step beyond the first, giving a rational limit; it is included
    as a negative control.
    """

    kind: SequenceKind
    explicit_terms: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind is SequenceKind.EXPLICIT:
            if not self.explicit_terms:
                raise ValueError("explicit sequence needs at least one term")
        elif self.explicit_terms is not None:
            raise ValueError(f"{self.kind.value} sequence takes no explicit terms")

    @classmethod
    def primes(cls) -> "SequenceSpec":
        return cls(SequenceKind.PRIMES)

    @classmethod
    def naturals(cls) -> "SequenceSpec":
        """2, 3, 4, 5, ... whose constant is Euler's number e."""
        return cls(SequenceKind.NATURALS)

    @classmethod
    def doubling(cls) -> "SequenceSpec":
        """2^(n-1) + 2: 3, 4, 6, 10, 18, 34, ..."""
        return cls(SequenceKind.DOUBLING)

    @classmethod
    def boundary(cls) -> "SequenceSpec":
        """2^(n-1) + 1: 2, 3, 5, 9, 17, ... (degenerate, rational limit 3)."""
        return cls(SequenceKind.BOUNDARY)

    @classmethod
    def explicit(cls, terms) -> "SequenceSpec":
        return cls(SequenceKind.EXPLICIT, tuple(int(t) for t in terms))

    @classmethod
    def from_name(cls, name: str) -> "SequenceSpec":
        try:
            kind = SequenceKind(name)
        except ValueError:
            raise ValueError(f"unknown sequence name: {name!r}") from None
        if kind is SequenceKind.EXPLICIT:
            raise ValueError("explicit sequences come from a file, not a name")
        return cls(kind)

    @classmethod
    def from_file(cls, path) -> "SequenceSpec":
        return cls.explicit(load_sequence_file(path))

    def term(self, index: int) -> int:
        """The index-th term, 1-based."""
        if index < 1:
            raise ValueError(f"index must be >= 1, got {index}")
        if self.kind is SequenceKind.PRIMES:
            return _SHARED_SIEVE.nth(index)
        if self.kind is SequenceKind.NATURALS:
            return index + 1
        if self.kind is SequenceKind.DOUBLING:
            return 2 ** (index - 1) + 2
        if self.kind is SequenceKind.BOUNDARY:
            return 2 ** (index - 1) + 1
        assert self.explicit_terms is not None
        if index > len(self.explicit_terms):
            raise ExplicitExhausted(
                f"explicit sequence has {len(self.explicit_terms)} terms, "
                f"term {index} requested"
            )
        return self.explicit_terms[index - 1]

    def terms(self, count: int) -> list[int]:
        """The first `count` terms, in order."""
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        if self.kind is SequenceKind.PRIMES:
            return _SHARED_SIEVE.first(count)
        if self.kind is SequenceKind.EXPLICIT:
            assert self.explicit_terms is not None
            if count > len(self.explicit_terms):
                raise ExplicitExhausted(
                    f"explicit sequence has {len(self.explicit_terms)} terms, "
                    f"{count} requested"
                )
            return list(self.explicit_terms[:count])
        return [self.term(k) for k in range(1, count + 1)]

    def label(self) -> str | list[int]:
        """JSON-friendly identity: the kind name, or the inline term list."""
        if self.kind is SequenceKind.EXPLICIT:
            assert self.explicit_terms is not None
            return list(self.explicit_terms)
        return self.kind.value

    def __str__(self) -> str:
        if self.kind is SequenceKind.EXPLICIT:
            assert self.explicit_terms is not None
            preview = ",".join(str(t) for t in self.explicit_terms[:6])
            if len(self.explicit_terms) > 6:
                preview += ",..."
            return f"explicit[{preview}]"
        return self.kind.value


class ViolationKind(str, Enum):
    NOT_INTEGER_GE2 = "NotIntegerGe2"
    NOT_INCREASING = "NotIncreasing"
    UPPER_BOUND_EXCEEDED = "UpperBoundExceeded"


@dataclass(frozen=True)
class Violation:
    """One broken admissibility condition.

    `index` is 1-based.  For a term condition it is the offending term's
    position; for a pair condition it is the position of the left term of
    the offending pair.
    """

    index: int
    kind: ViolationKind

    def describe(self) -> str:
        return f"{self.kind.value} at index {self.index}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a finite prefix for admissibility."""

    terms_checked: int
    pairs_checked: int
    violations: tuple[Violation, ...]
    upper_bound_equalities: tuple[int, ...] = field(default=())
    all_tail_equalities: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "terms_checked": self.terms_checked,
            "pairs_checked": self.pairs_checked,
            "ok": self.ok,
            "violations": [
                {"index": v.index, "kind": v.kind.value} for v in self.violations
            ],
            "upper_bound_equalities": list(self.upper_bound_equalities),
            "all_tail_equalities": self.all_tail_equalities,
        }


def validate_bertrand(terms) -> ValidationReport:
    """Check a finite prefix for admissibility, reporting every violation.

    Conditions, for 1-based positions: each term is an integer >= 2; each
    pair strictly increases; each pair satisfies b <= 2*a - 1.  Pair
    violations carry the left index.  `upper_bound_equalities` lists pair
    indices where b == 2*a - 1 exactly.  `all_tail_equalities` is True when
    every pair at index >= 2 is such an equality (vacuously for a single
    pair); it is only meaningful on a report with no violations, and it
    marks prefixes consistent with the degenerate rational-limit shape.
    """
    terms = list(terms)
    if len(terms) < 2:
        raise TooShort(f"validation needs at least 2 terms, got {len(terms)}")
    violations: list[Violation] = []
    for position, value in enumerate(terms, start=1):
        if not isinstance(value, int) or isinstance(value, bool) or value < 2:
            violations.append(Violation(position, ViolationKind.NOT_INTEGER_GE2))
    equalities: list[int] = []
    tail_all_equal = True
    for position, (a, b) in enumerate(zip(terms, terms[1:]), start=1):
        if not isinstance(a, int) or not isinstance(b, int):
            continue
        if b <= a:
            violations.append(Violation(position, ViolationKind.NOT_INCREASING))
        elif b > 2 * a - 1:
            violations.append(Violation(position, ViolationKind.UPPER_BOUND_EXCEEDED))
        if b == 2 * a - 1:
            equalities.append(position)
        elif position >= 2:
            tail_all_equal = False
    return ValidationReport(
        terms_checked=len(terms),
        pairs_checked=len(terms) - 1,
        violations=tuple(violations),
        upper_bound_equalities=tuple(equalities),
        all_tail_equalities=tail_all_equal,
    )


def smallest_nondividing_prime(value: int) -> int:
    """The smallest prime that does not divide `value` (>= 1).

    Equals 2 for odd values, and exceeds the k-th prime exactly when the
    product of the first k primes divides `value`.
    """
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"value must be a positive integer, got {value!r}")
    for p in _SHARED_SIEVE.iter_primes():
        if value % p:
            return p
    raise AssertionError("unreachable: some prime always fails to divide")


def load_sequence_file(path) -> list[int]:
    """Read one positive integer per line; '#' starts a comment, blanks skipped.

    Raises ParseError with the line number for anything else.
    """
    text = Path(path).read_text(encoding="utf-8")
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            value = int(line)
        except ValueError:
            raise ParseError(f"{path}:{lineno}: not an integer: {line!r}") from None
        if value < 1:
            raise ParseError(f"{path}:{lineno}: not a positive integer: {value}")
        terms.append(value)
    return terms
