"""Independent routes to the primes constant and a digit-packing baseline.

Two cross-checks anchor the series value from outside the series code:

* The smallest prime not dividing n.  Over a block n = 1..M the average of
  this quantity converges to the primes constant, because the smallest
  non-dividing prime exceeds p_k exactly when p_1 * ... * p_k divides n,
  an event of density 1 / (p_1 * ... * p_k).  The exact block average is
  computed here by counting multiples, which agrees term for term with
  the elementwise sum.

* A digit-packing constant: alpha = sum over i of p_i / 10**(2**(i+1))
  stores p_i in the decimal positions just before 2**(i+1), sparsely
  enough that each prime is recovered exactly by two floor operations.
  This is the classic trade of a cheap constant for an expensive decode,
  the opposite of the series constant, where the constant is deep but one
  floor per term suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sequences import PrimeSieve, smallest_nondividing_prime

__all__ = [
    "DistributionRow",
    "NonDivisorDistribution",
    "TermLimitExceeded",
    "alpha_build",
    "alpha_decode",
    "nondivisor_distribution",
    "nondivisor_mean",
]

_ALPHA_TERM_CAP = 12

_sieve = PrimeSieve()


class TermLimitExceeded(ValueError):
    """Raised when an alpha expansion would need astronomically many digits."""


@dataclass(frozen=True)
class DistributionRow:
    """One prime's share of the smallest-non-dividing-prime distribution.

    `probability` is the natural density of {n : the smallest non-dividing
    prime of n is `prime`}, and `contribution` is prime * probability.
    """

    index: int
    prime: int
    probability: Fraction
    contribution: Fraction


@dataclass(frozen=True)
class NonDivisorDistribution:
    """Leading rows of the distribution plus their exact totals.

    `contribution_total` over the first K rows equals the K-th partial sum
    of the defining series of the primes constant, which ties the
    probabilistic route to the series route exactly.
    """

    rows: tuple[DistributionRow, ...]
    probability_total: Fraction
    contribution_total: Fraction


def nondivisor_distribution(rows: int) -> NonDivisorDistribution:
    """Exact distribution rows for the first `rows` primes."""
    if rows < 1:
        raise ValueError(f"rows must be >= 1, got {rows}")
    primes = _sieve.first(rows)
    out: list[DistributionRow] = []
    running_product = 1
    for index, prime in enumerate(primes, start=1):
        probability = Fraction(prime - 1, running_product * prime)
        out.append(
            DistributionRow(
                index=index,
                prime=prime,
                probability=probability,
                contribution=prime * probability,
            )
        )
        running_product *= prime
    return NonDivisorDistribution(
        rows=tuple(out),
        probability_total=sum(r.probability for r in out),
        contribution_total=sum(r.contribution for r in out),
    )


def nondivisor_mean(limit: int) -> Fraction:
    """Exact average of the smallest non-dividing prime over n = 1..limit.

    Counts, for each prime p_k, how many n in the block have p_k as their
    smallest non-dividing prime: the multiples of p_1 * ... * p_{k-1} that
    are not multiples of p_1 * ... * p_k.  This closed form is exactly the
    elementwise average but runs in O(log limit) divisions.
    """
    if not isinstance(limit, int) or isinstance(limit, bool) or limit < 1:
        raise ValueError(f"limit must be a positive integer, got {limit!r}")
    total = 0
    running_product = 1
    k = 0
    while running_product <= limit:
        k += 1
        prime = _sieve.nth(k)
        next_product = running_product * prime
        count = limit // running_product - limit // next_product
        total += prime * count
        running_product = next_product
    return Fraction(total, limit)


def alpha_build(terms: int) -> Fraction:
    """The packing constant for the first `terms` primes.

    alpha(T) = sum_{i=1}^{T} p_i / 10**(2**(i+1)), an exact rational with
    denominator 10**(2**(T+1)).  The denominator doubles in digit count
    with every term, so the count is capped at 12 (about 8000 digits).
    """
    if not isinstance(terms, int) or isinstance(terms, bool) or terms < 1:
        raise ValueError(f"terms must be a positive integer, got {terms!r}")
    if terms > _ALPHA_TERM_CAP:
        raise TermLimitExceeded(
            f"alpha with {terms} terms needs 10**{2 ** (terms + 1)} as a denominator; "
            f"the cap is {_ALPHA_TERM_CAP} terms"
        )
    top_exponent = 2 ** (terms + 1)
    numerator = 0
    for i, prime in enumerate(_sieve.first(terms), start=1):
        numerator += prime * 10 ** (top_exponent - 2 ** (i + 1))
    return Fraction(numerator, 10**top_exponent)


def alpha_decode(alpha: Fraction, index: int) -> int:
    """Recover the index-th packed prime from an alpha value.

    Two floors slice the digit window: floor(alpha * 10**(2**(n+1))) holds
    everything through p_n, and subtracting the shifted previous window
    leaves p_n alone.  Valid for every index up to the term count alpha
    was built with; beyond that the windows are empty and yield 0.
    """
    if not isinstance(alpha, Fraction):
        raise TypeError(f"alpha must be a Fraction, got {type(alpha).__name__}")
    if index < 1:
        raise ValueError(f"index must be >= 1, got {index}")
    wide = 10 ** (2 ** (index + 1))
    narrow = 10 ** (2**index)
    whole_window = alpha.numerator * wide // alpha.denominator
    previous_window = alpha.numerator * narrow // alpha.denominator
    return whole_window - narrow * previous_window
