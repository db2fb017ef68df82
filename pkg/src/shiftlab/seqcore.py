"""Eventually periodic two-sided sequences and their window-product rates.

Everything the classifier decides reduces to the asymptotics of products
``v_k * v_{k+1} * ...`` over long windows of a positive two-sided sequence
that is exactly periodic far enough to the left and right of a finite core
table.  This module holds that presentation, exact evaluation of the
quantified window-product limits, and their finite-horizon counterparts.

Values are kept as exact fractions with a sequence-level real exponent, so
the comparisons that decide a classification (tail geometric mean against 1)
can be made exactly for rational input and with an explicit tolerance
otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

ScalarLike = Union[int, float, str, Fraction]

# Resolution of rate-vs-1 decisions when any input value was a float.
REL_LOG_TOL = 1e-9


class SequenceError(ValueError):
    """A sequence presentation violates its constraints."""


def _coerce(value: ScalarLike) -> tuple[Fraction, bool]:
    # bool is an int subclass; reject it before the int branch.
    if isinstance(value, bool):
        raise SequenceError("sequence values must be numbers, not bool")
    if isinstance(value, Fraction):
        frac, exact = value, True
    elif isinstance(value, int):
        frac, exact = Fraction(value), True
    elif isinstance(value, str):
        try:
            frac = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise SequenceError(f"cannot parse sequence value {value!r}") from err
        exact = True
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise SequenceError(f"sequence values must be finite, got {value!r}")
        frac, exact = Fraction(value), False
    else:
        raise SequenceError(f"unsupported sequence value type {type(value).__name__}")
    if frac <= 0:
        raise SequenceError(f"sequence values must be positive, got {value!r}")
    return frac, exact


def _log_fraction(frac: Fraction) -> float:
    # Safe for fractions whose numerator or denominator exceeds float range.
    return math.log(frac.numerator) - math.log(frac.denominator)


@dataclass(frozen=True)
class EventuallyPeriodicSequence:
    """Two-sided positive sequence, periodic outside a finite core.

    The core table covers indices ``core_lo .. core_lo + len(core) - 1``.
    To the right the values repeat ``pos_period`` forever; to the left they
    repeat ``neg_period``, read right to left, so ``neg_period[-1]`` is the
    value immediately before the core, ``neg_period[-2]`` the one before
    that, and so on wrapping around.

    The value at index k is ``base_at(k) ** exp``.  ``exact`` records
    whether every base was given in exact form; it controls how tail
    geometric means are compared against 1.
    """

    core_lo: int
    core: tuple[Fraction, ...]
    neg_period: tuple[Fraction, ...]
    pos_period: tuple[Fraction, ...]
    exp: float = 1.0
    exact: bool = True

    def __post_init__(self) -> None:
        if not self.core:
            raise SequenceError("core table must be nonempty")
        if not self.neg_period or not self.pos_period:
            raise SequenceError("both periodic tails must be nonempty")
        for part in (self.core, self.neg_period, self.pos_period):
            for frac in part:
                if not isinstance(frac, Fraction) or frac <= 0:
                    raise SequenceError("sequence bases must be positive fractions")
        if not math.isfinite(self.exp):
            raise SequenceError("sequence exponent must be finite")
        object.__setattr__(self, "_core_logs", tuple(_log_fraction(f) for f in self.core))
        object.__setattr__(self, "_neg_logs", tuple(_log_fraction(f) for f in self.neg_period))
        object.__setattr__(self, "_pos_logs", tuple(_log_fraction(f) for f in self.pos_period))

    @classmethod
    def from_values(
        cls,
        core_lo: int,
        core: Sequence[ScalarLike],
        neg_period: Sequence[ScalarLike],
        pos_period: Sequence[ScalarLike],
    ) -> "EventuallyPeriodicSequence":
        exact = True
        parts = []
        for raw in (core, neg_period, pos_period):
            fracs = []
            for value in raw:
                frac, is_exact = _coerce(value)
                exact = exact and is_exact
                fracs.append(frac)
            parts.append(tuple(fracs))
        return cls(core_lo, parts[0], parts[1], parts[2], 1.0, exact)

    @classmethod
    def constant(cls, value: ScalarLike) -> "EventuallyPeriodicSequence":
        return cls.from_values(0, [value], [value], [value])

    @property
    def core_hi(self) -> int:
        return self.core_lo + len(self.core) - 1

    def base_at(self, k: int) -> Fraction:
        if k < self.core_lo:
            steps_left = self.core_lo - 1 - k
            return self.neg_period[len(self.neg_period) - 1 - steps_left % len(self.neg_period)]
        if k > self.core_hi:
            return self.pos_period[(k - self.core_hi - 1) % len(self.pos_period)]
        return self.core[k - self.core_lo]

    def log_at(self, k: int) -> float:
        if k < self.core_lo:
            steps_left = self.core_lo - 1 - k
            raw = self._neg_logs[len(self._neg_logs) - 1 - steps_left % len(self._neg_logs)]
        elif k > self.core_hi:
            raw = self._pos_logs[(k - self.core_hi - 1) % len(self._pos_logs)]
        else:
            raw = self._core_logs[k - self.core_lo]
        return self.exp * raw

    def value_at(self, k: int) -> float:
        return math.exp(self.log_at(k))

    def value_fraction(self, k: int) -> Fraction | None:
        """Exact value at k, when the exponent allows one (else None)."""
        if float(self.exp).is_integer():
            return self.base_at(k) ** int(self.exp)
        return None

    def elementwise_pow(self, power: float) -> "EventuallyPeriodicSequence":
        if power == 0 or not math.isfinite(power):
            raise SequenceError("power must be finite and nonzero")
        return EventuallyPeriodicSequence(
            self.core_lo, self.core, self.neg_period, self.pos_period,
            self.exp * power, self.exact,
        )

    def shifted(self, offset: int) -> "EventuallyPeriodicSequence":
        """Sequence u with u_k = v_{k - offset}."""
        return EventuallyPeriodicSequence(
            self.core_lo + offset, self.core, self.neg_period, self.pos_period,
            self.exp, self.exact,
        )

    def sup_value(self) -> float:
        return math.exp(max(self.exp * raw for raw in
                            self._core_logs + self._neg_logs + self._pos_logs))

    def inf_value(self) -> float:
        return math.exp(min(self.exp * raw for raw in
                            self._core_logs + self._neg_logs + self._pos_logs))


def window_log(seq: EventuallyPeriodicSequence, k: int, n: int) -> float:
    """Log of the product of v_k .. v_{k+n} (n + 1 factors)."""
    if n < 0:
        raise SequenceError("window gap must be nonnegative")
    return sum(seq.log_at(j) for j in range(k, k + n + 1))


def window_product(seq: EventuallyPeriodicSequence, k: int, n: int) -> float:
    return math.exp(window_log(seq, k, n))


class Quantifier(Enum):
    SUP_ALL = "sup_all_k"
    INF_ALL = "inf_all_k"
    SUP_NEG = "sup_k_in_negatives"
    INF_NAT = "inf_k_in_naturals"

    @property
    def is_sup(self) -> bool:
        return self in (Quantifier.SUP_ALL, Quantifier.SUP_NEG)


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class SideRate:
    """Geometric means of the two periodic tails."""

    gm_neg: float
    gm_pos: float

    @property
    def min(self) -> float:
        return min(self.gm_neg, self.gm_pos)

    @property
    def max(self) -> float:
        return max(self.gm_neg, self.gm_pos)


def _tail_log_mean(seq: EventuallyPeriodicSequence, logs: tuple[float, ...]) -> float:
    return seq.exp * sum(logs) / len(logs)


def side_geometric_means(seq: EventuallyPeriodicSequence) -> SideRate:
    return SideRate(
        gm_neg=math.exp(_tail_log_mean(seq, seq._neg_logs)),
        gm_pos=math.exp(_tail_log_mean(seq, seq._pos_logs)),
    )


def tail_sign_vs_one(seq: EventuallyPeriodicSequence, side: str) -> int:
    """Trichotomy of a tail geometric mean against 1: -1, 0 or +1.

    Exact presentations compare the rational period product against 1
    exactly; float-tainted presentations fall back to a log tolerance of
    REL_LOG_TOL per period entry.
    """
    if side == "neg":
        period = seq.neg_period
    elif side == "pos":
        period = seq.pos_period
    else:
        raise SequenceError(f"side must be 'neg' or 'pos', got {side!r}")
    if seq.exact:
        product = Fraction(1)
        for frac in period:
            product *= frac
        if product == 1:
            return 0
        raw_sign = 1 if product > 1 else -1
    else:
        log_sum = sum(_log_fraction(f) for f in period)
        if abs(log_sum) <= len(period) * REL_LOG_TOL:
            return 0
        raw_sign = 1 if log_sum > 0 else -1
    if seq.exp == 0:
        return 0
    return raw_sign if seq.exp > 0 else -raw_sign


def rate_exact(
    seq: EventuallyPeriodicSequence,
    quantifier: Quantifier,
    direction: Direction,
) -> float:
    """Closed-form limit of the quantified window-product rate.

    Matched one-sided pairs see a single tail: anchors in the negatives
    with backward windows give the negative-tail mean, anchors in the
    naturals with forward windows give the positive-tail mean.  Every
    other combination sweeps windows into both tails, so the limit is the
    larger (sup) or smaller (inf) of the two tail means.
    """
    rates = side_geometric_means(seq)
    if quantifier is Quantifier.SUP_NEG and direction is Direction.BACKWARD:
        return rates.gm_neg
    if quantifier is Quantifier.INF_NAT and direction is Direction.FORWARD:
        return rates.gm_pos
    return rates.max if quantifier.is_sup else rates.min


def rate_horizon(
    seq: EventuallyPeriodicSequence,
    quantifier: Quantifier,
    direction: Direction,
    n: int,
    k_span: int,
) -> float:
    """Finite-horizon estimate of the quantified window-product rate.

    Takes the geometric mean of the window product (n + 1 factors) over
    every admissible anchor with |k| <= k_span, then extremizes per the
    quantifier.  Converges to `rate_exact` as n grows once k_span clears
    n plus the core width.
    """
    if n < 1:
        raise SequenceError("horizon must be at least 1")
    if k_span < 0:
        raise SequenceError("k_span must be nonnegative")
    if quantifier in (Quantifier.SUP_ALL, Quantifier.INF_ALL):
        anchors = range(-k_span, k_span + 1)
    elif quantifier is Quantifier.SUP_NEG:
        anchors = range(-k_span, 1)
    else:
        anchors = range(0, k_span + 1)

    if direction is Direction.FORWARD:
        lo, hi = anchors[0], anchors[-1] + n
    else:
        lo, hi = anchors[0] - n, anchors[-1]
    prefix = [0.0]
    for j in range(lo, hi + 1):
        prefix.append(prefix[-1] + seq.log_at(j))

    best: float | None = None
    for k in anchors:
        if direction is Direction.FORWARD:
            total = prefix[k + n - lo + 1] - prefix[k - lo]
        else:
            total = prefix[k - lo + 1] - prefix[k - n - lo]
        if best is None:
            best = total
        elif quantifier.is_sup:
            best = max(best, total)
        else:
            best = min(best, total)
    assert best is not None
    return math.exp(best / (n + 1))
