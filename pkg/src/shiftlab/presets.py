"""Canonical reference systems used across the test suite and the docs.

Six measure profiles cover every branch of the rate table: geometric
decay and growth, a peak and a valley around the window, the constant
profile, and a half-flat profile that sits exactly on one boundary.
Two shift presets mirror them on the weight side.
"""

from __future__ import annotations

from .seqcore import EventuallyPeriodicSequence
from .systems import DissipativeSystem, MeasureSequence, WeightSequence


def _ratio(core_lo: int, core: list, neg: list, pos: list) -> EventuallyPeriodicSequence:
    return EventuallyPeriodicSequence.from_values(core_lo, core, neg, pos)


def decay(p: float = 2.0) -> DissipativeSystem:
    """mu_k = 2^{-k}: halving leftward-to-rightward, both tail rates 1/2."""
    ratio = _ratio(0, ["1/2"], ["1/2"], ["1/2"])
    return DissipativeSystem(p=p, measures=MeasureSequence.from_values(1, ratio))


def growth(p: float = 2.0) -> DissipativeSystem:
    """mu_k = 2^k: both tail rates 2."""
    ratio = _ratio(0, ["2"], ["2"], ["2"])
    return DissipativeSystem(p=p, measures=MeasureSequence.from_values(1, ratio))


def peak(p: float = 2.0) -> DissipativeSystem:
    """mu_k = 2^{-|k|}: maximum at the window, rates (2, 1/2)."""
    ratio = _ratio(0, ["1/2"], ["2"], ["1/2"])
    return DissipativeSystem(p=p, measures=MeasureSequence.from_values(1, ratio))


def valley(p: float = 2.0) -> DissipativeSystem:
    """mu_k = 2^{|k|}: minimum at the window, rates (1/2, 2)."""
    ratio = _ratio(0, ["2"], ["1/2"], ["2"])
    return DissipativeSystem(p=p, measures=MeasureSequence.from_values(1, ratio))


def flat(p: float = 2.0) -> DissipativeSystem:
    """mu = 1 everywhere: both rates exactly 1."""
    ratio = _ratio(0, ["1"], ["1"], ["1"])
    return DissipativeSystem(p=p, measures=MeasureSequence.from_values(1, ratio))


def half_flat(p: float = 2.0) -> DissipativeSystem:
    """mu_k = 1 for k <= 0 and 2^{-k} for k > 0: rates (1, 1/2)."""
    ratio = _ratio(0, ["1/2"], ["1"], ["1/2"])
    return DissipativeSystem(p=p, measures=MeasureSequence.from_values(1, ratio))


CANONICAL = {
    "decay": decay,
    "growth": growth,
    "peak": peak,
    "valley": valley,
    "flat": flat,
    "half_flat": half_flat,
}


def doubling_weights() -> WeightSequence:
    """w = 2 everywhere; every orbit norm doubles per forward step."""
    return WeightSequence(_ratio(0, ["2"], ["2"], ["2"]))


def split_weights() -> WeightSequence:
    """w = 1/2 for k <= 0 and 2 for k > 0: contracts left, expands right."""
    return WeightSequence(_ratio(0, ["1/2"], ["1/2"], ["2"]))


SHIFTS = {
    "doubling": doubling_weights,
    "split": split_weights,
}
