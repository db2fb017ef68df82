"""Verdicts for the dynamical properties of shifts and dissipative systems.

Each classifier reads the two tail geometric means of a ratio (or weight)
presentation and applies a strict-inequality rule table.  Verdicts carry
the citation tag of the rule that decided them, a margin (distance of the
decisive rates from 1), and, where the rule is existential, a concrete
witness.  Rates sitting exactly on a boundary never satisfy a strict
condition; rule families whose boundary cases are genuinely open return
Undecided rather than guessing.

Citation tags used here: ED1..ED4 (expansivity rules for dissipative
systems), UE1/UE2/UE3 (the uniform-expansivity trichotomy), HC/HD/GH (the
splitting conditions), SC1/SC2 (stability and shadowing rules), C
(stability forces shadowing under positive expansivity), P41 (expanding
far tail with contracting near tail certifies instability), E1..E4
(atomic expansivity rules), B-a/B-b/B-c and B (the weighted-shift table),
W (the weight reduction), and OpenProblem for honest Undecided.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Literal, Mapping

from .canon import fingerprint
from .seqcore import (
    EventuallyPeriodicSequence,
    side_geometric_means,
    tail_sign_vs_one,
)
from .systems import (
    AtomicSystem,
    Cycle,
    DissipativeSystem,
    Line,
    WeightSequence,
    check_bounded_distortion,
)

Method = Literal["exact", "horizon"]


class Status(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class Verdict:
    status: Status
    citation: str
    method: str = "exact"
    margin: float | None = None
    witness: dict | None = None

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "citation": self.citation,
            "method": self.method,
            "margin": self.margin,
            "witness": self.witness,
        }


class DistortionError(ValueError):
    """Classification was asked for a system whose declared K fails its check."""


# ---------------------------------------------------------------------------
# Rate views


@dataclass(frozen=True)
class _RateView:
    g_minus: float
    g_plus: float
    sign_minus: int  # trichotomy of g_minus against 1
    sign_plus: int
    method: str

    @property
    def margin_minus(self) -> float:
        return abs(self.g_minus - 1.0)

    @property
    def margin_plus(self) -> float:
        return abs(self.g_plus - 1.0)

    @property
    def margin_both(self) -> float:
        return min(self.margin_minus, self.margin_plus)


def _aligned_tail_estimate(seq: EventuallyPeriodicSequence, side: str, n: int) -> float:
    """Numeric tail rate from one window of about n entries, clear of the core.

    The window length is rounded down to a whole number of periods so the
    estimate carries no phase bias; anchoring 8 indices past the core keeps
    transients out.
    """
    period = len(seq.neg_period) if side == "neg" else len(seq.pos_period)
    length = max(period, (max(n, 1) // period) * period)
    if side == "neg":
        hi = seq.core_lo - 9
        total = sum(seq.log_at(k) for k in range(hi - length + 1, hi + 1))
    else:
        lo = seq.core_hi + 9
        total = sum(seq.log_at(k) for k in range(lo, lo + length))
    return math.exp(total / length)


def _sign_of(value: float) -> int:
    if abs(value - 1.0) <= 1e-12:
        return 0
    return 1 if value > 1.0 else -1


def _view(seq: EventuallyPeriodicSequence, method: Method, horizon: int, k_span: int) -> _RateView:
    if method == "exact":
        rates = side_geometric_means(seq)
        return _RateView(
            g_minus=rates.gm_neg,
            g_plus=rates.gm_pos,
            sign_minus=tail_sign_vs_one(seq, "neg"),
            sign_plus=tail_sign_vs_one(seq, "pos"),
            method="exact",
        )
    if method != "horizon":
        raise ValueError(f"unknown method {method!r}")
    g_minus = _aligned_tail_estimate(seq, "neg", horizon)
    g_plus = _aligned_tail_estimate(seq, "pos", horizon)
    return _RateView(
        g_minus=g_minus,
        g_plus=g_plus,
        sign_minus=_sign_of(g_minus),
        sign_plus=_sign_of(g_plus),
        method="horizon",
    )


def _dissipative_view(
    system: DissipativeSystem, method: Method, horizon: int, k_span: int
) -> _RateView:
    cert = check_bounded_distortion(system)
    if not cert.ok:
        raise DistortionError(
            f"declared distortion constant {cert.declared} is below the "
            f"minimal value {cert.k_min}"
        )
    return _view(system.measures.ratio, method, horizon, k_span)


# ---------------------------------------------------------------------------
# Witness scans

_BLOWUP_LOG = math.log(1e6)
_WITNESS_CAP = 100_000


def _backward_blowup(system: DissipativeSystem) -> dict | None:
    """Smallest n with mu_{-n} > 1e6 mu_0, scanned incrementally."""
    ratio = system.measures.ratio
    total = 0.0
    for n in range(1, _WITNESS_CAP + 1):
        total -= ratio.log_at(-n)
        if total > _BLOWUP_LOG:
            return {"n": n, "measure_ratio": math.exp(total)}
    return None


def _forward_blowup(system: DissipativeSystem) -> dict | None:
    ratio = system.measures.ratio
    total = 0.0
    for n in range(1, _WITNESS_CAP + 1):
        total += ratio.log_at(n - 1)
        if total > _BLOWUP_LOG:
            return {"n": n, "measure_ratio": math.exp(total)}
    return None


def _rates_witness(view: _RateView) -> dict:
    return {"g_minus": view.g_minus, "g_plus": view.g_plus}


# ---------------------------------------------------------------------------
# Dissipative classifiers


def classify_positively_expansive(
    system: DissipativeSystem,
    *,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> Verdict:
    """Backward orbit measures of the window must blow up: g_minus < 1."""
    view = _dissipative_view(system, method, horizon, k_span)
    if view.sign_minus < 0:
        witness = _backward_blowup(system) if method == "exact" else _rates_witness(view)
        return Verdict(Status.HOLDS, "ED1", view.method, view.margin_minus, witness)
    return Verdict(Status.FAILS, "ED1", view.method, view.margin_minus, _rates_witness(view))


def classify_expansive(
    system: DissipativeSystem,
    *,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> Verdict:
    """Either tail escapes: g_minus < 1 or g_plus > 1."""
    view = _dissipative_view(system, method, horizon, k_span)
    if view.sign_minus < 0 or view.sign_plus > 0:
        if view.sign_minus < 0 and (view.sign_plus <= 0 or view.margin_minus >= view.margin_plus):
            margin = view.margin_minus
            witness = _backward_blowup(system) if method == "exact" else None
            side = "backward"
        else:
            margin = view.margin_plus
            witness = _forward_blowup(system) if method == "exact" else None
            side = "forward"
        payload = {"side": side}
        if witness:
            payload.update(witness)
        else:
            payload.update(_rates_witness(view))
        return Verdict(Status.HOLDS, "ED2", view.method, margin, payload)
    return Verdict(Status.FAILS, "ED2", view.method, view.margin_both, _rates_witness(view))


def classify_uniformly_positively_expansive(
    system: DissipativeSystem,
    *,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> Verdict:
    """Same rate rule as positive expansivity, made uniform: g_minus < 1."""
    view = _dissipative_view(system, method, horizon, k_span)
    status = Status.HOLDS if view.sign_minus < 0 else Status.FAILS
    return Verdict(status, "ED3", view.method, view.margin_minus, _rates_witness(view))


def classify_uniformly_expansive(
    system: DissipativeSystem,
    *,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> Verdict:
    """Trichotomy: both rates above 1, both below 1, or split g_plus > 1 > g_minus."""
    view = _dissipative_view(system, method, horizon, k_span)
    fired: str | None = None
    if view.sign_minus > 0 and view.sign_plus > 0:
        fired = "UE1"
    elif view.sign_minus < 0 and view.sign_plus < 0:
        fired = "UE2"
    elif view.sign_plus > 0 and view.sign_minus < 0:
        fired = "UE3"
    if fired is not None:
        return Verdict(Status.HOLDS, fired, view.method, view.margin_both, _rates_witness(view))
    return Verdict(Status.FAILS, "ED4", view.method, view.margin_both, _rates_witness(view))


def _splitting_condition(view: _RateView) -> str | None:
    if view.sign_minus > 0 and view.sign_plus > 0:
        return "HC"
    if view.sign_minus < 0 and view.sign_plus < 0:
        return "HD"
    if view.sign_minus > 0 and view.sign_plus < 0:
        return "GH"
    return None


def classify_shadowing_gh(
    system: DissipativeSystem,
    *,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> tuple[Verdict, Verdict, Verdict]:
    """(shadowing, hyperbolic, generalized hyperbolic) from the splitting trio."""
    view = _dissipative_view(system, method, horizon, k_span)
    fired = _splitting_condition(view)
    margin = view.margin_both
    witness = _rates_witness(view)
    if fired is not None:
        gh = Verdict(Status.HOLDS, fired, view.method, margin, witness)
        shadowing = Verdict(
            Status.HOLDS, "SC2", view.method, margin, dict(witness, condition=fired)
        )
    else:
        gh = Verdict(Status.FAILS, "SC2", view.method, margin, witness)
        shadowing = Verdict(Status.FAILS, "SC2", view.method, margin, witness)
    if fired in ("HC", "HD"):
        hyperbolic = Verdict(Status.HOLDS, fired, view.method, margin, witness)
    else:
        hyperbolic = Verdict(Status.FAILS, "SC1", view.method, margin, witness)
    return shadowing, hyperbolic, gh


def classify_not_structurally_stable(
    system: DissipativeSystem,
    *,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> Verdict:
    """Certified instability: expanding positive tail over a contracting negative one."""
    view = _dissipative_view(system, method, horizon, k_span)
    if view.sign_plus > 0 and view.sign_minus < 0:
        return Verdict(Status.HOLDS, "P41", view.method, view.margin_both, _rates_witness(view))
    return Verdict(Status.FAILS, "P41", view.method, view.margin_both, _rates_witness(view))


def classify_sss(
    system: DissipativeSystem,
    *,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> Verdict:
    """Strong structural stability, decided by the rule table.

    Shadowing settles it positively; positive expansivity without
    shadowing settles it negatively; the certified-instability rates also
    settle it negatively.  Anything else is genuinely open.
    """
    view = _dissipative_view(system, method, horizon, k_span)
    fired = _splitting_condition(view)
    witness = _rates_witness(view)
    if fired is not None:
        return Verdict(
            Status.HOLDS, "SC1", view.method, view.margin_both, dict(witness, condition=fired)
        )
    if view.sign_minus < 0:
        return Verdict(Status.FAILS, "C", view.method, view.margin_minus, witness)
    if view.sign_plus > 0 and view.sign_minus < 0:  # subsumed by the branch above
        return Verdict(Status.FAILS, "P41", view.method, view.margin_both, witness)
    return Verdict(Status.UNDECIDED, "OpenProblem", view.method, None, witness)


def classify_structurally_stable(
    system: DissipativeSystem,
    *,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> Verdict:
    """Plain structural stability, as far as the rule tables reach."""
    sss = classify_sss(system, method=method, horizon=horizon, k_span=k_span)
    if sss.holds:
        return Verdict(Status.HOLDS, sss.citation, sss.method, sss.margin, sss.witness)
    view = _dissipative_view(system, method, horizon, k_span)
    if view.sign_minus < 0 and _splitting_condition(view) not in ("HC", "HD"):
        return Verdict(
            Status.FAILS, "P41", view.method, view.margin_minus, _rates_witness(view)
        )
    return Verdict(Status.UNDECIDED, "OpenProblem", view.method, None, _rates_witness(view))


# ---------------------------------------------------------------------------
# Reports and the implication audit

REPORT_PROPERTIES = (
    "positively_expansive",
    "expansive",
    "uniformly_positively_expansive",
    "uniformly_expansive",
    "shadowing",
    "hyperbolic",
    "generalized_hyperbolic",
    "strong_structural_stability",
    "structurally_stable",
    "not_structurally_stable",
)

_IMPLICATIONS = (
    ("hyperbolic", "uniformly_expansive"),
    ("hyperbolic", "generalized_hyperbolic"),
    ("generalized_hyperbolic", "shadowing"),
    ("generalized_hyperbolic", "strong_structural_stability"),
    ("strong_structural_stability", "structurally_stable"),
    ("uniformly_expansive", "expansive"),
    ("uniformly_positively_expansive", "positively_expansive"),
)


def implication_audit(verdicts: Mapping[str, Verdict]) -> tuple[str, ...]:
    """Cross-check a verdict table against the known implications.

    Undecided entries are skipped: only a decided pair can witness a
    violation.  Returns human-readable violation lines, empty when clean.
    """
    failures: list[str] = []

    def decided(name: str) -> Verdict | None:
        verdict = verdicts.get(name)
        if verdict is None or verdict.status is Status.UNDECIDED:
            return None
        return verdict

    for stronger, weaker in _IMPLICATIONS:
        a, b = decided(stronger), decided(weaker)
        if a is not None and b is not None and a.holds and b.fails:
            failures.append(f"{stronger}=Holds but {weaker}=Fails")

    nss = decided("not_structurally_stable")
    stable = decided("structurally_stable")
    if nss is not None and stable is not None and nss.holds and stable.holds:
        failures.append("not_structurally_stable=Holds but structurally_stable=Holds")

    pe = decided("positively_expansive")
    hyp = decided("hyperbolic")
    if pe is not None and hyp is not None and stable is not None:
        if pe.holds and hyp.fails and stable.holds:
            failures.append(
                "positively_expansive=Holds and hyperbolic=Fails "
                "but structurally_stable=Holds"
            )

    sss = decided("strong_structural_stability")
    shadowing = decided("shadowing")
    if pe is not None and pe.holds and sss is not None and shadowing is not None:
        if sss.holds != shadowing.holds:
            failures.append(
                "under positively_expansive=Holds, strong_structural_stability="
                f"{verdicts['strong_structural_stability'].status.value} disagrees with "
                f"shadowing={verdicts['shadowing'].status.value}"
            )
    return tuple(failures)


@dataclass(frozen=True)
class ClassificationReport:
    kind: str
    label: str | None
    p: float | None
    fingerprint: str
    g_minus: float
    g_plus: float
    method: str
    horizon: int
    k_span: int
    verdicts: dict[str, Verdict]
    violations: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "label": self.label,
            "p": self.p,
            "fingerprint": self.fingerprint,
            "rates": {"g_minus": self.g_minus, "g_plus": self.g_plus},
            "method": self.method,
            "horizon": self.horizon,
            "k_span": self.k_span,
            "verdicts": {name: v.to_dict() for name, v in self.verdicts.items()},
            "violations": list(self.violations),
        }


def classify_report(
    system: DissipativeSystem,
    *,
    label: str | None = None,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> ClassificationReport:
    """Full verdict table for a dissipative system, with the audit attached."""
    kwargs = dict(method=method, horizon=horizon, k_span=k_span)
    shadowing, hyperbolic, gh = classify_shadowing_gh(system, **kwargs)
    verdicts = {
        "positively_expansive": classify_positively_expansive(system, **kwargs),
        "expansive": classify_expansive(system, **kwargs),
        "uniformly_positively_expansive": classify_uniformly_positively_expansive(
            system, **kwargs
        ),
        "uniformly_expansive": classify_uniformly_expansive(system, **kwargs),
        "shadowing": shadowing,
        "hyperbolic": hyperbolic,
        "generalized_hyperbolic": gh,
        "strong_structural_stability": classify_sss(system, **kwargs),
        "structurally_stable": classify_structurally_stable(system, **kwargs),
        "not_structurally_stable": classify_not_structurally_stable(system, **kwargs),
    }
    view = _dissipative_view(system, method, horizon, k_span)
    return ClassificationReport(
        kind="dissipative",
        label=label,
        p=system.p,
        fingerprint=fingerprint(system.to_config()),
        g_minus=view.g_minus,
        g_plus=view.g_plus,
        method=view.method,
        horizon=horizon,
        k_span=k_span,
        verdicts=verdicts,
        violations=implication_audit(verdicts),
    )


# ---------------------------------------------------------------------------
# Weighted shifts


def classify_shift(
    weights: WeightSequence,
    *,
    label: str | None = None,
    method: Method = "exact",
    horizon: int = 200,
    k_span: int = 500,
) -> ClassificationReport:
    """Stability table for an invertible weighted shift.

    The three branches: both weight rates below 1 (contraction), both
    above 1 (expansion), or contracting on the left with expansion on the
    right.  Any branch gives strong structural stability and shadowing;
    the first two give hyperbolicity; outside the table stability Fails.
    """
    view = _view(weights.values, method, horizon, k_span)
    witness = _rates_witness(view)
    margin = view.margin_both
    if view.sign_minus < 0 and view.sign_plus < 0:
        branch = "B-a"
    elif view.sign_minus > 0 and view.sign_plus > 0:
        branch = "B-b"
    elif view.sign_minus < 0 and view.sign_plus > 0:
        branch = "B-c"
    else:
        branch = None
    if branch is not None:
        sss = Verdict(Status.HOLDS, branch, view.method, margin, witness)
        shadowing = Verdict(
            Status.HOLDS, "B", view.method, margin, dict(witness, condition=branch)
        )
    else:
        sss = Verdict(Status.FAILS, "B", view.method, margin, witness)
        shadowing = Verdict(Status.FAILS, "B", view.method, margin, witness)
    if branch in ("B-a", "B-b"):
        hyperbolic = Verdict(Status.HOLDS, branch, view.method, margin, witness)
    else:
        hyperbolic = Verdict(Status.FAILS, "B", view.method, margin, witness)
    verdicts = {
        "strong_structural_stability": sss,
        "shadowing": shadowing,
        "hyperbolic": hyperbolic,
    }
    violations: list[str] = []
    if hyperbolic.holds and sss.fails:
        violations.append("hyperbolic=Holds but strong_structural_stability=Fails")
    if sss.status is not shadowing.status:
        violations.append("strong_structural_stability must match shadowing for shifts")
    return ClassificationReport(
        kind="shift",
        label=label,
        p=None,
        fingerprint=fingerprint(weights.to_config()),
        g_minus=view.g_minus,
        g_plus=view.g_plus,
        method=view.method,
        horizon=horizon,
        k_span=k_span,
        verdicts=verdicts,
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# Atomic systems


class ExpansivityMode(Enum):
    POSITIVE = "positive"
    TWOSIDED = "twosided"


def _line_view(line: Line) -> _RateView:
    seq = line.measures.ratio
    rates = side_geometric_means(seq)
    return _RateView(
        g_minus=rates.gm_neg,
        g_plus=rates.gm_pos,
        sign_minus=tail_sign_vs_one(seq, "neg"),
        sign_plus=tail_sign_vs_one(seq, "pos"),
        method="exact",
    )


def classify_atomic_expansive(system: AtomicSystem, mode: ExpansivityMode) -> Verdict:
    """Pointwise expansivity on a union of cycles and lines.

    A cycle caps every backward and forward orbit measure, so its atoms
    can never escape; a line escapes per its tail rates.  Positive mode
    needs every line's backward rate below 1; twosided mode lets either
    direction do the work.
    """
    citation = "E1" if mode is ExpansivityMode.POSITIVE else "E2"
    margins: list[float] = []
    for index, comp in enumerate(system.components):
        if isinstance(comp, Cycle):
            cap = float(max(comp.measures))
            return Verdict(
                Status.FAILS, citation, "exact", None,
                {"component": index, "kind": "cycle", "orbit_measure_sup": cap},
            )
        view = _line_view(comp)
        if mode is ExpansivityMode.POSITIVE:
            good = view.sign_minus < 0
            margins.append(view.margin_minus)
        else:
            good = view.sign_minus < 0 or view.sign_plus > 0
            margins.append(max(view.margin_minus if view.sign_minus < 0 else 0.0,
                               view.margin_plus if view.sign_plus > 0 else 0.0))
        if not good:
            return Verdict(
                Status.FAILS, citation, "exact", view.margin_both,
                {"component": index, "kind": "line", "g_minus": view.g_minus,
                 "g_plus": view.g_plus},
            )
    return Verdict(Status.HOLDS, citation, "exact", min(margins) if margins else None,
                   {"components": len(system.components)})


def _uniform_line_ok(view: _RateView, mode: ExpansivityMode) -> bool:
    if mode is ExpansivityMode.POSITIVE:
        return view.sign_minus < 0
    return (
        (view.sign_minus > 0 and view.sign_plus > 0)
        or (view.sign_minus < 0 and view.sign_plus < 0)
        or (view.sign_plus > 0 and view.sign_minus < 0)
    )


def _atomic_site_log_mu(comp: Cycle | Line, index: int) -> float:
    if isinstance(comp, Cycle):
        m = comp.measures[index % len(comp)]
        return math.log(m.numerator) - math.log(m.denominator)
    return comp.measures.log_mu(index)


def _sample_sets(system: AtomicSystem, rng: random.Random, budget: int):
    """Random finite atom sets, as (component, index) pairs."""
    for _ in range(budget):
        size = rng.randint(1, 4)
        atoms = set()
        while len(atoms) < size:
            ci = rng.randrange(len(system.components))
            comp = system.components[ci]
            if isinstance(comp, Cycle):
                atoms.add((ci, rng.randrange(len(comp))))
            else:
                atoms.add((ci, rng.randint(-20, 20)))
        yield tuple(sorted(atoms))


def _set_log_measure(system: AtomicSystem, atoms, shift: int) -> float:
    logs = [
        _atomic_site_log_mu(system.components[ci], idx + shift) for ci, idx in atoms
    ]
    top = max(logs)
    return top + math.log(sum(math.exp(v - top) for v in logs))


def classify_atomic_uniform(
    system: AtomicSystem,
    mode: ExpansivityMode,
    *,
    horizon: int = 200,
    sample_budget: int = 24,
    seed: int = 0,
) -> Verdict:
    """Uniform expansivity across all measurable unions of atoms.

    The exact rule: no cycles allowed, and every line must satisfy the
    rate trichotomy (backward rate below 1 in positive mode).  A seeded
    sampler then stress-tests the exact answer on random finite atom
    sets; a contradiction downgrades the verdict to Undecided, since a
    rule table that disagrees with direct measurement cannot be trusted.
    """
    citation = "E3" if mode is ExpansivityMode.POSITIVE else "E4"
    verdict: Verdict | None = None
    for index, comp in enumerate(system.components):
        if isinstance(comp, Cycle):
            verdict = Verdict(
                Status.FAILS, citation, "exact", None,
                {"component": index, "kind": "cycle",
                 "orbit_measure_sup": float(max(comp.measures))},
            )
            break
        view = _line_view(comp)
        if not _uniform_line_ok(view, mode):
            verdict = Verdict(
                Status.FAILS, citation, "exact", view.margin_both,
                {"component": index, "kind": "line", "g_minus": view.g_minus,
                 "g_plus": view.g_plus},
            )
            break
    if verdict is None:
        margins = [_line_view(c).margin_both for c in system.components]  # type: ignore[arg-type]
        verdict = Verdict(Status.HOLDS, citation, "exact", min(margins),
                          {"components": len(system.components)})

    rng = random.Random(seed)
    if verdict.holds:
        for atoms in _sample_sets(system, rng, sample_budget):
            base = _set_log_measure(system, atoms, 0)
            backward = _set_log_measure(system, atoms, -horizon) - base
            forward = _set_log_measure(system, atoms, horizon) - base
            threshold = math.log(2.0)
            if mode is ExpansivityMode.POSITIVE:
                ok = backward >= threshold
            else:
                ok = max(backward, forward) >= threshold
            if not ok:
                return Verdict(
                    Status.UNDECIDED, citation, "exact", None,
                    {"sampler": "contradiction", "atoms": [list(a) for a in atoms],
                     "horizon": horizon},
                )
    elif verdict.witness is not None and verdict.witness.get("kind") == "line":
        comp = system.components[verdict.witness["component"]]
        assert isinstance(comp, Line)
        est_minus = _aligned_tail_estimate(comp.measures.ratio, "neg", horizon)
        est_plus = _aligned_tail_estimate(comp.measures.ratio, "pos", horizon)
        view = _line_view(comp)
        for estimate, sign in ((est_minus, view.sign_minus), (est_plus, view.sign_plus)):
            if sign <= 0 and estimate > 1.1:
                return Verdict(
                    Status.UNDECIDED, citation, "exact", None,
                    {"sampler": "contradiction", "estimate": estimate},
                )
    return verdict
