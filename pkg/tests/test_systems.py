"""Measure bookkeeping, cell distortion, and the weight reduction."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiftlab.presets import decay, flat, growth, peak, valley
from shiftlab.seqcore import EventuallyPeriodicSequence
from shiftlab.systems import (
    AtomicSystem,
    CellStructure,
    Cycle,
    DissipativeSystem,
    InvalidSystem,
    Line,
    MeasureSequence,
    WeightSequence,
    check_bounded_distortion,
    check_star,
    derived_distortion_bound,
    eps_to_config,
    induced_weights,
)

from _oracles import h_direct, kmin_direct, mu_direct, star_direct

F = Fraction


def ratio(core_lo, core, neg, pos):
    return EventuallyPeriodicSequence.from_values(core_lo, core, neg, pos)


def cell_system(p=1.0, declared=None):
    """Two cells of measures 1/3 and 2/3 with one wobble row (2, 1/2).

    Row sum check: (1/3)*2 + (2/3)*(1/2) = 1, so the partition is intact
    while the first cell's image at k=0 is doubled.
    """
    cells = CellStructure(
        beta=(F(1, 3), F(2, 3)),
        wobble_lo=0,
        wobble=((F(2), F(1, 2)),),
    )
    return DissipativeSystem(
        p=p,
        measures=MeasureSequence(F(1), ratio(0, ["1/2"], ["1/2"], ["1/2"])),
        cells=cells,
        distortion_constant=declared,
    )


# -- measures ------------------------------------------------------------------


def test_mu_fraction_decay_frozen():
    ms = decay().measures
    assert ms.mu_fraction(3) == F(1, 8)
    assert ms.mu_fraction(-3) == F(8)
    assert ms.mu_fraction(0) == 1


@given(k=st.integers(-25, 25))
def test_mu_matches_recursion_oracle(k):
    ms = MeasureSequence(F(3, 2), ratio(-1, ["1/3", 4], [2, "1/5"], ["7/2"]))
    expected = mu_direct(ms.mu0, lambda j: ms.ratio.base_at(j), k)
    assert ms.mu_fraction(k) == expected
    assert ms.log_mu(k) == pytest.approx(
        math.log(expected.numerator) - math.log(expected.denominator), abs=1e-9
    )


def test_side_rates_peak():
    rates = peak().measures.side_rates()
    assert rates.gm_neg == pytest.approx(2.0)
    assert rates.gm_pos == pytest.approx(0.5)


def test_measure_validation():
    with pytest.raises(InvalidSystem):
        MeasureSequence(F(0), ratio(0, [1], [1], [1]))
    with pytest.raises(InvalidSystem):
        MeasureSequence(F(1), ratio(0, [1], [1], [1]).elementwise_pow(2.0))


# -- single-step measure bound ---------------------------------------------------


def test_star_decay_frozen():
    cert = check_star(decay(p=1.0))
    # every backward step doubles the measure
    assert cert.c_fraction == 2
    assert cert.norm_bound == pytest.approx(2.0)
    assert cert.c_inverse == pytest.approx(0.5)
    assert cert.norm_bound_inverse == pytest.approx(0.5)


def test_star_flat_is_one():
    cert = check_star(flat(p=2.0))
    assert cert.c_fraction == 1
    assert cert.norm_bound == pytest.approx(1.0)


def test_star_norm_bound_uses_p():
    cert = check_star(decay(p=2.0))
    assert cert.norm_bound == pytest.approx(math.sqrt(2.0), rel=1e-12)


def test_star_cycle_frozen():
    system = AtomicSystem(p=1.0, components=(Cycle.from_values([1, 2, 3]),))
    cert = check_star(system)
    # the step onto the lightest atom from the heaviest: 3/1
    assert cert.c_fraction == 3
    # the inverse direction is capped by the 1 -> 2 step instead
    assert cert.c_inverse == pytest.approx(2.0)


@pytest.mark.parametrize(
    "system", [decay(1.0), peak(2.0), valley(3.0), cell_system()]
)
def test_star_matches_exhaustive_scan(system):
    cert = check_star(system)
    assert cert.c_fraction == star_direct(system, span=60)


def test_star_inverse_pairing():
    for system in (decay(1.0), growth(1.0), peak(1.0), cell_system()):
        cert = check_star(system)
        assert cert.c * cert.c_inverse >= 1.0 - 1e-12


# -- cells and distortion --------------------------------------------------------


def test_theta_defaults_to_one_outside_window():
    cells = cell_system().cells
    assert cells.theta(0, 0) == 2
    assert cells.theta(0, 1) == F(1, 2)
    assert cells.theta(5, 0) == 1
    assert cells.theta(-1, 1) == 1


def test_cell_sum_must_match_base_measure():
    with pytest.raises(InvalidSystem, match="must sum to the base measure"):
        DissipativeSystem(
            p=1.0,
            measures=MeasureSequence(F(1), ratio(0, [1], [1], [1])),
            cells=CellStructure(beta=(F(1, 3), F(1, 3)), wobble_lo=0, wobble=()),
        )


def test_wobble_row_must_preserve_partition():
    with pytest.raises(InvalidSystem, match="partition sum"):
        DissipativeSystem(
            p=1.0,
            measures=MeasureSequence(F(1), ratio(0, [1], [1], [1])),
            cells=CellStructure(
                beta=(F(1, 2), F(1, 2)), wobble_lo=0, wobble=((F(2), F(2)),)
            ),
        )


def test_distortion_plain_window():
    cert = check_bounded_distortion(decay())
    assert cert.ok and cert.k_min == 1.0 and cert.witness is None


def test_distortion_frozen_table():
    system = cell_system()
    cert = check_bounded_distortion(system)
    assert cert.k_min_fraction == 2
    assert cert.witness == (0, 1)
    # the constructor resolved the declared constant to the minimum
    assert system.distortion_constant == 2.0


def test_distortion_rejects_undersized_declaration():
    cert = check_bounded_distortion(cell_system(), declared=1.5)
    assert not cert.ok
    assert cert.declared == 1.5


def test_distortion_matches_exhaustive_scan():
    system = cell_system()
    k_min, witness = kmin_direct(system)
    cert = check_bounded_distortion(system)
    assert cert.k_min_fraction == k_min
    assert cert.witness == witness


def test_derived_bound_frozen():
    assert derived_distortion_bound(decay()) == 1.0
    system = cell_system()
    assert derived_distortion_bound(system) == pytest.approx(float(h_direct(system)))
    assert derived_distortion_bound(system) <= check_bounded_distortion(system).k_min ** 2


@st.composite
def wobble_systems(draw):
    m = draw(st.integers(1, 3))
    shares = [draw(st.integers(1, 5)) for _ in range(m)]
    total = sum(shares)
    beta = tuple(F(c, total) for c in shares)
    rows = []
    for _ in range(draw(st.integers(0, 3))):
        t = [F(draw(st.integers(1, 4)), draw(st.integers(1, 4))) for _ in range(m)]
        s = sum(b * tj for b, tj in zip(beta, t))
        rows.append(tuple(tj / s for tj in t))
    cells = CellStructure(beta, draw(st.integers(-2, 2)), tuple(rows))
    return DissipativeSystem(
        p=float(draw(st.sampled_from([1, 2, 3]))),
        measures=MeasureSequence(F(1), ratio(0, ["1/2"], [2], ["1/2"])),
        cells=cells,
    )


@given(system=wobble_systems())
@settings(max_examples=50)
def test_distortion_invariants_hold(system):
    cert = check_bounded_distortion(system)
    direct_k, _ = kmin_direct(system)
    assert cert.k_min_fraction == direct_k
    assert cert.k_min >= 1.0
    h = derived_distortion_bound(system)
    assert float(h_direct(system)) == pytest.approx(h)
    assert h <= cert.k_min ** 2 * (1 + 1e-12)


def test_cell_ratio_widens_core():
    system = cell_system()
    for j in (0, 1):
        line = system.cell_ratio(j)
        for k in range(-6, 7):
            expected = system.site_measure_fraction(k + 1, j) / system.site_measure_fraction(k, j)
            assert line.base_at(k) == expected
    assert system.cell_ratio(None) is system.measures.ratio


# -- weight reduction ------------------------------------------------------------


def test_induced_weights_decay_p1():
    weights = induced_weights(decay(p=1.0))
    for k in range(-8, 9):
        assert weights.values.value_fraction(k) == 2


def test_induced_weights_decay_p2():
    weights = induced_weights(decay(p=2.0))
    for k in (-3, 0, 4):
        assert weights.values.value_at(k) == pytest.approx(math.sqrt(2.0), rel=1e-12)


def test_induced_weights_flat_are_one():
    weights = induced_weights(flat(p=3.0))
    assert weights.sup == pytest.approx(1.0)
    assert weights.inf == pytest.approx(1.0)


@pytest.mark.parametrize("p", [1.0, 2.0, 3.0])
@pytest.mark.parametrize("factory", [decay, growth, peak, valley])
def test_induced_weights_carry_the_measure_ratios(factory, p):
    """w_k^p must equal mu_{k-1}/mu_k at every index."""
    system = factory(p)
    weights = induced_weights(system)
    ms = system.measures
    for k in range(-10, 11):
        lhs = p * weights.values.log_at(k)
        rhs = ms.log_mu(k - 1) - ms.log_mu(k)
        assert lhs == pytest.approx(rhs, abs=1e-9)


def test_weight_sequence_bounds():
    w = WeightSequence(ratio(0, [3], ["1/4"], [2]))
    assert w.sup == pytest.approx(3.0)
    assert w.inf == pytest.approx(0.25)
    rates = w.side_rates()
    assert rates.gm_neg == pytest.approx(0.25)
    assert rates.gm_pos == pytest.approx(2.0)


# -- atomic components -----------------------------------------------------------


def test_cycle_construction():
    cycle = Cycle.from_values([1, "1/2", 3])
    assert len(cycle) == 3
    with pytest.raises(InvalidSystem):
        Cycle.from_values([])
    with pytest.raises(InvalidSystem):
        Cycle((F(1), F(0)))


def test_line_as_dissipative():
    line = Line(MeasureSequence(F(1), ratio(0, ["1/2"], ["1/2"], ["1/2"])))
    system = line.as_dissipative(2.0)
    assert system.measures.side_rates().gm_neg == pytest.approx(0.5)


def test_atomic_system_validation():
    with pytest.raises(InvalidSystem):
        AtomicSystem(p=0.5, components=(Cycle.from_values([1]),))
    with pytest.raises(InvalidSystem):
        AtomicSystem(p=2.0, components=())


# -- serialization ---------------------------------------------------------------


def test_eps_to_config_exact_strings():
    config = eps_to_config(peak().measures.ratio)
    assert config == {
        "core_lo": 0,
        "core": ["1/2"],
        "neg_period": ["2"],
        "pos_period": ["1/2"],
    }


def test_eps_to_config_materializes_exponent():
    seq = ratio(0, ["1/2"], ["1/2"], ["1/2"]).elementwise_pow(-1.0)
    assert eps_to_config(seq)["core"] == ["2"]
    half_power = ratio(0, [4], [4], [4]).elementwise_pow(-0.5)
    assert eps_to_config(half_power)["core"] == [pytest.approx(0.5)]


def test_to_config_round_trip_fields():
    system = cell_system()
    config = system.to_config(label="cells")
    assert config["kind"] == "dissipative"
    assert config["label"] == "cells"
    assert config["cells"]["beta"] == ["1/3", "2/3"]
    assert config["distortion_constant"] == 2.0


def test_random_mu_recursion_against_oracle():
    rng = random.Random(11)
    for _ in range(20):
        core = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 3))]
        neg = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 4))]
        pos = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 4))]
        ms = MeasureSequence(
            F(rng.randint(1, 5)),
            EventuallyPeriodicSequence(rng.randint(-2, 2), tuple(core), tuple(neg), tuple(pos)),
        )
        k = rng.randint(-15, 15)
        assert ms.mu_fraction(k) == mu_direct(ms.mu0, lambda j: ms.ratio.base_at(j), k)
