from heatengine.cycles import (
    CarnotSpec,
    OttoSpec,
    RegimeFlag,
    carnotBuild,
    carnotLedger,
    ottoBuild,
    ottoLedger,
    carnotRatios,
    ottoRatios,
    carnotSpecFromRatios,
    classicalCarnotEfficiency,
    classicalOttoEfficiency,
    carnotDeficitRatio,
    ottoDeficitRatio,
    cycleLedgerOracle,
    assembleLedger,
)
from heatengine.processes import HeatResult, isClosed
from heatengine.model import GupParams
from heatengine.errors import SpecError, RegimeError, DegenerateCycleError

from hypothesis import given, settings, strategies as st
from conftest import DESK_DELTA_MAX

import pytest
import math

temperatures = st.floats(min_value=0.5, max_value=20.0)
fractions = st.floats(min_value=0.05, max_value=0.95)
widths = st.floats(min_value=1.0, max_value=3.0)
stretches = st.floats(min_value=1.1, max_value=4.0)
masses = st.floats(min_value=0.5, max_value=2.0)
betaGs = st.floats(min_value=1e-7, max_value=1e-5)

def test_carnot_build_corners(plainCarnot):
    geometry = carnotBuild(plainCarnot)

    assert plainCarnot.lC == pytest.approx(2.0 * math.sqrt(2.0), rel=1e-15)
    assert plainCarnot.lD == pytest.approx(math.sqrt(2.0), rel=1e-15)

    corners = geometry.corners
    assert corners["C"].betaGamma == pytest.approx(corners["B"].betaGamma, rel=1e-14)
    assert corners["D"].betaGamma == pytest.approx(corners["A"].betaGamma, rel=1e-14)

    assert isClosed(geometry.legs)
    assert geometry.legs[-1].end == geometry.legs[0].start

@given(tHot=temperatures, fraction=fractions, lA=widths, stretch=stretches)
@settings(max_examples=50, deadline=None)
def test_carnot_width_ratios(tHot, fraction, lA, stretch):
    spec = CarnotSpec(tHot, tHot * fraction, lA, lA * stretch, 1.0)
    assert spec.lC / spec.lD == pytest.approx(spec.lB / spec.lA, rel=1e-14)

@pytest.mark.parametrize("arguments", [
    dict(tHot=1.0, tCold=2.0, lA=1.0, lB=2.0, mass=1.0),
    dict(tHot=2.0, tCold=2.0, lA=1.0, lB=2.0, mass=1.0),
    dict(tHot=2.0, tCold=1.0, lA=2.0, lB=1.0, mass=1.0),
    dict(tHot=2.0, tCold=-1.0, lA=1.0, lB=2.0, mass=1.0),
])
def test_carnot_spec_rejects_bad_endpoints(arguments):
    with pytest.raises(SpecError):
        CarnotSpec(**arguments)

def test_carnot_spec_rejects_mismatched_gup_mass():
    with pytest.raises(SpecError):
        CarnotSpec(2.0, 1.0, 1.0, 2.0, 1.0, gup=GupParams(1e-5, 2.0))

def test_carnot_ledger_without_gup(plainCarnot):
    ledger = carnotLedger(plainCarnot)

    assert ledger.eta == pytest.approx(0.5, rel=1e-14)
    assert ledger.heatOf("AB").Q == pytest.approx(2.0 * math.log(2.0), rel=1e-14)
    assert ledger.heatOf("CD").Q < 0.0
    assert ledger.heatOf("BC").Q == 0.0
    assert ledger.heatOf("DA").Q == 0.0

    assert ledger.deltaEta == 0.0
    assert ledger.etaG == ledger.eta
    assert ledger.work == pytest.approx(ledger.qIn - abs(ledger.qOut), rel=1e-14)
    assert ledger.isEngine
    assert not ledger.regimeFlags

def test_carnot_ledger_reference_deficit(deskCarnot):
    ledger = carnotLedger(deskCarnot, deltaMax=DESK_DELTA_MAX)

    assert ledger.deltaQIn == pytest.approx(9e-4, rel=1e-12)
    assert ledger.qIn == pytest.approx(2.0 * math.log(2.0), rel=1e-14)
    assert ledger.deltaEta == pytest.approx(9e-4 / (2.0 * math.log(2.0)) * 0.5, rel=1e-10)
    assert ledger.deltaEta == pytest.approx(3.246e-4, rel=1e-3)

    assert ledger.qInG == pytest.approx(ledger.qIn + 9e-4, rel=1e-14)
    assert abs(ledger.qOutG) == pytest.approx(abs(ledger.qOut) + 9e-4, rel=1e-14)
    assert ledger.etaG == pytest.approx((ledger.qInG - abs(ledger.qOutG)) / ledger.qInG, rel=1e-14)

    # exact and first-order deficits differ at second order only
    assert abs(ledger.deltaEtaExact - ledger.deltaEta) <= 10.0 * (9e-4 / ledger.qIn) ** 2
    assert ledger.heatOf("AB").QG == ledger.heatOf("AB").Q

def test_carnot_ledger_gate(deskCarnot):
    with pytest.raises(RegimeError):
        carnotLedger(deskCarnot)

@given(tHot=temperatures, fraction=fractions, lA=widths, stretch=stretches, mass=masses)
@settings(max_examples=100, deadline=None)
def test_carnot_efficiency_ignores_widths(tHot, fraction, lA, stretch, mass):
    spec = CarnotSpec(tHot, tHot * fraction, lA, lA * stretch, mass)
    expected = classicalCarnotEfficiency(spec.tHot, spec.tCold)

    assert carnotLedger(spec).eta == pytest.approx(expected, rel=1e-12)

@given(tHot=temperatures, fraction=fractions, lA=widths, stretch=stretches, mass=masses, betaG=betaGs)
@settings(max_examples=100, deadline=None)
def test_carnot_gup_work_and_deficit(tHot, fraction, lA, stretch, mass, betaG):
    spec = CarnotSpec(tHot, tHot * fraction, lA, lA * stretch, mass, gup=GupParams(betaG, mass))
    ledger = carnotLedger(spec)

    assert ledger.workG == ledger.work
    assert ledger.isEngine
    assert ledger.etaG < ledger.eta
    assert ledger.deltaEta > 0.0

    scale = (ledger.deltaQIn / ledger.qIn) ** 2
    assert abs(ledger.etaG - (ledger.eta - ledger.deltaEta)) <= 10.0 * scale + 1e-15

def test_carnot_deficit_ratio_matches_ledger(deskCarnot):
    ledger = carnotLedger(deskCarnot, deltaMax=DESK_DELTA_MAX)
    corners = ledger.corners

    ratio = carnotDeficitRatio(
        deskCarnot.gup.lam,
        deskCarnot.betaHot,
        deskCarnot.betaCold,
        corners["A"].gamma,
        corners["B"].gamma
    )

    assert ratio == pytest.approx(ledger.deltaEta / ledger.eta, rel=1e-12)

def test_otto_build_ordering_example():
    # beta_h = 0.5, beta_l = 10, gamma_h / gamma_l = 4
    spec = OttoSpec(tHot=2.0, tCold=0.1, lSmall=1.0, lLarge=2.0, mass=1.0)
    geometry = ottoBuild(spec)

    assert geometry.corners["A"].beta == pytest.approx(2.5, rel=1e-14)
    assert geometry.corners["C"].beta == pytest.approx(2.0, rel=1e-14)
    assert RegimeFlag.CORNER_ORDER in geometry.flags
    assert isClosed(geometry.legs)

def test_otto_build_reversed_hot_corner():
    # beta_h = 1, beta_l = 2 with gamma_h / gamma_l = 4 puts A hotter than B
    spec = OttoSpec(tHot=1.0, tCold=0.5, lSmall=1.0, lLarge=2.0, mass=1.0)
    geometry = ottoBuild(spec)

    assert geometry.corners["A"].beta == pytest.approx(0.5, rel=1e-14)
    assert RegimeFlag.CORNER_ORDER in geometry.flags

def test_otto_reference_cycle(deskOtto):
    ledger = ottoLedger(deskOtto)

    assert ledger.eta == pytest.approx(0.75, rel=1e-14)
    assert ledger.eta == pytest.approx(classicalOttoEfficiency(0.5, 3.0), rel=1e-14)
    assert not ledger.regimeFlags
    assert ledger.isEngine
    assert ledger.workG == ledger.work
    assert ledger.etaG < ledger.eta

    betaA = ledger.corners["A"].beta
    betaC = ledger.corners["C"].beta
    expected = 0.5 * deskOtto.gup.lam * (1.0 / betaA ** 2 - 1.0 / betaC ** 2)

    assert ledger.deltaQIn == pytest.approx(expected, rel=1e-12)
    assert ledger.work == pytest.approx(ledger.heatOf("AB").Q - abs(ledger.heatOf("CD").Q), rel=1e-14)

def test_otto_without_gup_has_equal_efficiencies():
    ledger = ottoLedger(OttoSpec(tHot=10.0, tCold=1.0, lSmall=1.0, lLarge=2.0, mass=1.0))

    assert ledger.etaG == ledger.eta
    assert ledger.deltaEta == 0.0

def test_otto_non_engine_is_flagged():
    # r = 0.3 with r_L^O = 4 is beyond 1 / r_L^O
    ledger = ottoLedger(OttoSpec(tHot=10.0, tCold=3.0, lSmall=1.0, lLarge=2.0, mass=1.0))

    assert RegimeFlag.Q_IN_NON_POSITIVE in ledger.regimeFlags
    assert RegimeFlag.WORK_NON_POSITIVE in ledger.regimeFlags
    assert not ledger.isEngine

def test_otto_degenerate_cycle():
    # r * r_L^O = 1 puts A on top of B
    with pytest.raises(DegenerateCycleError):
        ottoLedger(OttoSpec(tHot=4.0, tCold=1.0, lSmall=1.0, lLarge=2.0, mass=1.0))

@pytest.mark.parametrize("offset", [1e-15, 1e-13, -1e-13])
def test_otto_nearly_degenerate_cycle(offset):
    with pytest.raises(DegenerateCycleError):
        ottoLedger(OttoSpec(tHot=4.0 * (1.0 + offset), tCold=1.0, lSmall=1.0, lLarge=2.0, mass=1.0))

def test_assemble_ledger_rejects_negligible_heat_input(plainCarnot):
    geometry = carnotBuild(plainCarnot)
    tiny = HeatResult(1e-14, 1e-14, 0.0)

    with pytest.raises(DegenerateCycleError):
        assembleLedger(geometry, [tiny, HeatResult(0.0, 0.0, 0.0), HeatResult(-1e-14, -1e-14, 0.0), HeatResult(0.0, 0.0, 0.0)], 0.0)

@given(
    tHot=temperatures,
    lSmall=widths,
    stretch=st.floats(min_value=1.1, max_value=3.0),
    product=st.floats(min_value=0.2, max_value=0.8),
    mass=masses
)
@settings(max_examples=100, deadline=None)
def test_otto_efficiency_ignores_temperatures(tHot, lSmall, stretch, product, mass):
    rLO = stretch ** 2
    spec = OttoSpec(tHot, tHot * product / rLO, lSmall, lSmall * stretch, mass)

    assert ottoLedger(spec).eta == pytest.approx(1.0 - 1.0 / rLO, rel=1e-12)

@given(
    tHot=temperatures,
    lSmall=widths,
    stretch=st.floats(min_value=1.1, max_value=3.0),
    product=st.floats(min_value=0.2, max_value=0.8),
    mass=masses,
    betaG=betaGs
)
@settings(max_examples=100, deadline=None)
def test_otto_gup_work_invariance_and_deficit(tHot, lSmall, stretch, product, mass, betaG):
    rLO = stretch ** 2
    spec = OttoSpec(tHot, tHot * product / rLO, lSmall, lSmall * stretch, mass, gup=GupParams(betaG, mass))
    ledger = ottoLedger(spec)

    assert ledger.workG == ledger.work

    if ledger.isEngine:
        assert ledger.etaG < ledger.eta

def test_otto_overrides_feed_first_order_only(deskOtto):
    plain = ottoLedger(deskOtto)
    spec = OttoSpec(10.0, 1.0, 1.0, 2.0, 1.0, gup=deskOtto.gup, fAD=0.5, fCB=2.0)
    overridden = ottoLedger(spec)

    assert overridden.eta == plain.eta
    assert overridden.etaG == plain.etaG
    assert overridden.deltaEtaExact == plain.deltaEtaExact

    betaA = 0.5 * spec.betaCold
    betaC = 2.0 * spec.betaHot
    deltaQ = 0.5 * spec.gup.lam * (1.0 / betaA ** 2 - 1.0 / betaC ** 2)

    assert overridden.deltaEta == pytest.approx(overridden.work * deltaQ / overridden.qIn ** 2, rel=1e-14)
    assert spec.effectiveFAD == 0.5
    assert deskOtto.effectiveFAD == pytest.approx(0.25, rel=1e-15)
    assert deskOtto.effectiveFCB == pytest.approx(4.0, rel=1e-15)

@pytest.mark.parametrize("arguments", [
    dict(tHot=10.0, tCold=1.0, lSmall=2.0, lLarge=1.0, mass=1.0),
    dict(tHot=1.0, tCold=10.0, lSmall=1.0, lLarge=2.0, mass=1.0),
    dict(tHot=10.0, tCold=1.0, lSmall=1.0, lLarge=2.0, mass=1.0, fAD=1.5),
    dict(tHot=10.0, tCold=1.0, lSmall=1.0, lLarge=2.0, mass=1.0, fCB=0.5),
])
def test_otto_spec_rejects_bad_endpoints(arguments):
    with pytest.raises(SpecError):
        OttoSpec(**arguments)

def test_otto_deficit_ratio_matches_ledger(deskOtto):
    ledger = ottoLedger(deskOtto)
    ratios = ottoRatios(deskOtto)

    ratio = ottoDeficitRatio(
        deskOtto.gup.lam,
        deskOtto.betaHot,
        ledger.corners["A"].beta,
        ledger.corners["C"].beta,
        ratios.r,
        ratios.rLO
    )

    assert ratio == pytest.approx(ledger.deltaEta / ledger.eta, rel=1e-12)

def test_ratios_and_specs_from_ratios(plainCarnot):
    ratios = carnotRatios(plainCarnot)

    assert ratios.r == 0.5
    assert ratios.rL == pytest.approx(8.0, rel=1e-14)

    spec = carnotSpecFromRatios(0.6, 2.0)
    rebuilt = carnotRatios(spec)

    assert rebuilt.r == pytest.approx(0.6, rel=1e-15)
    assert rebuilt.rL == pytest.approx(2.0, rel=1e-14)

    with pytest.raises(SpecError):
        carnotSpecFromRatios(0.4, 2.0)

def test_classical_efficiencies():
    assert classicalCarnotEfficiency(2.0, 1.0) == 0.5
    assert classicalOttoEfficiency(0.5, 3.0) == 0.75

def test_cycle_oracle_reference_cycles(deskOtto):
    carnot = CarnotSpec(2.0, 1.0, 1.0, 2.0, 1.0, gup=GupParams(1e-4, 1.0))
    oracle = cycleLedgerOracle(carnotBuild(carnot).legs, carnot.gup, 10_000, DESK_DELTA_MAX)

    assert oracle.eta == pytest.approx(0.5, abs=1e-7)
    assert oracle.heatOf("BC").QG == pytest.approx(9e-4, abs=1e-9)
    assert oracle.etaG == pytest.approx(carnotLedger(carnot, DESK_DELTA_MAX).etaG, abs=1e-7)

    ottoOracle = cycleLedgerOracle(ottoBuild(deskOtto).legs, deskOtto.gup, 10_000)
    assert ottoOracle.eta == pytest.approx(0.75, abs=1e-7)

    closed = ottoLedger(deskOtto)
    assert ottoOracle.workG == pytest.approx(closed.workG, rel=1e-7)

def test_assemble_ledger_rejects_zero_heat_input(plainCarnot):
    geometry = carnotBuild(plainCarnot)
    zero = HeatResult(0.0, 0.0, 0.0)

    with pytest.raises(DegenerateCycleError):
        assembleLedger(geometry, [zero] * 4, 0.0)

def test_first_order_drift_flag():
    # a large override gap makes the first-order deficit miss the exact one
    spec = OttoSpec(10.0, 1.0, 1.0, 2.0, 1.0, gup=GupParams(1e-5, 1.0), fAD=0.9, fCB=1.01)
    ledger = ottoLedger(spec)

    assert RegimeFlag.FIRST_ORDER_DRIFT in ledger.regimeFlags
    assert ledger.isEngine
