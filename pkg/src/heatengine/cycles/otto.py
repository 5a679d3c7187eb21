"""
quantum otto cycle of a particle in a box
"""

from .specs import OttoSpec
from .ledger import CycleGeometry, CycleLedger, RegimeFlag, assembleLedger

from ..processes.legs import Process, ProcessKind
from ..processes.heat import heatGup
from ..model.substance import ThermalPoint
from ..model.gup import checkGupValidity, DEFAULT_DELTA_MAX
from ..model.units import requirePositiveFinite
from ..errors import DomainError

import logging

logger = logging.getLogger(__name__)

def ottoBuild(spec: OttoSpec) -> CycleGeometry:
    """
    legs AB (heating at L_small), BC (adiabatic), CD (cooling at L_large)
    and DA (adiabatic). B sits at T_hot, D at T_cold and the other two corners
    follow from beta * gamma = constant. CORNER_ORDER is flagged when
    T_B > T_A > T_C > T_D does not hold.

    :param spec: the cycle endpoints
    :type spec: OttoSpec
    :return: legs and corners
    :rtype: CycleGeometry
    """

    gammaHigh = spec.gammaHigh
    gammaLow = spec.gammaLow

    corners = {
        "B": ThermalPoint(spec.betaHot, gammaHigh),
        "C": ThermalPoint(spec.betaHot * gammaHigh / gammaLow, gammaLow),
        "D": ThermalPoint(spec.betaCold, gammaLow),
        "A": ThermalPoint(spec.betaCold * gammaLow / gammaHigh, gammaHigh),
    }
    corners = {name: corners[name] for name in "ABCD"}

    legs = (
        Process(ProcessKind.ISOCHORIC, corners["A"], corners["B"]),
        Process(ProcessKind.ADIABATIC, corners["B"], corners["C"]),
        Process(ProcessKind.ISOCHORIC, corners["C"], corners["D"]),
        Process(ProcessKind.ADIABATIC, corners["D"], corners["A"]),
    )

    flags = set()
    betas = [corners[name].beta for name in "BACD"]

    if not all(low < high for (low, high) in zip(betas, betas[1:])):
        logger.debug(f"otto corners out of order: beta B, A, C, D = {betas}")
        flags.add(RegimeFlag.CORNER_ORDER)

    return CycleGeometry(
        cycle="otto",
        legs=legs,
        corners=corners,
        widths={"A": spec.lSmall, "B": spec.lSmall, "C": spec.lLarge, "D": spec.lLarge},
        flags=frozenset(flags)
    )

def ottoLedger(spec: OttoSpec, deltaMax: float = DEFAULT_DELTA_MAX) -> CycleLedger:
    """
    heat, work and efficiency of the otto cycle, with and without the gup
    correction. the first-order deficit uses beta_A = f_AD beta_l and
    beta_C = f_CB beta_h, which reduce to the actual corners unless overridden.

    :param spec: the cycle endpoints
    :type spec: OttoSpec
    :param deltaMax: gup validity gate
    :type deltaMax: float
    :return: the ledger
    :rtype: CycleLedger
    :raises RegimeError: if any corner fails the gate
    :raises DegenerateCycleError: if Q_in vanishes
    """

    geometry = ottoBuild(spec)

    for (name, corner) in geometry.corners.items():
        checkGupValidity(spec.gup, corner.gamma, deltaMax, where=f"otto corner {name}")

    heats = [heatGup(leg, spec.gup, deltaMax) for leg in geometry.legs]

    deltaQFirstOrder = None

    if not spec.usesDefaultRatios:
        betaA = spec.effectiveFAD * spec.betaCold
        betaC = spec.effectiveFCB * spec.betaHot
        deltaQFirstOrder = 0.5 * spec.gup.lam * (1.0 / betaA ** 2 - 1.0 / betaC ** 2)

    return assembleLedger(geometry, heats, spec.gup.lam, deltaQFirstOrder)

def classicalOttoEfficiency(volumeRatio: float, adiabaticExponent: float) -> float:
    """
    ideal-gas otto efficiency 1 - (V_small / V_large)^(exponent - 1).
    the box reproduces it with exponent 3 and volume ratio L_small / L_large.
    """

    volumeRatio = requirePositiveFinite("volumeRatio", volumeRatio)
    adiabaticExponent = requirePositiveFinite("adiabaticExponent", adiabaticExponent)

    if volumeRatio >= 1.0:
        raise DomainError(f"volume ratio must lie in (0, 1), got {volumeRatio:g}")

    return 1.0 - volumeRatio ** (adiabaticExponent - 1.0)

def ottoDeficitRatio(
    lam: float,
    betaHot: float,
    betaA: float,
    betaC: float,
    r: float,
    rLO: float
) -> float:
    """
    first-order deficit over the otto efficiency, dQ_AB / Q_AB, with
    Q_AB = (1 - r r_L^O) / (2 beta_h).

    :return: delta eta_O / eta_O
    :rtype: float
    """

    betaHot = requirePositiveFinite("betaHot", betaHot)
    betaA = requirePositiveFinite("betaA", betaA)
    betaC = requirePositiveFinite("betaC", betaC)
    r = requirePositiveFinite("r", r)
    rLO = requirePositiveFinite("rLO", rLO)

    denominator = 1.0 - r * rLO

    if denominator == 0.0:
        raise DomainError("Q_AB vanishes at r * r_L^O = 1")

    return lam * (1.0 / betaA ** 2 - 1.0 / betaC ** 2) * betaHot / denominator
