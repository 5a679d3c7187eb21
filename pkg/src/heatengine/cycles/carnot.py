"""
quantum carnot cycle of a particle in a box
"""

from .specs import CarnotSpec
from .ledger import CycleGeometry, CycleLedger, assembleLedger

from ..processes.legs import Process, ProcessKind
from ..processes.heat import heatGup
from ..model.substance import ThermalPoint
from ..model.gup import checkGupValidity, DEFAULT_DELTA_MAX
from ..model.units import requirePositiveFinite
from ..errors import DomainError

import logging
import math

logger = logging.getLogger(__name__)

def carnotBuild(spec: CarnotSpec) -> CycleGeometry:
    """
    legs AB (isothermal at T_hot), BC (adiabatic), CD (isothermal at T_cold)
    and DA (adiabatic), sharing their corner states.

    :param spec: the cycle endpoints
    :type spec: CarnotSpec
    :return: legs and corners
    :rtype: CycleGeometry
    """

    widths = {"A": spec.lA, "B": spec.lB, "C": spec.lC, "D": spec.lD}

    corners = {
        "A": ThermalPoint(spec.betaHot, spec.gammaAt(spec.lA)),
        "B": ThermalPoint(spec.betaHot, spec.gammaAt(spec.lB)),
        "C": ThermalPoint(spec.betaCold, spec.gammaAt(spec.lC)),
        "D": ThermalPoint(spec.betaCold, spec.gammaAt(spec.lD)),
    }

    legs = (
        Process(ProcessKind.ISOTHERMAL, corners["A"], corners["B"]),
        Process(ProcessKind.ADIABATIC, corners["B"], corners["C"]),
        Process(ProcessKind.ISOTHERMAL, corners["C"], corners["D"]),
        Process(ProcessKind.ADIABATIC, corners["D"], corners["A"]),
    )

    return CycleGeometry(
        cycle="carnot",
        legs=legs,
        corners=corners,
        widths=widths
    )

def carnotLedger(spec: CarnotSpec, deltaMax: float = DEFAULT_DELTA_MAX) -> CycleLedger:
    """
    heat, work and efficiency of the carnot cycle, with and without the gup
    correction. the gate is checked at every corner before any heat is computed.

    :param spec: the cycle endpoints
    :type spec: CarnotSpec
    :param deltaMax: gup validity gate
    :type deltaMax: float
    :return: the ledger
    :rtype: CycleLedger
    :raises RegimeError: if any corner fails the gate
    """

    geometry = carnotBuild(spec)

    for (name, corner) in geometry.corners.items():
        checkGupValidity(spec.gup, corner.gamma, deltaMax, where=f"carnot corner {name}")

    heats = [heatGup(leg, spec.gup, deltaMax) for leg in geometry.legs]
    return assembleLedger(geometry, heats, spec.gup.lam)

def classicalCarnotEfficiency(tHot: float, tCold: float) -> float:
    tHot = requirePositiveFinite("tHot", tHot)
    tCold = requirePositiveFinite("tCold", tCold)

    if tCold >= tHot:
        raise DomainError(f"T_cold ({tCold:g}) must be below T_hot ({tHot:g})")

    return 1.0 - tCold / tHot

def carnotDeficitRatio(
    lam: float,
    betaHot: float,
    betaCold: float,
    gammaA: float,
    gammaB: float
) -> float:
    """
    first-order deficit over the carnot efficiency, dQ / Q_AB, written with the
    width ratio of the hot isotherm.

    :param lam: gup heat coefficient
    :type lam: float
    :param betaHot: hot inverse temperature
    :type betaHot: float
    :param betaCold: cold inverse temperature
    :type betaCold: float
    :param gammaA: spectral scale at A
    :type gammaA: float
    :param gammaB: spectral scale at B
    :type gammaB: float
    :return: delta eta / eta_C
    :rtype: float
    """

    betaHot = requirePositiveFinite("betaHot", betaHot)
    betaCold = requirePositiveFinite("betaCold", betaCold)
    gammaA = requirePositiveFinite("gammaA", gammaA)
    gammaB = requirePositiveFinite("gammaB", gammaB)

    if gammaB >= gammaA:
        raise DomainError("the hot isotherm must expand the well (gamma_B < gamma_A)")

    deltaQ = 0.5 * lam * (1.0 / betaHot ** 2 - 1.0 / betaCold ** 2)
    return deltaQ * 2.0 * betaHot / math.log(gammaA / gammaB)
