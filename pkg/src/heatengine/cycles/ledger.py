"""
heat ledgers of closed four-leg cycles

sums go through math.fsum. the gup correction of each leg is a difference of
a potential evaluated at shared corner states, so around a closed cycle the
corrections cancel exactly and the corrected work equals the uncorrected work
"""

from ..processes.heat import HeatResult, gupHeatPotential
from ..processes.legs import Process, isClosed
from ..statmech.quantities import ApproximationQuality, classifyApproximation, worstQuality
from ..model.substance import ThermalPoint
from ..errors import ContractError, DegenerateCycleError

from dataclasses import dataclass, field
from typing import Optional, Sequence
from enum import Enum

import logging
import math

logger = logging.getLogger(__name__)

LEG_NAMES = ("AB", "BC", "CD", "DA")
INPUT_LEGS = ("AB", "BC")

# relative gap between exact and first-order corrected efficiency worth flagging
FIRST_ORDER_DRIFT_TOLERANCE = 1e-6

# heat input below this fraction of the hottest corner temperature counts as none
DEGENERATE_TOLERANCE = 1e-12

class RegimeFlag(Enum):
    Q_IN_NON_POSITIVE = "q-in-non-positive"
    WORK_NON_POSITIVE = "work-non-positive"
    CORNER_ORDER = "corner-order"
    FIRST_ORDER_DRIFT = "first-order-drift"

ENGINE_FLAGS = frozenset({
    RegimeFlag.Q_IN_NON_POSITIVE,
    RegimeFlag.WORK_NON_POSITIVE,
    RegimeFlag.CORNER_ORDER,
})

def formatFlags(flags) -> str:
    return ";".join(sorted(flag.value for flag in flags))

@dataclass(frozen=True)
class CycleGeometry:
    """
    the four legs of a cycle with their corner states.

    :param cycle: cycle name
    :param legs: legs in order AB, BC, CD, DA
    :param corners: corner states keyed A, B, C, D
    :param widths: well widths keyed by corner
    :param flags: regime flags already known from the corners
    """

    cycle: str
    legs: tuple[Process, ...]
    corners: dict[str, ThermalPoint]
    widths: dict[str, float] = field(default_factory=dict)
    flags: frozenset = frozenset()

    def leg(self, name: str) -> Process:
        return self.legs[LEG_NAMES.index(name)]

@dataclass(frozen=True)
class LegHeat:
    name: str
    leg: Process
    heat: HeatResult

@dataclass(frozen=True)
class CycleLedger:
    """
    signed per-leg heats of a cycle and everything derived from them.
    qOut is signed (negative for an engine); efficiencies use its magnitude.
    deltaEta is the first-order deficit, deltaEtaExact = eta - etaG.
    """

    cycle: str
    legs: tuple[LegHeat, ...]

    qIn: float
    qOut: float
    work: float
    eta: float

    qInG: float
    qOutG: float
    workG: float
    etaG: float

    deltaQIn: float
    deltaEta: float
    deltaEtaExact: float

    regimeFlags: frozenset
    corners: dict[str, ThermalPoint] = field(default_factory=dict)
    widths: dict[str, float] = field(default_factory=dict)
    approximation: ApproximationQuality = ApproximationQuality.OK

    @property
    def isEngine(self) -> bool:
        return not (self.regimeFlags & ENGINE_FLAGS)

    def heatOf(self, name: str) -> HeatResult:
        for legHeat in self.legs:
            if legHeat.name == name:
                return legHeat.heat

        raise KeyError(f"no leg named {name!r} in {self.cycle} ledger")

def _potentialTerms(leg: Process, lam: float) -> list[float]:
    return [gupHeatPotential(leg.end.beta, lam), -gupHeatPotential(leg.start.beta, lam)]

def assembleLedger(
    geometry: CycleGeometry,
    heats: Sequence[HeatResult],
    lam: float,
    deltaQFirstOrder: Optional[float] = None
) -> CycleLedger:
    """
    combine per-leg heats into the cycle ledger.

    :param geometry: the cycle legs and corners
    :type geometry: CycleGeometry
    :param heats: heat of each leg, in leg order
    :type heats: Sequence[HeatResult]
    :param lam: gup heat coefficient lambda
    :type lam: float
    :param deltaQFirstOrder: heat-input correction used by the first-order deficit;
        defaults to the actual qInG - qIn
    :type deltaQFirstOrder: Optional[float]
    :return: the ledger
    :rtype: CycleLedger
    :raises DegenerateCycleError: if the cycle absorbs no heat, relative to its hottest corner
    """

    if len(heats) != len(geometry.legs):
        raise ContractError(f"expected {len(geometry.legs)} leg heats, got {len(heats)}")

    if not isClosed(geometry.legs):
        raise ContractError(f"{geometry.cycle} legs do not form a closed cycle")

    names = LEG_NAMES[:len(geometry.legs)]
    inputs = [index for (index, name) in enumerate(names) if name in INPUT_LEGS]
    outputs = [index for (index, name) in enumerate(names) if name not in INPUT_LEGS]

    def heatSum(indices: list[int]) -> float:
        return math.fsum(heats[index].Q for index in indices)

    def correctionTerms(indices: list[int]) -> list[float]:
        terms = []

        for index in indices:
            terms.extend(_potentialTerms(geometry.legs[index], lam))

        return terms

    def correctedSum(indices: list[int]) -> float:
        return math.fsum([heats[index].Q for index in indices] + correctionTerms(indices))

    everything = list(range(len(names)))

    qIn = heatSum(inputs)
    qOut = heatSum(outputs)
    work = heatSum(everything)

    qInG = correctedSum(inputs)
    qOutG = correctedSum(outputs)
    workG = correctedSum(everything)

    heatScale = max(point.temperature for point in geometry.corners.values())

    if min(abs(qIn), abs(qInG)) <= DEGENERATE_TOLERANCE * heatScale:
        raise DegenerateCycleError(
            f"{geometry.cycle} cycle absorbs no heat (Q_in={qIn:.3e}, Q_in^G={qInG:.3e}); efficiency undefined"
        )

    deltaQIn = math.fsum(correctionTerms(inputs))
    deltaQ = deltaQIn if deltaQFirstOrder is None else deltaQFirstOrder

    eta = work / qIn
    etaG = workG / qInG
    deltaEta = work * deltaQ / (qIn * qIn)

    flags = set(geometry.flags)

    if qIn <= 0.0:
        flags.add(RegimeFlag.Q_IN_NON_POSITIVE)

    if work <= 0.0:
        flags.add(RegimeFlag.WORK_NON_POSITIVE)

    if eta != 0.0 and abs(etaG - (eta - deltaEta)) / abs(eta) > FIRST_ORDER_DRIFT_TOLERANCE:
        flags.add(RegimeFlag.FIRST_ORDER_DRIFT)

    approximation = worstQuality(
        classifyApproximation(point.betaGamma) for point in geometry.corners.values()
    )

    logger.debug(
        f"{geometry.cycle} ledger: qIn={qIn:.6g}, work={work:.6g}, eta={eta:.6g}, "
        f"etaG={etaG:.6g}, flags=[{formatFlags(flags)}]"
    )

    return CycleLedger(
        cycle=geometry.cycle,
        legs=tuple(
            LegHeat(name, leg, heat)
            for (name, leg, heat) in zip(names, geometry.legs, heats)
        ),
        qIn=qIn,
        qOut=qOut,
        work=work,
        eta=eta,
        qInG=qInG,
        qOutG=qOutG,
        workG=workG,
        etaG=etaG,
        deltaQIn=deltaQIn,
        deltaEta=deltaEta,
        deltaEtaExact=eta - etaG,
        regimeFlags=frozenset(flags),
        corners=dict(geometry.corners),
        widths=dict(geometry.widths),
        approximation=approximation
    )
