from .ledger import CycleGeometry, CycleLedger, assembleLedger

from ..processes.legs import Process, isClosed
from ..processes.heat import HeatResult, gupCorrection
from ..processes.path import legHeatOracle, DEFAULT_PATH_STEPS
from ..model.gup import GupParams, checkGupValidity, DEFAULT_DELTA_MAX
from ..errors import ContractError

from typing import Sequence

import logging

logger = logging.getLogger(__name__)

CORNER_NAMES = "ABCD"

def cycleLedgerOracle(
    legs: Sequence[Process],
    params: GupParams,
    steps: int = DEFAULT_PATH_STEPS,
    deltaMax: float = DEFAULT_DELTA_MAX,
    cycle: str = "cycle"
) -> CycleLedger:
    """
    rebuild a cycle ledger with every leg heat integrated numerically along the
    leg, plus the closed-form gup correction.

    :param legs: four closed legs in order AB, BC, CD, DA
    :type legs: Sequence[Process]
    :param params: gup parameters
    :type params: GupParams
    :param steps: integration steps per leg
    :type steps: int
    :param deltaMax: gup validity gate
    :type deltaMax: float
    :param cycle: name carried into the ledger
    :type cycle: str
    :return: the oracle ledger
    :rtype: CycleLedger
    """

    legs = tuple(legs)

    if len(legs) != len(CORNER_NAMES):
        raise ContractError(f"expected four legs, got {len(legs)}")

    if not isClosed(legs):
        raise ContractError("legs do not form a closed cycle")

    corners = {name: leg.start for (name, leg) in zip(CORNER_NAMES, legs)}

    for (name, corner) in corners.items():
        checkGupValidity(params, corner.gamma, deltaMax, where=f"oracle corner {name}")

    heats = []

    for leg in legs:
        Q = legHeatOracle(leg, steps)
        correction = gupCorrection(leg.start.beta, leg.end.beta, params.lam)
        heats.append(HeatResult(Q=Q, QG=Q + correction, correction=correction))

    logger.debug(f"{cycle} oracle heats: {[heat.Q for heat in heats]}")

    geometry = CycleGeometry(cycle=cycle, legs=legs, corners=corners)
    return assembleLedger(geometry, heats, params.lam)
