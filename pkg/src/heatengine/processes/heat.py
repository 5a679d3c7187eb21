"""
closed-form heat along quasi-static legs

signs: Q > 0 means heat absorbed by the working substance
"""

from .legs import Process, ProcessKind

from ..model.units import requirePositiveFinite
from ..model.gup import GupParams, checkGupValidity, DEFAULT_DELTA_MAX
from ..errors import ContractError

from dataclasses import dataclass

import math

@dataclass(frozen=True)
class HeatResult:
    """
    heat over one leg with and without the gup correction.

    :param Q: heat into the system
    :param QG: gup-corrected heat
    :param correction: QG - Q, depends only on the endpoint temperatures
    """

    Q: float
    QG: float
    correction: float

def heatIsothermal(beta: float, gammaStart: float, gammaEnd: float) -> float:
    """
    heat of an isothermal leg, -(1 / (2 beta)) ln(gamma_f / gamma_i).
    positive for an expansion (gamma decreases as the width grows).

    :param beta: inverse temperature of the leg
    :type beta: float
    :param gammaStart: initial spectral scale
    :type gammaStart: float
    :param gammaEnd: final spectral scale
    :type gammaEnd: float
    :return: the heat absorbed
    :rtype: float
    """

    beta = requirePositiveFinite("beta", beta)
    gammaStart = requirePositiveFinite("gammaStart", gammaStart)
    gammaEnd = requirePositiveFinite("gammaEnd", gammaEnd)

    return -math.log(gammaEnd / gammaStart) / (2.0 * beta)

def heatIsochoric(gamma: float, betaStart: float, betaEnd: float) -> float:
    """
    heat of a constant-width leg, (1/2)(1/beta_f - 1/beta_i).

    :param gamma: the fixed spectral scale
    :type gamma: float
    :param betaStart: initial inverse temperature
    :type betaStart: float
    :param betaEnd: final inverse temperature
    :type betaEnd: float
    :return: the heat absorbed, positive when heating
    :rtype: float
    """

    requirePositiveFinite("gamma", gamma)
    betaStart = requirePositiveFinite("betaStart", betaStart)
    betaEnd = requirePositiveFinite("betaEnd", betaEnd)

    return 0.5 * (1.0 / betaEnd - 1.0 / betaStart)

def heatAdiabatic(leg: Process) -> float:
    """
    heat of a beta*gamma = constant leg: the temperature term and the width
    integral cancel exactly, so the result is zero.

    :param leg: an adiabatic leg
    :type leg: Process
    :return: 0.0
    :rtype: float
    :raises ContractError: if the leg is not adiabatic
    """

    if leg.kind is not ProcessKind.ADIABATIC:
        raise ContractError(f"heatAdiabatic expects an adiabatic leg, got {leg.kind.value}")

    return 0.0

def heatGeneral(leg: Process) -> float:
    """
    closed-form heat of any supported leg.

    :param leg: the leg
    :type leg: Process
    :return: the heat absorbed
    :rtype: float
    :raises ContractError: for an unsupported leg shape
    """

    if leg.kind is ProcessKind.ISOTHERMAL:
        return heatIsothermal(leg.start.beta, leg.start.gamma, leg.end.gamma)

    if leg.kind is ProcessKind.ISOCHORIC:
        return heatIsochoric(leg.start.gamma, leg.start.beta, leg.end.beta)

    if leg.kind is ProcessKind.ADIABATIC:
        return heatAdiabatic(leg)

    raise ContractError(f"unsupported leg shape {leg.kind!r}")

def gupHeatPotential(beta: float, lam: float) -> float:
    """
    -lambda / (2 beta^2); the gup heat correction of a leg is the difference
    of this potential between its endpoints.
    """

    return -lam / (2.0 * beta * beta)

def gupCorrection(betaStart: float, betaEnd: float, lam: float) -> float:
    """
    gup heat correction -(lambda / 2)(1 / beta_f^2 - 1 / beta_i^2).
    independent of how gamma changes along the leg.
    """

    return gupHeatPotential(betaEnd, lam) - gupHeatPotential(betaStart, lam)

def heatGup(
    leg: Process,
    params: GupParams,
    deltaMax: float = DEFAULT_DELTA_MAX
) -> HeatResult:
    """
    heat of a leg with the gup correction.

    :param leg: the leg
    :type leg: Process
    :param params: gup parameters
    :type params: GupParams
    :param deltaMax: validity gate threshold, applied at both endpoints
    :type deltaMax: float
    :return: heat without and with the correction
    :rtype: HeatResult
    :raises RegimeError: if the gate fails at either endpoint
    """

    checkGupValidity(params, leg.start.gamma, deltaMax, where="leg start")
    checkGupValidity(params, leg.end.gamma, deltaMax, where="leg end")

    Q = heatGeneral(leg)
    correction = gupCorrection(leg.start.beta, leg.end.beta, params.lam)

    return HeatResult(
        Q=Q,
        QG=Q + correction,
        correction=correction
    )
