"""
closed-form partition function and potentials of the well

the partition sum is replaced by its gaussian integral, which is accurate
when beta * gamma is small; see classifyApproximation for the policy
"""

from .quantities import (
    StatmechQuantities,
    GupStatmechQuantities,
    ApproximationQuality,
    ENTROPY_CONSTANT,
    classifyApproximation,
)

from ..model.gup import GupParams, checkGupValidity, DEFAULT_DELTA_MAX, SQRT_PI
from ..model.substance import ThermalPoint
from ..errors import DomainError

import numpy
import math

def _finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise DomainError(f"{name} is not finite (beta*gamma out of range)")

    return value

def partitionApprox(point: ThermalPoint) -> float:
    """
    integral approximation of the partition function, (1/2) sqrt(pi / (beta gamma)).

    :param point: the state
    :type point: ThermalPoint
    :return: Z
    :rtype: float
    :raises DomainError: if the result overflows or underflows
    """

    value = 0.5 * math.sqrt(math.pi / point.betaGamma)

    if value <= 0.0:
        raise DomainError("partition function underflowed to zero")

    return _finite("partition function", value)

def n4MomentApprox(point: ThermalPoint) -> float:
    """
    integral approximation of sum n^4 exp(-beta gamma n^2), (3 sqrt(pi) / 8) (beta gamma)^(-5/2).

    :param point: the state
    :type point: ThermalPoint
    :return: the fourth moment
    :rtype: float
    """

    value = (3.0 * SQRT_PI / 8.0) * point.betaGamma ** -2.5

    if value <= 0.0:
        raise DomainError("fourth moment underflowed to zero")

    return _finite("fourth moment", value)

def partitionGup(
    point: ThermalPoint,
    params: GupParams,
    deltaMax: float = DEFAULT_DELTA_MAX
) -> float:
    """
    first-order gup partition function, Z - K (beta^3 gamma)^(-1/2).

    :param point: the state
    :type point: ThermalPoint
    :param params: gup parameters
    :type params: GupParams
    :param deltaMax: validity gate threshold
    :type deltaMax: float
    :return: Z^G
    :rtype: float
    :raises RegimeError: if the validity gate fails
    """

    checkGupValidity(params, point.gamma, deltaMax)

    correction = params.K * (point.beta ** 3 * point.gamma) ** -0.5
    return partitionApprox(point) - _finite("gup partition correction", correction)

def thermoClosedForm(point: ThermalPoint) -> StatmechQuantities:
    """
    closed-form Z, F, U and S of the well at one state.
    U = 1/(2 beta) and S = 1/2 + ln Z follow from the integral approximation.

    :param point: the state
    :type point: ThermalPoint
    :return: the quantities, tagged with their approximation quality
    :rtype: StatmechQuantities
    """

    Z = partitionApprox(point)
    logZ = math.log(Z)

    return StatmechQuantities(
        Z=Z,
        F=-logZ / point.beta,
        U=1.0 / (2.0 * point.beta),
        S=0.5 + logZ,
        S0=ENTROPY_CONSTANT,
        quality=classifyApproximation(point.betaGamma)
    )

def entropyClosedForm(betaGamma: float) -> float:
    """
    closed-form entropy as a function of beta * gamma alone, S0 - ln(beta gamma) / 2.
    vectorizes over numpy arrays.
    """

    return ENTROPY_CONSTANT - 0.5 * numpy.log(betaGamma)

def thermoGup(
    point: ThermalPoint,
    params: GupParams,
    deltaMax: float = DEFAULT_DELTA_MAX
) -> GupStatmechQuantities:
    """
    gup-corrected potentials. the shifts depend on beta only, never on gamma,
    so they are independent of the well width.

    :param point: the state
    :type point: ThermalPoint
    :param params: gup parameters
    :type params: GupParams
    :param deltaMax: validity gate threshold
    :type deltaMax: float
    :return: the corrected quantities and their shifts
    :rtype: GupStatmechQuantities
    """

    base = thermoClosedForm(point)
    ZG = partitionGup(point, params, deltaMax)

    beta = point.beta
    K = params.K

    freeEnergyShift = 2.0 * K / (SQRT_PI * beta ** 2)
    internalEnergyShift = -2.0 * K / (SQRT_PI * beta ** 2)
    entropyShift = -4.0 * K / (SQRT_PI * beta)

    return GupStatmechQuantities(
        ZG=ZG,
        FG=base.F + freeEnergyShift,
        UG=base.U + internalEnergyShift,
        SG=base.S + entropyShift,
        freeEnergyShift=freeEnergyShift,
        internalEnergyShift=internalEnergyShift,
        entropyShift=entropyShift
    )
