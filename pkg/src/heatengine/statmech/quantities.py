from dataclasses import dataclass
from enum import Enum

import math

# S0 = 1/2 + ln(sqrt(pi) / 2); reported, never used in heat calculations
ENTROPY_CONSTANT = 0.5 + math.log(math.sqrt(math.pi) / 2.0)

QUALITY_OK_MAX = 1e-3
QUALITY_MARGINAL_MAX = 0.1

class ApproximationQuality(Enum):
    OK = "ok"
    MARGINAL = "marginal"
    INVALID = "invalid"

    @property
    def rank(self) -> int:
        return _QUALITY_RANK[self]

_QUALITY_RANK = {
    ApproximationQuality.OK: 0,
    ApproximationQuality.MARGINAL: 1,
    ApproximationQuality.INVALID: 2,
}

def classifyApproximation(
    betaGamma: float,
    okMax: float = QUALITY_OK_MAX,
    marginalMax: float = QUALITY_MARGINAL_MAX
) -> ApproximationQuality:
    """
    classify how far the integral approximation of the partition sum can be
    trusted; the relative gap between sum and integral grows like sqrt(beta*gamma/pi).

    :param betaGamma: the product beta * gamma
    :type betaGamma: float
    :return: the quality flag
    :rtype: ApproximationQuality
    """

    if betaGamma <= okMax:
        return ApproximationQuality.OK

    if betaGamma <= marginalMax:
        return ApproximationQuality.MARGINAL

    return ApproximationQuality.INVALID

def worstQuality(qualities) -> ApproximationQuality:
    return max(qualities, key=lambda quality: quality.rank, default=ApproximationQuality.OK)

@dataclass(frozen=True)
class StatmechQuantities:
    """
    partition function and thermodynamic potentials of one state (k = 1).

    :param Z: partition function
    :param F: free energy
    :param U: internal energy
    :param S: entropy
    :param S0: the entropy constant, metadata only
    :param quality: trust level of the integral approximation at this state
    """

    Z: float
    F: float
    U: float
    S: float
    S0: float = ENTROPY_CONSTANT
    quality: ApproximationQuality = ApproximationQuality.OK

@dataclass(frozen=True)
class GupStatmechQuantities:
    """
    gup-corrected counterparts of StatmechQuantities, plus the shifts
    evaluated directly so they can be compared without cancellation.
    """

    ZG: float
    FG: float
    UG: float
    SG: float

    freeEnergyShift: float
    internalEnergyShift: float
    entropyShift: float
