from .units import requirePositiveFinite, requireNonNegativeFinite
from ..errors import RegimeError

from typing import NamedTuple, Optional
from dataclasses import dataclass

import logging
import math

logger = logging.getLogger(__name__)

# the expansion is first order in delta; errors are O(delta^2)
DEFAULT_DELTA_MAX = 1e-3

SQRT_PI = math.sqrt(math.pi)

class GupCoefficients(NamedTuple):
    delta: float
    K: float
    lam: float

@dataclass(frozen=True)
class GupParams:
    """
    strength of the generalized uncertainty correction for a particle.
    betaG = 0 switches the correction off through the same formulas.

    :param betaG: gup parameter, zero or larger
    :type betaG: float
    :param mass: particle mass, same as the working substance
    :type mass: float
    """

    betaG: float
    mass: float

    def __post_init__(self):
        object.__setattr__(self, "betaG", requireNonNegativeFinite("betaG", self.betaG))
        object.__setattr__(self, "mass", requirePositiveFinite("mass", self.mass))

    @property
    def K(self) -> float:
        """
        partition function coefficient K = (3 sqrt(pi) / 2) betaG m.
        """

        return (3.0 * SQRT_PI / 2.0) * self.betaG * self.mass

    @property
    def lam(self) -> float:
        """
        heat coefficient lambda = 6 betaG m.
        """

        return 6.0 * self.betaG * self.mass

    def delta(self, gamma: float) -> float:
        """
        expansion parameter delta = 4 m betaG gamma at a given spectral scale.

        :param gamma: spectral scale
        :type gamma: float
        :return: delta
        :rtype: float
        """

        gamma = requirePositiveFinite("gamma", gamma)
        return 4.0 * self.mass * self.betaG * gamma

    @classmethod
    def off(cls, mass: float = 1.0) -> "GupParams":
        return cls(betaG=0.0, mass=mass)

def gupCoefficients(params: GupParams, gamma: float) -> GupCoefficients:
    """
    derived gup coefficients at a spectral scale.

    :param params: gup parameters
    :type params: GupParams
    :param gamma: spectral scale
    :type gamma: float
    :return: (delta, K, lambda); lambda = 4 K / sqrt(pi)
    :rtype: GupCoefficients
    """

    return GupCoefficients(
        delta=params.delta(gamma),
        K=params.K,
        lam=params.lam
    )

def checkGupValidity(
    params: GupParams,
    gamma: float,
    deltaMax: float = DEFAULT_DELTA_MAX,
    where: Optional[str] = None
) -> float:
    """
    enforce the first-order validity gate delta <= deltaMax.

    :param params: gup parameters
    :type params: GupParams
    :param gamma: spectral scale of the visited state
    :type gamma: float
    :param deltaMax: gate threshold
    :type deltaMax: float
    :param where: optional label of the visited state, used in the error
    :type where: Optional[str]
    :return: the evaluated delta
    :rtype: float
    :raises RegimeError: if delta exceeds the threshold
    """

    deltaMax = requirePositiveFinite("deltaMax", deltaMax)
    delta = params.delta(gamma)

    if delta > deltaMax:
        raise RegimeError(delta, deltaMax, where)

    logger.debug(f"gup gate ok: delta={delta:.3e} <= {deltaMax:.3e} ({where or 'state'})")
    return delta
