from .units import requirePositiveFinite, requireNonNegativeFinite, HBAR
from .substance import WellSubstance
from ..errors import DomainError

import numbers
import math

def _requireLevel(n: int) -> int:
    # bool is an Integral too
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise DomainError(f"quantum number must be an integer, got {n!r}")

    if n < 1:
        raise DomainError(f"quantum number must be at least 1, got {n!r}")

    return int(n)

def energyLevel(gamma: float, n: int) -> float:
    """
    energy of the n-th level of the well, E_n = gamma * n^2.

    :param gamma: spectral scale
    :type gamma: float
    :param n: quantum number, starting at 1
    :type n: int
    :return: the level energy
    :rtype: float
    :raises DomainError: if n < 1 or gamma is not positive
    """

    gamma = requirePositiveFinite("gamma", gamma)
    n = _requireLevel(n)

    return gamma * n * n

def energyLevelGup(gamma: float, delta: float, n: int) -> float:
    """
    energy of the n-th level with the first-order gup correction,
    E_n^G = gamma * n^2 * (1 + delta * n^2).

    :param gamma: spectral scale
    :type gamma: float
    :param delta: gup expansion parameter, 4 m betaG gamma
    :type delta: float
    :param n: quantum number, starting at 1
    :type n: int
    :return: the corrected level energy
    :rtype: float
    :raises DomainError: if delta < 0, n < 1 or gamma is not positive
    """

    delta = requireNonNegativeFinite("delta", delta)
    base = energyLevel(gamma, n)

    return base * (1.0 + delta * n * n)

def gupLevelFromWell(substance: WellSubstance, betaG: float, n: int) -> float:
    """
    the corrected level written directly in terms of mass and width,
    n^2 pi^2 / (2 m L^2) + n^4 betaG pi^4 / (L^4 m).
    """

    betaG = requireNonNegativeFinite("betaG", betaG)
    n = _requireLevel(n)

    mass = substance.mass
    width = substance.width

    kinetic = (n ** 2) * (math.pi ** 2) * (HBAR ** 2) / (2.0 * mass * width ** 2)
    quartic = (n ** 4) * betaG * (math.pi ** 4) * (HBAR ** 4) / (width ** 4 * mass)

    return kinetic + quartic
