"""
reduced deficit functions of the gup-corrected carnot and otto cycles
"""

from ..model.units import requirePositiveFinite
from ..errors import DomainError, PoleError

from typing import Callable

from scipy.optimize import brentq

import logging
import numpy
import math

logger = logging.getLogger(__name__)

DEFAULT_POLE_EXCLUSION = 1e-9

def _ratio(name: str, value: float) -> float:
    value = requirePositiveFinite(name, value)

    if value >= 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {value!r}")

    return value

def _aboveOne(name: str, value: float) -> float:
    value = requirePositiveFinite(name, value)

    if value <= 1.0:
        raise DomainError(f"{name} must exceed 1, got {value!r}")

    return value

def _excludePole(product: float, poleExclusion: float, what: str) -> None:
    if abs(product - 1.0) < poleExclusion:
        raise PoleError(f"{what} = {product!r} lies within {poleExclusion:g} of the pole at 1")

def carnotFigureF(r: float, rL: float, poleExclusion: float = DEFAULT_POLE_EXCLUSION) -> float:
    """
    (delta eta / eta_C) / (lambda T_h) = (1 - r^2) / ln(r r_L).

    :param r: T_cold / T_hot in (0, 1)
    :type r: float
    :param rL: L_C^2 / L_A^2, above 1
    :type rL: float
    :param poleExclusion: half-width of the rejected band around r r_L = 1
    :type poleExclusion: float
    :return: the reduced deficit
    :rtype: float
    :raises PoleError: near r r_L = 1
    """

    r = _ratio("r", r)
    rL = _aboveOne("rL", rL)

    _excludePole(r * rL, poleExclusion, "r * r_L")
    return (1.0 - r * r) / math.log(r * rL)

def ottoFigureF(
    r: float,
    rLO: float,
    fAD: float,
    fCB: float,
    poleExclusion: float = DEFAULT_POLE_EXCLUSION
) -> float:
    """
    (delta eta_O / eta_O) beta_A^2 / (lambda beta_h) evaluated from the corner
    temperatures beta_A = f_AD beta_l and beta_C = f_CB beta_h, with beta_l = 1.

    :param r: T_cold / T_hot in (0, 1)
    :type r: float
    :param rLO: gamma_h / gamma_l, above 1
    :type rLO: float
    :param fAD: beta_A / beta_l in (0, 1)
    :type fAD: float
    :param fCB: beta_C / beta_h, above 1
    :type fCB: float
    :return: the reduced deficit
    :rtype: float
    :raises PoleError: near r r_L^O = 1
    """

    r = _ratio("r", r)
    rLO = _aboveOne("rLO", rLO)
    fAD = _ratio("fAD", fAD)
    fCB = _aboveOne("fCB", fCB)

    _excludePole(r * rLO, poleExclusion, "r * r_L^O")

    betaCold = 1.0
    betaHot = r * betaCold
    betaA = fAD * betaCold
    betaC = fCB * betaHot

    return (1.0 - (betaA / betaC) ** 2) / (1.0 - rLO * r)

def _ottoArranged(r, rLO, fAD, fCB, power, poleExclusion) -> float:
    r = _ratio("r", r)
    rLO = _aboveOne("rLO", rLO)
    fAD = _ratio("fAD", fAD)
    fCB = _aboveOne("fCB", fCB)

    _excludePole(r * rLO, poleExclusion, "r * r_L^O")
    return (1.0 - (fAD / fCB) ** 2 / r ** power) / (1.0 - rLO * r)

def ottoFigurePrinted(
    r: float,
    rLO: float,
    fAD: float,
    fCB: float,
    poleExclusion: float = DEFAULT_POLE_EXCLUSION
) -> float:
    """
    the closed expression with a single power of 1/r on the ratio term.
    differs from ottoFigureF everywhere on 0 < r < 1.
    """

    return _ottoArranged(r, rLO, fAD, fCB, 1, poleExclusion)

def ottoFigureSquaredForm(
    r: float,
    rLO: float,
    fAD: float,
    fCB: float,
    poleExclusion: float = DEFAULT_POLE_EXCLUSION
) -> float:
    return _ottoArranged(r, rLO, fAD, fCB, 2, poleExclusion)

def carnotPositiveBranch(rL: float) -> tuple[float, float]:
    """
    interval of r on which the carnot figure function is positive and decreasing.
    """

    rL = _aboveOne("rL", rL)
    return (1.0 / rL, 1.0)

def ottoPositivityWindow(rLO: float, fAD: float, fCB: float) -> tuple[float, float]:
    """
    interval of r on which ottoFigureF is positive: between 1 / r_L^O, where the
    denominator changes sign, and f_AD / f_CB, where the numerator does.

    :return: (low, high); empty when the two edges coincide
    :rtype: tuple[float, float]
    """

    rLO = _aboveOne("rLO", rLO)
    fAD = _ratio("fAD", fAD)
    fCB = _aboveOne("fCB", fCB)

    edges = sorted((1.0 / rLO, fAD / fCB))
    return (edges[0], edges[1])

def locateSignEdges(
    function: Callable[[float], float],
    lo: float,
    hi: float,
    resolution: int = 1000
) -> list[float]:
    """
    points in [lo, hi] where a continuous function changes sign, bracketed on a
    uniform grid and refined with brentq. zeros that touch without crossing and
    pairs closer than the grid spacing are not resolved.

    :param function: continuous scalar function
    :type function: Callable[[float], float]
    :param lo: interval start
    :type lo: float
    :param hi: interval end
    :type hi: float
    :param resolution: number of grid points
    :type resolution: int
    :return: sorted sign-change locations
    :rtype: list[float]
    """

    if isinstance(resolution, bool) or not isinstance(resolution, int) or resolution < 2:
        raise DomainError(f"resolution must be an integer >= 2, got {resolution!r}")

    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"need finite lo < hi, got [{lo!r}, {hi!r}]")

    grid = numpy.linspace(lo, hi, resolution)
    values = [function(float(x)) for x in grid]
    edges = []

    for index in range(resolution - 1):
        (a, b) = (float(grid[index]), float(grid[index + 1]))
        (fa, fb) = (values[index], values[index + 1])

        if fa == 0.0:
            if not edges or edges[-1] != a:
                edges.append(a)

            continue

        if fb == 0.0:
            continue

        if (fa < 0.0) != (fb < 0.0):
            edges.append(float(brentq(function, a, b, xtol=1e-14, rtol=4 * numpy.finfo(float).eps)))

    if values[-1] == 0.0 and (not edges or edges[-1] != float(grid[-1])):
        edges.append(float(grid[-1]))

    logger.debug(f"sign edges on [{lo:g}, {hi:g}]: {edges}")
    return edges

def ottoSignFunction(rLO: float, fAD: float, fCB: float) -> Callable[[float], float]:
    """
    numerator times denominator of ottoFigureF; continuous in r and of the same
    sign as the figure function away from the pole.
    """

    ratio = (fAD / fCB) ** 2
    return lambda r: (1.0 - ratio / (r * r)) * (1.0 - rLO * r)

def carnotSignFunction(rL: float) -> Callable[[float], float]:
    return lambda r: (1.0 - r * r) * math.log(r * rL)
