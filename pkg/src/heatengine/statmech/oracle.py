"""
brute-force series oracles

these evaluate the partition sums term by term, with a deterministic
truncation chosen from an analytic bound on the discarded tail. they exist
to check the closed forms, not to replace them
"""

from .quantities import StatmechQuantities, ENTROPY_CONSTANT, classifyApproximation

from ..model.units import requirePositiveFinite
from ..model.substance import ThermalPoint
from ..model.gup import GupParams
from ..errors import ConvergenceError, DomainError

from scipy.special import logsumexp, gammaincc, gamma as gammaFunction
from typing import Callable, Optional

import logging
import numpy
import math

logger = logging.getLogger(__name__)

DEFAULT_TAIL_TOLERANCE = 1e-15
MAX_TERMS = 10_000_000

# optimal central-difference step relative to beta
DEFAULT_RELATIVE_STEP = numpy.finfo(float).eps ** (1.0 / 3.0)

def gaussianTailBound(a: float, terms: int) -> float:
    """
    upper bound on sum_{n > N} exp(-a n^2) from the integral comparison
    int_N^inf exp(-a x^2) dx <= exp(-a N^2) / (2 a N).

    :param a: the gaussian coefficient beta * gamma
    :type a: float
    :param terms: truncation point N
    :type terms: int
    :return: the bound
    :rtype: float
    """

    return math.exp(-a * terms * terms) / (2.0 * a * terms)

def quarticTailIntegral(a: float, terms: int) -> float:
    """
    exact value of int_N^inf x^4 exp(-a x^2) dx, Gamma(5/2, a N^2) / (2 a^(5/2)).
    bounds the discarded sum once N is past the summand's maximum at sqrt(2/a).
    """

    upper = gammaFunction(2.5) * gammaincc(2.5, a * terms * terms)
    return float(upper / (2.0 * a ** 2.5))

def truncationPoint(
    tail: Callable[[int], float],
    tailTol: float,
    minimumTerms: int = 1,
    maxTerms: int = MAX_TERMS
) -> int:
    """
    smallest N >= minimumTerms with tail(N) < tailTol, found by doubling then bisection.
    tail must be decreasing in N.

    :param tail: bound on the discarded tail after N terms
    :type tail: Callable[[int], float]
    :param tailTol: tolerance on the tail
    :type tailTol: float
    :param minimumTerms: lower limit on N
    :type minimumTerms: int
    :param maxTerms: hard cap on N
    :type maxTerms: int
    :return: the truncation point
    :rtype: int
    :raises ConvergenceError: if the cap is reached first
    """

    tailTol = requirePositiveFinite("tailTol", tailTol)

    upper = max(1, int(minimumTerms))

    if upper > maxTerms:
        raise ConvergenceError(
            f"series needs at least {upper} terms, above the cap of {maxTerms}",
            termsReached=upper
        )

    if tail(upper) < tailTol:
        return upper

    lower = upper

    while tail(upper) >= tailTol:
        lower = upper
        upper *= 2

        if upper > maxTerms:
            raise ConvergenceError(
                f"series tail still above {tailTol:g} after {lower} terms (cap {maxTerms})",
                termsReached=lower
            )

    # tail(lower) fails, tail(upper) passes
    while upper - lower > 1:
        middle = (lower + upper) // 2

        if tail(middle) < tailTol:
            upper = middle
        else:
            lower = middle

    return upper

def _levels(count: int) -> numpy.ndarray:
    return numpy.arange(1, count + 1, dtype=float)

def partitionSumOracle(
    point: ThermalPoint,
    tailTol: float = DEFAULT_TAIL_TOLERANCE,
    maxTerms: int = MAX_TERMS
) -> float:
    """
    the partition sum evaluated term by term, sum_{n=1..N} exp(-beta gamma n^2).

    :param point: the state
    :type point: ThermalPoint
    :param tailTol: bound on the discarded tail
    :type tailTol: float
    :param maxTerms: hard cap on the number of terms
    :type maxTerms: int
    :return: Z within tailTol
    :rtype: float
    :raises ConvergenceError: if the cap is reached
    """

    a = point.betaGamma
    terms = truncationPoint(lambda count: gaussianTailBound(a, count), tailTol, maxTerms=maxTerms)

    n = _levels(terms)
    total = math.fsum(numpy.exp(-a * n * n))

    logger.debug(f"partition sum at beta*gamma={a:.3e}: {terms} terms")
    return total

def n4MomentSumOracle(
    point: ThermalPoint,
    tailTol: float = DEFAULT_TAIL_TOLERANCE,
    maxTerms: int = MAX_TERMS
) -> float:
    """
    sum_{n=1..N} n^4 exp(-beta gamma n^2) with an exact tail integral as the bound.
    """

    a = point.betaGamma
    peak = math.ceil(math.sqrt(2.0 / a))

    terms = truncationPoint(
        lambda count: quarticTailIntegral(a, count),
        tailTol,
        minimumTerms=peak,
        maxTerms=maxTerms
    )

    n = _levels(terms)
    total = math.fsum(n ** 4 * numpy.exp(-a * n * n))

    logger.debug(f"fourth moment sum at beta*gamma={a:.3e}: {terms} terms")
    return total

def _gupEnergies(point: ThermalPoint, params: GupParams, terms: int) -> numpy.ndarray:
    n = _levels(terms)
    delta = params.delta(point.gamma)

    return point.gamma * n * n * (1.0 + delta * n * n)

def partitionGupSumOracle(
    point: ThermalPoint,
    params: GupParams,
    tailTol: float = DEFAULT_TAIL_TOLERANCE,
    maxTerms: int = MAX_TERMS
) -> float:
    """
    partition sum over the exact gup spectrum gamma n^2 (1 + delta n^2).
    each term is below its non-gup counterpart, so the gaussian bound still holds.

    :param point: the state
    :type point: ThermalPoint
    :param params: gup parameters
    :type params: GupParams
    :param tailTol: bound on the discarded tail
    :type tailTol: float
    :return: Z^G within tailTol
    :rtype: float
    """

    a = point.betaGamma
    terms = truncationPoint(lambda count: gaussianTailBound(a, count), tailTol, maxTerms=maxTerms)

    energies = _gupEnergies(point, params, terms)
    return math.fsum(numpy.exp(-point.beta * energies))

def thermoOracle(
    point: ThermalPoint,
    params: Optional[GupParams] = None,
    tailTol: float = DEFAULT_TAIL_TOLERANCE,
    h: float = DEFAULT_RELATIVE_STEP,
    maxTerms: int = MAX_TERMS
) -> StatmechQuantities:
    """
    potentials from the exact spectrum: ln Z by summation, U by a central
    difference of ln Z in beta, F = -ln Z / beta and S = beta (U - F).
    uses the gup spectrum when params carries a non-zero betaG.

    :param point: the state
    :type point: ThermalPoint
    :param params: optional gup parameters
    :type params: Optional[GupParams]
    :param tailTol: bound on the discarded tail of each sum
    :type tailTol: float
    :param h: central-difference step relative to beta
    :type h: float
    :return: the quantities; quality describes the closed form at this state
    :rtype: StatmechQuantities
    :raises ConvergenceError: if a sum reaches the term cap
    """

    h = requirePositiveFinite("h", h)

    if h >= 0.5:
        raise DomainError(f"relative step h must be below 0.5, got {h!r}")

    if params is None:
        params = GupParams.off()

    beta = point.beta
    step = h * beta

    # the smallest beta needs the most terms
    a = (beta - step) * point.gamma
    terms = truncationPoint(lambda count: gaussianTailBound(a, count), tailTol, maxTerms=maxTerms)

    energies = _gupEnergies(point, params, terms)

    def logPartition(b: float) -> float:
        return float(logsumexp(-b * energies))

    logZ = logPartition(beta)
    U = -(logPartition(beta + step) - logPartition(beta - step)) / (2.0 * step)
    F = -logZ / beta

    logger.debug(f"thermo oracle at beta={beta:.3e}, gamma={point.gamma:.3e}: {terms} terms")

    return StatmechQuantities(
        Z=math.exp(logZ),
        F=F,
        U=U,
        S=beta * (U - F),
        S0=ENTROPY_CONSTANT,
        quality=classifyApproximation(point.betaGamma)
    )
