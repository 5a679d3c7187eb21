"""
numerical path integration of dQ = dS / beta

the path is a polyline in (beta, gamma); every segment is cut into equal
sub-intervals and each contributes Delta S times 1/beta at its midpoint.
entropy is the closed-form function of beta * gamma
"""

from .legs import Process, ProcessKind

from ..statmech.closed import entropyClosedForm
from ..model.substance import ThermalPoint
from ..errors import DomainError

from typing import Sequence

import numbers
import numpy
import math

DEFAULT_PATH_STEPS = 10_000
ADIABAT_SUBSTEPS = 4

def _requireSteps(steps: int) -> int:
    if isinstance(steps, bool) or not isinstance(steps, numbers.Integral) or steps < 2:
        raise DomainError(f"steps must be an integer of at least 2, got {steps!r}")

    return int(steps)

def _segmentContributions(start: ThermalPoint, end: ThermalPoint, steps: int) -> numpy.ndarray:
    fractions = numpy.linspace(0.0, 1.0, steps + 1)

    betas = start.beta + fractions * (end.beta - start.beta)
    gammas = start.gamma + fractions * (end.gamma - start.gamma)

    # pin the far end so consecutive segments share the exact vertex
    betas[-1] = end.beta
    gammas[-1] = end.gamma

    entropy = entropyClosedForm(betas * gammas)
    midpointBetas = 0.5 * (betas[:-1] + betas[1:])

    return numpy.diff(entropy) / midpointBetas

def pathHeatOracle(path: Sequence[ThermalPoint], steps: int = DEFAULT_PATH_STEPS) -> float:
    """
    integrate dS / beta along a polyline of states with the midpoint rule.
    converges as steps^-2; accumulation order is fixed.

    :param path: at least two states; consecutive states bound a linear segment
    :type path: Sequence[ThermalPoint]
    :param steps: sub-intervals per segment, at least 2
    :type steps: int
    :return: the heat absorbed along the path
    :rtype: float
    :raises DomainError: for fewer than two states or fewer than two steps
    """

    return _integratePolyline(path, _requireSteps(steps))

def _integratePolyline(path: Sequence[ThermalPoint], steps: int) -> float:
    points = list(path)

    if len(points) < 2:
        raise DomainError(f"path needs at least 2 states, got {len(points)}")

    contributions = [
        _segmentContributions(start, end, steps)
        for (start, end) in zip(points, points[1:])
    ]

    return math.fsum(numpy.concatenate(contributions))

def legPath(leg: Process, vertices: int) -> list[ThermalPoint]:
    """
    polyline following a leg's own constraint. isothermal and isochoric legs are
    straight in (beta, gamma); adiabats get vertices on beta * gamma = constant,
    evenly spaced in log beta.

    :param leg: the leg
    :type leg: Process
    :param vertices: number of vertices for curved legs, at least 2
    :type vertices: int
    :return: the polyline, starting and ending exactly at the leg's endpoints
    :rtype: list[ThermalPoint]
    """

    vertices = _requireSteps(vertices)

    if leg.kind is not ProcessKind.ADIABATIC or leg.start.beta == leg.end.beta:
        return [leg.start, leg.end]

    invariant = leg.start.betaGamma
    betas = numpy.geomspace(leg.start.beta, leg.end.beta, vertices)

    inner = [ThermalPoint(float(beta), invariant / float(beta)) for beta in betas[1:-1]]
    return [leg.start, *inner, leg.end]

def legHeatOracle(leg: Process, steps: int = DEFAULT_PATH_STEPS) -> float:
    """
    path-integrated heat of a leg. adiabats become `steps` chords between
    states on beta * gamma = constant, each cut into a few midpoint sub-steps.
    the chords run off the curve, so the heat falls to zero as steps^-2.

    :param leg: the leg
    :type leg: Process
    :param steps: resolution of the integration
    :type steps: int
    :return: the heat absorbed
    :rtype: float
    """

    steps = _requireSteps(steps)

    if leg.kind is ProcessKind.ADIABATIC:
        return _integratePolyline(legPath(leg, steps + 1), ADIABAT_SUBSTEPS)

    return pathHeatOracle([leg.start, leg.end], steps)
