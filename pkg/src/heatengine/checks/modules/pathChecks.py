from ..context import CheckContext
from ..base import BaseCheck, CheckResult

from ...processes.legs import Process, ProcessKind
from ...processes.heat import heatGeneral
from ...processes.path import pathHeatOracle, legHeatOracle
from ...model.substance import ThermalPoint

from scipy.integrate import quad

import math

def _randomStraightLeg(rng, kind: ProcessKind) -> Process:
    (betaStart, betaEnd) = rng.uniform(0.5, 5.0, size=2)
    (gammaStart, gammaEnd) = 10.0 ** rng.uniform(-4.0, -1.0, size=2)

    if kind is ProcessKind.ISOTHERMAL:
        return Process.isothermal(float(betaStart), float(gammaStart), float(gammaEnd))

    return Process.isochoric(float(gammaStart), float(betaStart), float(betaEnd))

def _quadratureHeat(leg: Process) -> float:
    """
    T dS along the straight parametrization x in [0, 1], with
    dS/dx = -(beta'/beta + gamma'/gamma) / 2 from the closed-form entropy.
    """

    (b0, g0) = (leg.start.beta, leg.start.gamma)
    (db, dg) = (leg.end.beta - b0, leg.end.gamma - g0)

    def integrand(x: float) -> float:
        beta = b0 + x * db
        gamma = g0 + x * dg

        return -0.5 * (db / beta + dg / gamma) / beta

    (value, _) = quad(integrand, 0.0, 1.0, epsabs=0.0, epsrel=1e-12, limit=200)
    return value

class StraightLegOracleCheck(BaseCheck):
    id = "path-oracle-isothermal"
    name = "closed-form isothermal heat against path integration"

    kind = ProcessKind.ISOTHERMAL
    tolerance = 1e-8

    LEGS = 20

    def run(self, context: CheckContext) -> CheckResult:
        rng = context.rng(self.id)
        worst = 0.0

        for _ in range(self.LEGS):
            leg = _randomStraightLeg(rng, self.kind)
            closed = heatGeneral(leg)

            if closed == 0.0:
                continue

            worst = max(worst, abs(pathHeatOracle([leg.start, leg.end], context.steps) - closed) / abs(closed))

        return self.below(worst, self.tolerance, f"{self.LEGS} legs at {context.steps} steps")

class IsochoricOracleCheck(StraightLegOracleCheck):
    id = "path-oracle-isochoric"
    name = "closed-form isochoric heat against path integration"

    kind = ProcessKind.ISOCHORIC
    tolerance = 1e-6

class QuadratureCheck(BaseCheck):
    id = "heat-quadrature"
    name = "closed-form heat against adaptive quadrature"

    LEGS = 20

    def run(self, context: CheckContext) -> CheckResult:
        rng = context.rng(self.id)
        worst = 0.0

        for kind in (ProcessKind.ISOTHERMAL, ProcessKind.ISOCHORIC):
            for _ in range(self.LEGS):
                leg = _randomStraightLeg(rng, kind)
                closed = heatGeneral(leg)

                if closed == 0.0:
                    continue

                worst = max(worst, abs(_quadratureHeat(leg) - closed) / abs(closed))

        return self.below(worst, 1e-10, f"{2 * self.LEGS} legs")

class ConvergenceOrderCheck(BaseCheck):
    """
    the midpoint rule error on an isochoric leg should fall as steps^-2.
    """

    id = "path-oracle-order"
    name = "second-order convergence of the path oracle"

    COARSE = 50

    def run(self, context: CheckContext) -> CheckResult:
        leg = Process.isochoric(1e-3, 0.2, 2.0)
        closed = heatGeneral(leg)

        coarse = abs(pathHeatOracle([leg.start, leg.end], self.COARSE) - closed)
        fine = abs(pathHeatOracle([leg.start, leg.end], 2 * self.COARSE) - closed)

        order = math.log2(coarse / fine)
        return self.below(abs(order - 2.0), 0.1, f"observed order {order:.4f}")

class AdiabaticHeatCheck(BaseCheck):
    id = "adiabatic-heat-vanishing"
    name = "path-integrated heat along random adiabats vanishes"

    def run(self, context: CheckContext) -> CheckResult:
        rng = context.rng(self.id)
        worst = 0.0

        for _ in range(context.randomAdiabats):
            start = ThermalPoint(float(rng.uniform(0.1, 5.0)), float(10.0 ** rng.uniform(-4.0, -1.0)))
            leg = Process.adiabatic(start, start.gamma * float(10.0 ** rng.uniform(-1.0, 1.0)))

            betaMin = min(leg.start.beta, leg.end.beta)
            worst = max(worst, abs(legHeatOracle(leg, context.steps)) * betaMin)

        return self.below(worst, 1e-8, f"{context.randomAdiabats} adiabats, |Q| scaled by beta_min")

CHECKS = [
    StraightLegOracleCheck(),
    IsochoricOracleCheck(),
    QuadratureCheck(),
    ConvergenceOrderCheck(),
    AdiabaticHeatCheck(),
]
