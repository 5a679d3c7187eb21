from ..context import CheckContext
from ..base import BaseCheck, CheckResult

from ...model.substance import ThermalPoint
from ...model.gup import GupParams
from ...statmech.closed import partitionApprox, n4MomentApprox, thermoClosedForm, thermoGup
from ...statmech.oracle import partitionSumOracle, n4MomentSumOracle, partitionGupSumOracle, thermoOracle
from ...statmech.quantities import ApproximationQuality, classifyApproximation

import math

# beta*gamma far outside the closed-form regime
BREAKDOWN_BETA_GAMMA = 10.0

def _relative(measured: float, reference: float) -> float:
    return abs(measured - reference) / abs(reference)

def _thermoDisagreement(betaGamma: float, context: CheckContext) -> float:
    point = ThermalPoint(betaGamma, 1.0)

    closed = thermoClosedForm(point)
    oracle = thermoOracle(point, tailTol=context.tailTolerance, maxTerms=context.maxTerms)

    return max(_relative(oracle.U, closed.U), _relative(oracle.S, closed.S))

class EulerMaclaurinOffsetCheck(BaseCheck):
    id = "euler-maclaurin-offset"
    name = "integral minus sum of the partition function is 1/2"

    BETA_GAMMAS = (1e-5, 1e-4, 1e-3)

    def run(self, context: CheckContext) -> CheckResult:
        offsets = []

        for betaGamma in self.BETA_GAMMAS:
            point = ThermalPoint(betaGamma, 1.0)
            offsets.append(partitionApprox(point) - partitionSumOracle(point, context.tailTolerance, context.maxTerms))

        worst = max(abs(offset - 0.5) for offset in offsets)
        detail = "offsets " + " ".join(f"{offset:.6f}" for offset in offsets)

        return self.below(worst, 0.01, detail)

class ClosedFormValidityCheck(BaseCheck):
    """
    compares U and S of the closed form with the summed spectrum at the
    requested beta*gamma. inside the trusted regime they must agree; far
    outside it they must visibly disagree.
    """

    id = "closed-form-validity"
    name = "closed-form potentials against the summed spectrum"

    AGREEMENT = 0.01
    DISAGREEMENT = 0.1

    def run(self, context: CheckContext) -> CheckResult:
        betaGamma = context.betaGamma
        quality = classifyApproximation(betaGamma, context.okMax, context.marginalMax)
        measured = _thermoDisagreement(betaGamma, context)

        detail = f"beta*gamma={betaGamma:g} quality={quality.value}"

        if quality is ApproximationQuality.OK:
            return self.below(measured, self.AGREEMENT, detail + " expects agreement")

        if quality is ApproximationQuality.INVALID:
            return self.above(measured, self.DISAGREEMENT, detail + " expects disagreement")

        return CheckResult(self.id, True, measured, None, detail + " reported only")

class ClosedFormBreakdownCheck(BaseCheck):
    id = "closed-form-breakdown"
    name = "closed form fails where beta*gamma is large"

    def run(self, context: CheckContext) -> CheckResult:
        measured = _thermoDisagreement(BREAKDOWN_BETA_GAMMA, context)
        return self.above(measured, 0.1, f"beta*gamma={BREAKDOWN_BETA_GAMMA:g} expects disagreement")

class FourthMomentCheck(BaseCheck):
    id = "fourth-moment"
    name = "n^4 moment integral against its sum"

    def run(self, context: CheckContext) -> CheckResult:
        point = ThermalPoint(context.betaGamma, 1.0)

        if classifyApproximation(point.betaGamma, context.okMax, context.marginalMax) is not ApproximationQuality.OK:
            point = ThermalPoint(1e-4, 1.0)

        measured = _relative(n4MomentSumOracle(point, context.tailTolerance, context.maxTerms), n4MomentApprox(point))
        return self.below(measured, 1e-9, f"beta*gamma={point.betaGamma:g}")

class GupPartitionShiftCheck(BaseCheck):
    """
    the first-order gup shift of Z, -K (beta^3 gamma)^(-1/2), against the
    difference of the two summed spectra. delta is kept at 1e-3 beta*gamma so
    the neglected second order stays near 0.5%.
    """

    id = "gup-partition-shift"
    name = "first-order gup shift of the partition function"

    def run(self, context: CheckContext) -> CheckResult:
        betaGamma = 1e-4
        point = ThermalPoint(betaGamma, 1.0)
        params = GupParams(betaG=2.5e-4 * betaGamma, mass=1.0)

        closedShift = -params.K * (point.beta ** 3 * point.gamma) ** -0.5
        summedShift = (
            partitionGupSumOracle(point, params, context.tailTolerance, context.maxTerms)
            - partitionSumOracle(point, context.tailTolerance, context.maxTerms)
        )

        return self.below(_relative(summedShift, closedShift), 0.02, f"delta={params.delta(point.gamma):.3e}")

class GupEntropyWidthCheck(BaseCheck):
    id = "gup-entropy-width"
    name = "gup entropy shift does not depend on the well width"

    def run(self, context: CheckContext) -> CheckResult:
        params = GupParams(betaG=1e-6, mass=1.0)
        beta = 2.0

        # gamma scales as 1/L^2, so widths 4x apart give gammas 16x apart
        narrowPoint = ThermalPoint(beta, 1e-2)
        widePoint = ThermalPoint(beta, 1e-2 / 16.0)

        narrow = thermoGup(narrowPoint, params, context.deltaMax)
        wide = thermoGup(widePoint, params, context.deltaMax)

        measured = abs(narrow.entropyShift - wide.entropyShift) / abs(narrow.entropyShift)
        subtracted = math.fabs(
            (narrow.SG - thermoClosedForm(narrowPoint).S) - (wide.SG - thermoClosedForm(widePoint).S)
        )

        return self.below(measured, 1e-14, f"|dS_narrow - dS_wide| by subtraction {subtracted:.3e}")

CHECKS = [
    EulerMaclaurinOffsetCheck(),
    ClosedFormValidityCheck(),
    ClosedFormBreakdownCheck(),
    FourthMomentCheck(),
    GupPartitionShiftCheck(),
    GupEntropyWidthCheck(),
]
