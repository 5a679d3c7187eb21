from ..context import CheckContext
from ..base import BaseCheck, CheckResult

from ...cycles.carnot import carnotLedger
from ...cycles.specs import carnotSpecFromRatios
from ...cycles.figures import (
    carnotFigureF,
    ottoFigureF,
    ottoFigurePrinted,
    ottoFigureSquaredForm,
    ottoPositivityWindow,
    ottoSignFunction,
    locateSignEdges,
)

import numpy

# values of (1 - r^2) / ln(r r_L) at r_L = 2
CARNOT_SPOT_VALUES = {0.6: 3.5102815666, 0.9: 0.3232465303}

FIG5_RATIOS = {"rLO": 5.0, "fAD": 0.5, "fCB": 2.0}

def carnotLedgerFigure(r: float, rL: float, betaG: float = 1e-6) -> float:
    """
    the carnot figure value rebuilt from a concrete ledger,
    (delta eta / eta) / (lambda T_hot).
    """

    spec = carnotSpecFromRatios(r, rL, betaG=betaG)
    ledger = carnotLedger(spec)

    return ledger.deltaEta / ledger.eta / (spec.gup.lam * spec.tHot)

class CarnotSpotValuesCheck(BaseCheck):
    id = "carnot-figure-values"
    name = "carnot figure function at reference points and through the ledger"

    def run(self, context: CheckContext) -> CheckResult:
        spotError = 0.0
        routeError = 0.0

        for (r, expected) in CARNOT_SPOT_VALUES.items():
            value = carnotFigureF(r, 2.0)

            spotError = max(spotError, abs(value - expected))
            routeError = max(routeError, abs(carnotLedgerFigure(r, 2.0) - value) / abs(value))

        passed = spotError <= 1e-9 and routeError <= 1e-10
        return CheckResult(
            self.id, passed, spotError, 1e-9,
            f"ledger route relative error {routeError:.3e} (limit 1e-10)"
        )

class CarnotMonotoneCheck(BaseCheck):
    id = "carnot-figure-monotone"
    name = "carnot figure function decreases along both figure sweeps"

    def run(self, context: CheckContext) -> CheckResult:
        inR = [carnotFigureF(float(r), 2.0) for r in numpy.linspace(0.55, 0.95, 41)]
        inRL = [carnotFigureF(0.5, float(rL)) for rL in numpy.linspace(2.1, 10.0, 80)]

        steps = numpy.concatenate([numpy.diff(inR), numpy.diff(inRL)])
        largest = float(steps.max())
        return CheckResult(self.id, largest < 0.0, largest, 0.0, "largest step between neighbouring grid values, must be negative")

class OttoWindowCheck(BaseCheck):
    """
    the otto figure function is positive exactly between 1 / r_L^O and
    f_AD / f_CB. the sign edges are located independently and compared with
    the analytic ones.
    """

    id = "otto-positivity-window"
    name = "positivity window of the otto figure function"

    RESOLUTION = 1e-3

    def run(self, context: CheckContext) -> CheckResult:
        (rLO, fAD, fCB) = (FIG5_RATIOS["rLO"], FIG5_RATIOS["fAD"], FIG5_RATIOS["fCB"])
        (low, high) = ottoPositivityWindow(rLO, fAD, fCB)

        # offset by half a cell so no grid point lands on an edge
        grid = numpy.arange(0.0105, 0.99, self.RESOLUTION)
        edges = locateSignEdges(ottoSignFunction(rLO, fAD, fCB), float(grid[0]), float(grid[-1]), len(grid))

        if len(edges) != 2:
            return CheckResult(self.id, False, None, 1e-6, f"expected two sign edges, found {edges}")

        edgeError = max(abs(edges[0] - low), abs(edges[1] - high))

        misplaced = 0

        for r in grid:
            positive = ottoFigureF(float(r), rLO, fAD, fCB) > 0.0

            if positive != (low < r < high):
                misplaced += 1

        passed = edgeError <= 1e-6 and misplaced == 0
        return CheckResult(
            self.id, passed, edgeError, 1e-6,
            f"window ({low:g}, {high:g}), edges {edges[0]:.9f} {edges[1]:.9f}, misplaced grid points {misplaced}"
        )

class PrintedFormCheck(BaseCheck):
    """
    over the otto window grid, the single-power 1/r arrangement must differ
    visibly from the corner-based evaluation while the 1/r^2 arrangement
    reproduces it.
    """

    id = "otto-printed-form"
    name = "1/r versus 1/r^2 arrangements of the otto figure function"

    def run(self, context: CheckContext) -> CheckResult:
        (lo, hi, steps) = context.fig5
        printedGap = 0.0
        squaredGap = 0.0

        for r in numpy.linspace(lo, hi, steps):
            direct = ottoFigureF(float(r), **FIG5_RATIOS)
            printed = ottoFigurePrinted(float(r), **FIG5_RATIOS)
            squared = ottoFigureSquaredForm(float(r), **FIG5_RATIOS)

            printedGap = max(printedGap, abs(printed - direct) / abs(direct))
            squaredGap = max(squaredGap, abs(squared - direct) / abs(direct))

        passed = printedGap > 0.1 and squaredGap <= 1e-12
        return CheckResult(
            self.id, passed, printedGap, 0.1,
            f"max relative gap of the 1/r form {printedGap:.6g}; 1/r^2 form {squaredGap:.3e} (limit 1e-12)"
        )

CHECKS = [
    CarnotSpotValuesCheck(),
    CarnotMonotoneCheck(),
    OttoWindowCheck(),
    PrintedFormCheck(),
]
