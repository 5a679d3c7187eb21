from .report import Report, writeReport

from ..cycles.figures import carnotFigureF, ottoFigureF
from ..model.units import requirePositiveFinite
from ..model.gup import GupParams
from ..config import ConfigController
from ..errors import PoleError, SpecError

from dataclasses import dataclass, field
from typing import Optional
from argparse import Namespace
from enum import Enum

import numbers
import logging
import numpy
import sys

logger = logging.getLogger(__name__)

class FigureTarget(Enum):
    FIG3 = "fig3"
    FIG4 = "fig4"
    FIG5 = "fig5"
    FIG6 = "fig6"

    @property
    def swept(self) -> str:
        return _LAYOUT[self][0]

    @property
    def fixedNames(self) -> tuple[str, ...]:
        return _LAYOUT[self][1]

    @property
    def isCarnot(self) -> bool:
        return self in (FigureTarget.FIG3, FigureTarget.FIG4)

_LAYOUT = {
    FigureTarget.FIG3: ("r", ("rL",)),
    FigureTarget.FIG4: ("rL", ("r",)),
    FigureTarget.FIG5: ("r", ("fAD", "fCB", "rLO")),
    FigureTarget.FIG6: ("rLO", ("fAD", "fCB", "r")),
}

# open intervals of every figure parameter
PARAMETER_DOMAINS = {
    "r": (0.0, 1.0),
    "fAD": (0.0, 1.0),
    "rL": (1.0, numpy.inf),
    "rLO": (1.0, numpy.inf),
    "fCB": (1.0, numpy.inf),
}

MARKER_POSITIVE = "pos"
MARKER_NEGATIVE = "neg"
MARKER_POLE = "pole"

def _inDomain(name: str, value: float) -> bool:
    (low, high) = PARAMETER_DOMAINS[name]
    return low < value < high

@dataclass(frozen=True)
class SweepSpec:
    """
    a figure sweep: one swept parameter on an inclusive linear grid, the
    remaining ones fixed.

    :param target: which figure function to evaluate
    :param fixed: fixed parameters keyed by name
    :param lo: first grid value
    :param hi: last grid value
    :param steps: number of grid points, at least 2
    """

    target: FigureTarget
    fixed: dict[str, float] = field(default_factory=dict)
    lo: float = 0.0
    hi: float = 1.0
    steps: int = 2

    def __post_init__(self):
        if not isinstance(self.target, FigureTarget):
            raise SpecError(f"unknown sweep target {self.target!r}")

        names = set(self.target.fixedNames)

        if set(self.fixed) != names:
            raise SpecError(
                f"{self.target.value} needs fixed parameters {sorted(names)}, got {sorted(self.fixed)}"
            )

        for (name, value) in self.fixed.items():
            if not _inDomain(name, float(value)):
                raise SpecError(f"{name}={value!r} is outside {PARAMETER_DOMAINS[name]} for {self.target.value}")

        if isinstance(self.steps, bool) or not isinstance(self.steps, numbers.Integral) or self.steps < 2:
            raise SpecError(f"steps must be an integer of at least 2, got {self.steps!r}")

        if not self.lo < self.hi:
            raise SpecError(f"sweep range needs min < max, got [{self.lo!r}, {self.hi!r}]")

        swept = self.target.swept

        for value in (self.lo, self.hi):
            if not _inDomain(swept, float(value)):
                raise SpecError(f"{swept}={value!r} is outside {PARAMETER_DOMAINS[swept]} for {self.target.value}")

    def grid(self) -> numpy.ndarray:
        values = numpy.linspace(self.lo, self.hi, self.steps)
        values[-1] = self.hi

        return values

@dataclass(frozen=True)
class SweepRow:
    value: float
    f: Optional[float]
    marker: str

def evaluateFigure(target: FigureTarget, values: dict[str, float], poleExclusion: float) -> float:
    if target.isCarnot:
        return carnotFigureF(values["r"], values["rL"], poleExclusion)

    return ottoFigureF(values["r"], values["rLO"], values["fAD"], values["fCB"], poleExclusion)

def runSweep(spec: SweepSpec, poleExclusion: float) -> list[SweepRow]:
    """
    evaluate the figure function over the grid in grid order. points inside
    the pole band become "pole" rows with no value.

    :param spec: the sweep
    :type spec: SweepSpec
    :param poleExclusion: half-width of the rejected band around the pole
    :type poleExclusion: float
    :return: one row per grid point
    :rtype: list[SweepRow]
    """

    rows = []

    for value in spec.grid():
        values = dict(spec.fixed)
        values[spec.target.swept] = float(value)

        try:
            f = evaluateFigure(spec.target, values, poleExclusion)
        except PoleError:
            logger.debug(f"{spec.target.value}: {spec.target.swept}={float(value)!r} excluded at the pole")
            rows.append(SweepRow(float(value), None, MARKER_POLE))
            continue

        rows.append(SweepRow(float(value), f, MARKER_POSITIVE if f > 0.0 else MARKER_NEGATIVE))

    return rows

def deficitPrefactor(
    target: FigureTarget,
    values: dict[str, float],
    params: GupParams,
    tHot: float
) -> float:
    """
    factor turning a reduced figure value back into the efficiency deficit.
    carnot: lambda T_h eta_C. otto: eta_O lambda beta_h / beta_A^2 with
    beta_A = f_AD beta_h / r.

    :param target: the figure
    :type target: FigureTarget
    :param values: every figure parameter at this grid point
    :type values: dict[str, float]
    :param params: gup parameters
    :type params: GupParams
    :param tHot: hot reservoir temperature
    :type tHot: float
    :return: the prefactor
    :rtype: float
    """

    tHot = requirePositiveFinite("tHot", tHot)
    lam = params.lam
    r = values["r"]

    if target.isCarnot:
        return lam * tHot * (1.0 - r)

    betaHot = 1.0 / tHot
    betaA = values["fAD"] * betaHot / r

    return (1.0 - 1.0 / values["rLO"]) * lam * betaHot / (betaA * betaA)

# command line flag -> figure parameter
FIXED_FLAGS = {
    "r_l": "rL",
    "r": "r",
    "f_ad": "fAD",
    "f_cb": "fCB",
    "r_l_o": "rLO",
}

def sweepSpecFromArguments(arguments: Namespace, config: ConfigController) -> SweepSpec:
    """
    the sweep for a target: packaged default grid, overridden by any flags given.

    :raises SpecError: for a flag the target does not take, or an invalid grid
    """

    target = FigureTarget(arguments.target)
    defaults = config.getValue(f"figures.sweeps.{target.value}")

    fixed = {name: float(value) for (name, value) in defaults["fixed"].items()}

    for (flag, name) in FIXED_FLAGS.items():
        value = getattr(arguments, flag, None)

        if value is None:
            continue

        if name not in target.fixedNames:
            raise SpecError(f"{target.value} sweeps {target.swept} and does not take --{flag.replace('_', '-')}")

        fixed[name] = float(value)

    window = defaults["range"]

    return SweepSpec(
        target=target,
        fixed=fixed,
        lo=float(window["min"] if arguments.min is None else arguments.min),
        hi=float(window["max"] if arguments.max is None else arguments.max),
        steps=int(window["steps"] if arguments.steps is None else arguments.steps)
    )

def cmdSweep(arguments: Namespace, config: ConfigController) -> int:
    """
    figure data: one row per grid point with the swept value, f and its sign
    marker, plus the efficiency deficit when --with-prefactor is given.

    :param arguments: parsed command line
    :type arguments: Namespace
    :param config: merged configuration
    :type config: ConfigController
    :return: exit code
    :rtype: int
    """

    spec = sweepSpecFromArguments(arguments, config)
    params = None

    if arguments.with_prefactor:
        missing = [
            flag for flag in ("beta_g", "mass", "t_hot")
            if getattr(arguments, flag) is None
        ]

        if missing:
            raise SpecError("--with-prefactor needs " + ", ".join(f"--{flag.replace('_', '-')}" for flag in missing))

        params = GupParams(arguments.beta_g, arguments.mass)

    rows = runSweep(spec, config.getValue("figures.poleExclusion"))

    columns = (spec.target.swept, "f", "marker")

    if params is not None:
        columns += ("scaled",)

    report = Report(columns)

    for row in rows:
        values = {spec.target.swept: row.value, "f": row.f, "marker": row.marker}

        if params is not None:
            scaled = None

            if row.f is not None:
                point = dict(spec.fixed)
                point[spec.target.swept] = row.value
                scaled = row.f * deficitPrefactor(spec.target, point, params, arguments.t_hot)

            values["scaled"] = scaled

        report.addRow(values)

    writeReport(report, sys.stdout, arguments.format, config.getValue("report.significantDigits"))
    return 0
