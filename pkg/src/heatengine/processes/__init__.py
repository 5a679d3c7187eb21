from .legs import Process, ProcessKind, ADIABATIC_TOLERANCE, adiabaticMismatch, isClosed
from .heat import (
    HeatResult,
    heatIsothermal,
    heatIsochoric,
    heatAdiabatic,
    heatGeneral,
    heatGup,
    gupCorrection,
    gupHeatPotential,
)
from .path import pathHeatOracle, legPath, legHeatOracle, DEFAULT_PATH_STEPS
