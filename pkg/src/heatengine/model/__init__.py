from .units import (
    UnitsConvention,
    NATURAL_UNITS,
    HBAR,
    BOLTZMANN,
    requirePositiveFinite,
    requireNonNegativeFinite,
    betaFromTemperature,
)
from .substance import WellSubstance, ThermalPoint, gammaOf, widthForGamma
from .spectrum import energyLevel, energyLevelGup, gupLevelFromWell
from .gup import (
    GupParams,
    GupCoefficients,
    gupCoefficients,
    checkGupValidity,
    DEFAULT_DELTA_MAX,
)
