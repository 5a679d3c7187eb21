from ..model.units import requirePositiveFinite
from ..model.substance import WellSubstance, gammaOf
from ..model.gup import GupParams
from ..errors import SpecError

from dataclasses import dataclass
from typing import NamedTuple, Optional

import math

class CarnotRatios(NamedTuple):
    r: float
    rL: float

class OttoRatios(NamedTuple):
    r: float
    rLO: float

def _positive(name: str, value: float) -> float:
    try:
        return requirePositiveFinite(name, value)
    except ValueError as error:
        raise SpecError(str(error)) from None

def _gupFor(gup: Optional[GupParams], mass: float) -> GupParams:
    if gup is None:
        return GupParams.off(mass)

    if gup.mass != mass:
        raise SpecError(f"gup mass {gup.mass!r} differs from the working substance mass {mass!r}")

    return gup

@dataclass(frozen=True)
class CarnotSpec:
    """
    endpoints of a quantum carnot cycle: isothermal expansion A -> B at tHot,
    adiabatic expansion B -> C, isothermal compression C -> D at tCold,
    adiabatic compression D -> A.

    :param tHot: hot reservoir temperature
    :param tCold: cold reservoir temperature, below tHot
    :param lA: well width at A
    :param lB: well width at B, above lA
    :param mass: particle mass
    :param gup: gup parameters; defaults to betaG = 0
    """

    tHot: float
    tCold: float
    lA: float
    lB: float
    mass: float
    gup: Optional[GupParams] = None

    def __post_init__(self):
        for name in ("tHot", "tCold", "lA", "lB", "mass"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))

        if self.tHot <= self.tCold:
            raise SpecError(f"T_hot ({self.tHot:g}) must exceed T_cold ({self.tCold:g})")

        if self.lB <= self.lA:
            raise SpecError(f"L_B ({self.lB:g}) must exceed L_A ({self.lA:g}) for an isothermal expansion")

        object.__setattr__(self, "gup", _gupFor(self.gup, self.mass))

    @property
    def betaHot(self) -> float:
        return 1.0 / self.tHot

    @property
    def betaCold(self) -> float:
        return 1.0 / self.tCold

    @property
    def lC(self) -> float:
        return self.lB * math.sqrt(self.tHot / self.tCold)

    @property
    def lD(self) -> float:
        return self.lA * math.sqrt(self.tHot / self.tCold)

    def gammaAt(self, width: float) -> float:
        return gammaOf(WellSubstance(self.mass, width))

@dataclass(frozen=True)
class OttoSpec:
    """
    endpoints of a quantum otto cycle: constant-width heating A -> B at lSmall,
    adiabatic expansion B -> C, constant-width cooling C -> D at lLarge,
    adiabatic compression D -> A. B sits at tHot and D at tCold.

    fAD and fCB are the ratios beta_A / beta_D and beta_C / beta_B used by the
    first-order deficit; left out, they take the non-gup values gamma_l / gamma_h
    and gamma_h / gamma_l.
    """

    tHot: float
    tCold: float
    lSmall: float
    lLarge: float
    mass: float
    gup: Optional[GupParams] = None
    fAD: Optional[float] = None
    fCB: Optional[float] = None

    def __post_init__(self):
        for name in ("tHot", "tCold", "lSmall", "lLarge", "mass"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))

        if self.tHot <= self.tCold:
            raise SpecError(f"T_hot ({self.tHot:g}) must exceed T_cold ({self.tCold:g})")

        if self.lSmall >= self.lLarge:
            raise SpecError(f"L_small ({self.lSmall:g}) must be below L_large ({self.lLarge:g})")

        if self.fAD is not None:
            fAD = _positive("fAD", self.fAD)

            if fAD >= 1.0:
                raise SpecError(f"f_AD must lie in (0, 1), got {fAD:g}")

            object.__setattr__(self, "fAD", fAD)

        if self.fCB is not None:
            fCB = _positive("fCB", self.fCB)

            if fCB <= 1.0:
                raise SpecError(f"f_CB must exceed 1, got {fCB:g}")

            object.__setattr__(self, "fCB", fCB)

        object.__setattr__(self, "gup", _gupFor(self.gup, self.mass))

    @property
    def betaHot(self) -> float:
        return 1.0 / self.tHot

    @property
    def betaCold(self) -> float:
        return 1.0 / self.tCold

    @property
    def gammaHigh(self) -> float:
        return gammaOf(WellSubstance(self.mass, self.lSmall))

    @property
    def gammaLow(self) -> float:
        return gammaOf(WellSubstance(self.mass, self.lLarge))

    @property
    def usesDefaultRatios(self) -> bool:
        return self.fAD is None and self.fCB is None

    @property
    def effectiveFAD(self) -> float:
        return self.fAD if self.fAD is not None else self.gammaLow / self.gammaHigh

    @property
    def effectiveFCB(self) -> float:
        return self.fCB if self.fCB is not None else self.gammaHigh / self.gammaLow

def carnotRatios(spec: CarnotSpec) -> CarnotRatios:
    """
    r = T_cold / T_hot and r_L = L_C^2 / L_A^2, the largest over the smallest width squared.
    """

    return CarnotRatios(
        r=spec.tCold / spec.tHot,
        rL=(spec.lC / spec.lA) ** 2
    )

def ottoRatios(spec: OttoSpec) -> OttoRatios:
    return OttoRatios(
        r=spec.tCold / spec.tHot,
        rLO=spec.gammaHigh / spec.gammaLow
    )

def carnotSpecFromRatios(
    r: float,
    rL: float,
    tHot: float = 1.0,
    lA: float = 1.0,
    mass: float = 1.0,
    betaG: float = 0.0
) -> CarnotSpec:
    """
    a concrete carnot cycle realizing the ratios (r, r_L).
    needs r * r_L > 1 so the isothermal leg is an expansion.

    :param r: temperature ratio T_cold / T_hot in (0, 1)
    :type r: float
    :param rL: squared width ratio L_C^2 / L_A^2, above 1
    :type rL: float
    :return: the spec
    :rtype: CarnotSpec
    :raises SpecError: if the ratios cannot be realized
    """

    r = _positive("r", r)
    rL = _positive("rL", rL)

    if r >= 1.0 or rL <= 1.0:
        raise SpecError(f"ratios need 0 < r < 1 and r_L > 1, got r={r:g}, r_L={rL:g}")

    if r * rL <= 1.0:
        raise SpecError(f"r * r_L must exceed 1 to realize an expanding isotherm, got {r * rL:g}")

    return CarnotSpec(
        tHot=tHot,
        tCold=r * tHot,
        lA=lA,
        lB=lA * math.sqrt(r * rL),
        mass=mass,
        gup=GupParams(betaG, mass)
    )
