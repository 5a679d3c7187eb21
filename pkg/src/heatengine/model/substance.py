from .units import requirePositiveFinite, betaFromTemperature, HBAR
from ..errors import DomainError

from dataclasses import dataclass

import math

@dataclass(frozen=True)
class WellSubstance:
    """
    a particle of a given mass confined to an infinite square well.

    :param mass: particle mass (natural units)
    :type mass: float
    :param width: well width L (natural units)
    :type width: float
    """

    mass: float
    width: float

    def __post_init__(self):
        object.__setattr__(self, "mass", requirePositiveFinite("mass", self.mass))
        object.__setattr__(self, "width", requirePositiveFinite("width", self.width))

    @property
    def gamma(self) -> float:
        """
        the spectral scale of this substance.

        :return: gamma = pi^2 / (2 m L^2)
        :rtype: float
        """

        return gammaOf(self)

    def withWidth(self, width: float) -> "WellSubstance":
        return WellSubstance(mass=self.mass, width=width)

def gammaOf(substance: WellSubstance) -> float:
    """
    compute the spectral scale gamma = pi^2 hbar^2 / (2 m L^2).

    :param substance: the working substance
    :type substance: WellSubstance
    :return: the spectral scale, strictly positive
    :rtype: float
    :raises DomainError: if the scale is not a positive finite number
    """

    gamma = (math.pi * HBAR) ** 2 / (2.0 * substance.mass) / substance.width / substance.width

    if not math.isfinite(gamma) or gamma <= 0.0:
        raise DomainError(
            f"spectral scale is not representable for mass={substance.mass!r}, width={substance.width!r}"
        )

    return gamma

def widthForGamma(mass: float, gamma: float) -> float:
    """
    invert the spectral scale: the width giving gamma for a particle of the given mass.

    :param mass: particle mass
    :type mass: float
    :param gamma: target spectral scale
    :type gamma: float
    :return: the well width
    :rtype: float
    :raises DomainError: if the width is not a positive finite number
    """

    mass = requirePositiveFinite("mass", mass)
    gamma = requirePositiveFinite("gamma", gamma)

    width = math.pi * HBAR / math.sqrt(2.0 * mass) / math.sqrt(gamma)

    if not math.isfinite(width) or width <= 0.0:
        raise DomainError(f"well width is not representable for mass={mass!r}, gamma={gamma!r}")

    return width

@dataclass(frozen=True)
class ThermalPoint:
    """
    a (beta, gamma) state of the working substance. every closed-form
    thermodynamic quantity depends on the state only through beta * gamma.

    :param beta: inverse temperature
    :type beta: float
    :param gamma: spectral scale
    :type gamma: float
    """

    beta: float
    gamma: float

    def __post_init__(self):
        object.__setattr__(self, "beta", requirePositiveFinite("beta", self.beta))
        object.__setattr__(self, "gamma", requirePositiveFinite("gamma", self.gamma))

        product = self.beta * self.gamma

        if not math.isfinite(product) or product <= 0.0:
            raise DomainError(
                f"beta*gamma is not representable for beta={self.beta!r}, gamma={self.gamma!r}"
            )

    @property
    def betaGamma(self) -> float:
        return self.beta * self.gamma

    @property
    def temperature(self) -> float:
        return 1.0 / self.beta

    @classmethod
    def fromTemperature(cls, temperature: float, substance: WellSubstance) -> "ThermalPoint":
        """
        build a state from a temperature and a working substance.

        :param temperature: the temperature T
        :type temperature: float
        :param substance: the working substance
        :type substance: WellSubstance
        :return: the state (1/T, gamma)
        :rtype: ThermalPoint
        """

        return cls(
            beta=betaFromTemperature(temperature),
            gamma=gammaOf(substance)
        )

    def scaled(self, factor: float) -> "ThermalPoint":
        """
        move along the line of constant beta*gamma: (a*beta, gamma/a).
        """

        factor = requirePositiveFinite("factor", factor)
        return ThermalPoint(self.beta * factor, self.gamma / factor)
