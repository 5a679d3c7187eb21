"""
natural units convention and scalar input validation

all public quantities are dimensionless numbers with hbar = 1 and k = 1,
so an inverse temperature is exactly beta = 1 / T
"""

from ..errors import DomainError

from dataclasses import dataclass

import math

HBAR = 1.0
BOLTZMANN = 1.0

@dataclass(frozen=True)
class UnitsConvention:
    """
    the constant policy every quantity in the package is expressed in.
    carries no state beyond the two unit constants.
    """

    hbar: float = HBAR
    boltzmann: float = BOLTZMANN

    def metadata(self) -> dict[str, str]:
        """
        describe the convention as plain strings.

        :return: convention descriptions keyed by name
        :rtype: dict[str, str]
        """

        return {
            "units": "natural",
            "hbar": f"{self.hbar:g}",
            "boltzmann": f"{self.boltzmann:g}",
            "beta": "beta = 1/T exactly",
            "quantities": "all public quantities are dimensionless",
        }

    def summary(self) -> str:
        return f"natural units: hbar = {self.hbar:g}, k = {self.boltzmann:g}, beta = 1/T"

NATURAL_UNITS = UnitsConvention()

def requirePositiveFinite(name: str, value: float) -> float:
    """
    check that a scalar is a finite, strictly positive real number.

    :param name: the parameter name used in the error message
    :type name: str
    :param value: the value to check
    :type value: float
    :return: the value as a float
    :rtype: float
    :raises DomainError: if the value is non-finite or not positive
    """

    try:
        number = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {value!r}")

    if not math.isfinite(number) or number <= 0.0:
        raise DomainError(f"{name} must be positive and finite, got {value!r}")

    return number

def requireNonNegativeFinite(name: str, value: float) -> float:
    """
    check that a scalar is a finite real number that is zero or larger.

    :param name: the parameter name used in the error message
    :type name: str
    :param value: the value to check
    :type value: float
    :return: the value as a float
    :rtype: float
    :raises DomainError: if the value is non-finite or negative
    """

    try:
        number = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {value!r}")

    if not math.isfinite(number) or number < 0.0:
        raise DomainError(f"{name} must be non-negative and finite, got {value!r}")

    return number

def betaFromTemperature(temperature: float) -> float:
    """
    convert a temperature into an inverse temperature (k = 1).

    :param temperature: the temperature
    :type temperature: float
    :return: beta = 1 / T
    :rtype: float
    """

    return 1.0 / requirePositiveFinite("temperature", temperature)
