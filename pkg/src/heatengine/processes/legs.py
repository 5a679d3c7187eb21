from ..model.units import requirePositiveFinite
from ..model.substance import ThermalPoint
from ..errors import ContractError

from dataclasses import dataclass
from enum import Enum

# beta*gamma must be constant along an adiabat to this relative tolerance
ADIABATIC_TOLERANCE = 1e-12

class ProcessKind(Enum):
    ISOTHERMAL = "isothermal"
    ADIABATIC = "adiabatic"
    ISOCHORIC = "isochoric"

def adiabaticMismatch(start: ThermalPoint, end: ThermalPoint) -> float:
    return abs(end.betaGamma - start.betaGamma) / start.betaGamma

@dataclass(frozen=True)
class Process:
    """
    one quasi-static leg of a cycle between two states.

    :param kind: the process type
    :type kind: ProcessKind
    :param start: initial state
    :type start: ThermalPoint
    :param end: final state
    :type end: ThermalPoint
    """

    kind: ProcessKind
    start: ThermalPoint
    end: ThermalPoint

    def __post_init__(self):
        if not isinstance(self.kind, ProcessKind):
            raise ContractError(f"unsupported process kind {self.kind!r}")

        if self.kind is ProcessKind.ISOTHERMAL and self.start.beta != self.end.beta:
            raise ContractError(
                f"isothermal leg changes beta from {self.start.beta!r} to {self.end.beta!r}"
            )

        if self.kind is ProcessKind.ISOCHORIC and self.start.gamma != self.end.gamma:
            raise ContractError(
                f"isochoric leg changes gamma from {self.start.gamma!r} to {self.end.gamma!r}"
            )

        if self.kind is ProcessKind.ADIABATIC:
            mismatch = adiabaticMismatch(self.start, self.end)

            if mismatch > ADIABATIC_TOLERANCE:
                raise ContractError(
                    f"adiabatic leg does not keep beta*gamma constant (relative mismatch {mismatch:.3e})"
                )

    @classmethod
    def isothermal(cls, beta: float, gammaStart: float, gammaEnd: float) -> "Process":
        return cls(
            ProcessKind.ISOTHERMAL,
            ThermalPoint(beta, gammaStart),
            ThermalPoint(beta, gammaEnd)
        )

    @classmethod
    def isochoric(cls, gamma: float, betaStart: float, betaEnd: float) -> "Process":
        return cls(
            ProcessKind.ISOCHORIC,
            ThermalPoint(betaStart, gamma),
            ThermalPoint(betaEnd, gamma)
        )

    @classmethod
    def adiabatic(cls, start: ThermalPoint, gammaEnd: float) -> "Process":
        """
        an adiabat from a state to a new spectral scale; the final beta follows
        from beta * gamma = constant.
        """

        gammaEnd = requirePositiveFinite("gammaEnd", gammaEnd)

        return cls(
            ProcessKind.ADIABATIC,
            start,
            ThermalPoint(start.betaGamma / gammaEnd, gammaEnd)
        )

    def reversed(self) -> "Process":
        """
        the same leg run backwards; its heat is the negated heat of this leg.
        """

        return Process(self.kind, self.end, self.start)

def isClosed(legs) -> bool:
    """
    whether consecutive legs join up and the last leg ends where the first starts.
    """

    legs = list(legs)

    if not legs:
        return False

    for (current, following) in zip(legs, legs[1:] + legs[:1]):
        if current.end != following.start:
            return False

    return True
