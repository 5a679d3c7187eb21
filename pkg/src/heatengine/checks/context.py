from ..config import ConfigController

from dataclasses import dataclass

import numpy
import zlib

@dataclass(frozen=True)
class CheckContext:
    """
    settings shared by every validation check.

    :param betaGamma: state probed by the closed-form validity check
    :param steps: integration steps for path oracles
    :param tailTolerance: bound on discarded tails of oracle sums
    :param maxTerms: cap on the number of terms of an oracle sum
    :param seed: base seed of all random draws
    :param deltaMax: gup validity gate
    :param randomSpecs: number of random cycle specs per sweep
    :param randomAdiabats: number of random adiabats
    :param okMax: upper beta*gamma of the trusted closed-form regime
    :param marginalMax: upper beta*gamma of the marginal regime
    :param fig5: default grid of the otto window sweep, (min, max, steps)
    """

    betaGamma: float
    steps: int
    tailTolerance: float
    maxTerms: int
    seed: int
    deltaMax: float
    randomSpecs: int
    randomAdiabats: int
    okMax: float
    marginalMax: float
    fig5: tuple[float, float, int]

    @classmethod
    def fromConfig(cls, config: ConfigController) -> "CheckContext":
        window = config.getValue("figures.sweeps.fig5.range")

        return cls(
            betaGamma=float(config.getValue("validate.betaGamma")),
            steps=int(config.getValue("paths.steps")),
            tailTolerance=float(config.getValue("statmech.tailTolerance")),
            maxTerms=int(config.getValue("statmech.maxTerms")),
            seed=int(config.getValue("validate.seed")),
            deltaMax=float(config.getValue("gup.deltaMax")),
            randomSpecs=int(config.getValue("validate.randomSpecs")),
            randomAdiabats=int(config.getValue("validate.randomAdiabats")),
            okMax=float(config.getValue("statmech.qualityThresholds.ok")),
            marginalMax=float(config.getValue("statmech.qualityThresholds.marginal")),
            fig5=(float(window["min"]), float(window["max"]), int(window["steps"]))
        )

    def rng(self, checkId: str) -> numpy.random.Generator:
        """
        a generator seeded from the base seed and the check id, so results do
        not depend on which other checks ran.
        """

        return numpy.random.default_rng([self.seed, zlib.crc32(checkId.encode("utf-8"))])
