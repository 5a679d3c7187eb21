from heatengine.cycles import CarnotSpec, OttoSpec
from heatengine.model import GupParams

import numpy
import pytest

# the carnot reference cycle has delta_A = 2 pi^2 betaG ~ 1.97e-3 at betaG = 1e-4
DESK_DELTA_MAX = 1e-2

@pytest.fixture
def deskCarnot() -> CarnotSpec:
    return CarnotSpec(tHot=2.0, tCold=1.0, lA=1.0, lB=2.0, mass=1.0, gup=GupParams(1e-4, 1.0))

@pytest.fixture
def plainCarnot() -> CarnotSpec:
    return CarnotSpec(tHot=2.0, tCold=1.0, lA=1.0, lB=2.0, mass=1.0)

@pytest.fixture
def deskOtto() -> OttoSpec:
    return OttoSpec(tHot=10.0, tCold=1.0, lSmall=1.0, lLarge=2.0, mass=1.0, gup=GupParams(1e-5, 1.0))

@pytest.fixture
def rng() -> numpy.random.Generator:
    return numpy.random.default_rng(12345)
