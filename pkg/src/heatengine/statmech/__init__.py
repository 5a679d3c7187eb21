from .quantities import (
    StatmechQuantities,
    GupStatmechQuantities,
    ApproximationQuality,
    ENTROPY_CONSTANT,
    classifyApproximation,
    worstQuality,
)
from .closed import (
    partitionApprox,
    n4MomentApprox,
    partitionGup,
    thermoClosedForm,
    thermoGup,
    entropyClosedForm,
)
from .oracle import (
    partitionSumOracle,
    n4MomentSumOracle,
    partitionGupSumOracle,
    thermoOracle,
    truncationPoint,
    gaussianTailBound,
    DEFAULT_TAIL_TOLERANCE,
)
