from .specs import (
    CarnotSpec,
    OttoSpec,
    CarnotRatios,
    OttoRatios,
    carnotRatios,
    ottoRatios,
    carnotSpecFromRatios,
)
from .ledger import (
    RegimeFlag,
    CycleGeometry,
    CycleLedger,
    LegHeat,
    LEG_NAMES,
    FIRST_ORDER_DRIFT_TOLERANCE,
    assembleLedger,
    formatFlags,
)
from .carnot import carnotBuild, carnotLedger, classicalCarnotEfficiency, carnotDeficitRatio
from .otto import ottoBuild, ottoLedger, classicalOttoEfficiency, ottoDeficitRatio
from .figures import (
    DEFAULT_POLE_EXCLUSION,
    carnotFigureF,
    ottoFigureF,
    ottoFigurePrinted,
    ottoFigureSquaredForm,
    carnotPositiveBranch,
    ottoPositivityWindow,
    locateSignEdges,
    carnotSignFunction,
    ottoSignFunction,
)
from .oracle import cycleLedgerOracle
