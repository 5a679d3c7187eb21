from ..base import BaseCheck

from .statmechChecks import CHECKS as STATMECH_CHECKS
from .pathChecks import CHECKS as PATH_CHECKS
from .ledgerChecks import CHECKS as LEDGER_CHECKS
from .figureChecks import CHECKS as FIGURE_CHECKS

CHECKS: list[BaseCheck] = [
    *FIGURE_CHECKS,
    *LEDGER_CHECKS,
    *PATH_CHECKS,
    *STATMECH_CHECKS,
]
