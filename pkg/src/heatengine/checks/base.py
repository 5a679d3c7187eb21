from .context import CheckContext

from dataclasses import dataclass
from typing import Optional

@dataclass(frozen=True)
class CheckResult:
    """
    outcome of one validation check.

    :param checkId: id of the check that produced it
    :param passed: whether the check holds
    :param measured: the measured error or statistic
    :param tolerance: the threshold it was compared against, if any
    :param detail: one-line human readable context
    """

    checkId: str
    passed: bool
    measured: Optional[float]
    tolerance: Optional[float]
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

class BaseCheck:
    """
    base class for all validation checks.

    :cvar id: unique identifier, used by --only
    :vartype id: str
    :cvar name: short description
    :vartype name: str
    :cvar isEnabled: whether the check runs by default
    :vartype isEnabled: bool
    """

    id: str = ""
    name: str = ""

    isEnabled: bool = True

    def canRun(self, context: CheckContext) -> bool:
        """
        Determine if the check applies in the given context.

        :param context: The context in which to evaluate the check.
        :return: True if the check can run, False otherwise.
        """
        return True

    def run(self, context: CheckContext) -> CheckResult:
        """
        Execute the check.

        :param context: shared validation settings
        :type context: CheckContext
        :return: the outcome
        :rtype: CheckResult
        """
        raise NotImplementedError

    def below(self, measured: float, tolerance: float, detail: str = "") -> CheckResult:
        return CheckResult(self.id, bool(measured <= tolerance), measured, tolerance, detail)

    def above(self, measured: float, tolerance: float, detail: str = "") -> CheckResult:
        return CheckResult(self.id, bool(measured > tolerance), measured, tolerance, detail)
