from .report import Report, writeReport

from ..checks.base import BaseCheck, CheckResult
from ..checks.context import CheckContext
from ..checks.discovery import discoverChecks
from ..model.units import requirePositiveFinite
from ..config import ConfigController
from ..errors import HeatEngineError, SpecError

from argparse import Namespace
from typing import Optional, Sequence

import logging
import time
import sys

logger = logging.getLogger(__name__)

VALIDATE_COLUMNS = ("check", "status", "measured", "tolerance", "detail")

def selectChecks(checks: Sequence[BaseCheck], only: Optional[Sequence[str]]) -> list[BaseCheck]:
    """
    the enabled checks, narrowed to the requested ids when any are given.

    :raises SpecError: for an id no discovered check carries
    """

    if not only:
        return [check for check in checks if check.isEnabled]

    known = {check.id: check for check in checks}
    unknown = [checkId for checkId in only if checkId not in known]

    if unknown:
        raise SpecError(f"unknown check id(s) {', '.join(unknown)}; known: {', '.join(sorted(known))}")

    return [check for check in checks if check.id in set(only)]

def runChecks(checks: Sequence[BaseCheck], context: CheckContext) -> list[CheckResult]:
    """
    run each check in order. any error raised inside a check fails that check
    only; the suite carries on.

    :param checks: the checks
    :type checks: Sequence[BaseCheck]
    :param context: shared settings
    :type context: CheckContext
    :return: one result per check that could run
    :rtype: list[CheckResult]
    """

    results = []

    for check in checks:
        if not check.canRun(context):
            logger.debug(f"Skipping check {check.id}")
            continue

        startedAt = time.perf_counter()

        try:
            result = check.run(context)
        except HeatEngineError as error:
            result = CheckResult(check.id, False, None, None, f"{type(error).__name__}: {error}")
        except Exception as error:
            logger.error(f"Check {check.id} crashed: {type(error).__name__}: {error}")
            result = CheckResult(check.id, False, None, None, f"unexpected {type(error).__name__}: {error}")

        logger.debug(f"Check {check.id}: {result.status} in {time.perf_counter() - startedAt:.3f}s")

        if not result.passed:
            logger.error(f"Check {check.id} failed: measured {result.measured}, tolerance {result.tolerance}; {result.detail}")

        results.append(result)

    return results

def cmdValidate(arguments: Namespace, config: ConfigController) -> int:
    """
    run the oracle validation suite and report one row per check.

    :param arguments: parsed command line
    :type arguments: Namespace
    :param config: merged configuration
    :type config: ConfigController
    :return: 0 if every check passes, 1 otherwise
    :rtype: int
    """

    context = CheckContext.fromConfig(config)

    requirePositiveFinite("beta-gamma", context.betaGamma)
    requirePositiveFinite("tail-tol", context.tailTolerance)

    if context.steps < 2:
        raise SpecError(f"--steps must be at least 2, got {context.steps}")

    checks = selectChecks(discoverChecks(), arguments.only)
    results = runChecks(checks, context)

    report = Report(VALIDATE_COLUMNS)

    for result in results:
        report.addRow({
            "check": result.checkId,
            "status": result.status,
            "measured": result.measured,
            "tolerance": result.tolerance,
            "detail": result.detail,
        })

    writeReport(report, sys.stdout, arguments.format, config.getValue("report.significantDigits"))

    return 0 if all(result.passed for result in results) else 1
