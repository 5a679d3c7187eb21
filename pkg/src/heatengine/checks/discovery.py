from .modules.__registry__ import CHECKS
from .base import BaseCheck

from types import ModuleType

import importlib
import pkgutil
import logging

logger = logging.getLogger(__name__)

def collectChecksFromModule(
    module: ModuleType
) -> list[BaseCheck]:
    """
    Collect check instances from a module's CHECKS list.

    :param module: The module to collect checks from
    :type module: ModuleType
    :return: List of check instances found in the module
    :rtype: list[BaseCheck]
    """
    moduleChecks = []

    if not hasattr(module, "CHECKS"):
        return moduleChecks

    for check in module.CHECKS:
        if not isinstance(check, BaseCheck):
            logger.warning(
                f"Check {check} in module {module.__name__} is not an instance of BaseCheck"
            )

            continue

        moduleChecks.append(check)

    return moduleChecks

def discoverChecks() -> list[BaseCheck]:
    """
    Discover all checks in the modules package, in module name order.
    falls back to the static registry if discovery finds nothing.

    :return: List of all discovered check instances
    :rtype: list[BaseCheck]
    """
    allChecks = []

    modules = importlib.import_module(".modules", package=__package__)

    for module in sorted(pkgutil.iter_modules(modules.__path__, modules.__name__ + "."), key=lambda info: info.name):
        if module.name.endswith("__registry__"):
            continue

        try:
            importedModule = importlib.import_module(module.name)
            allChecks.extend(collectChecksFromModule(importedModule))
        except Exception as e:
            logger.error(f"Failed to load checks from module {module.name}: {e}")

    logger.debug(f"Discovered {len(allChecks)} checks from modules")
    logger.debug(f"Checks: {[check.id for check in allChecks]}")

    if len(allChecks) == 0:
        allChecks = list(CHECKS)

    return allChecks
