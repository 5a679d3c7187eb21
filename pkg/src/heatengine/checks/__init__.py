from .base import BaseCheck, CheckResult
from .context import CheckContext
from .discovery import discoverChecks, collectChecksFromModule
