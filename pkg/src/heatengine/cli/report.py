"""
deterministic tabular output

numbers are printed with format(x, ".9g"): plain notation for
1e-4 <= |x| < 1e9, scientific otherwise. csv rows end in a bare LF
"""

from ..errors import ContractError

from dataclasses import dataclass, field
from typing import Any, Optional, TextIO
from enum import Enum

import numbers
import json
import math
import csv

FORMATS = ("csv", "json")
DEFAULT_SIGNIFICANT_DIGITS = 9

NUMBER_FORMAT_HELP = (
    "numbers carry 9 significant digits: plain notation for 1e-4 <= |x| < 1e9, "
    "scientific notation otherwise"
)

def formatNumber(value: float, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    """
    :param value: the number
    :type value: float
    :param digits: significant digits
    :type digits: int
    :return: the text form; non-finite values are spelled inf, -inf or nan
    :rtype: str
    """

    return format(float(value), f".{digits}g")

def formatCell(value: Any, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> str:
    if value is None:
        return ""

    if isinstance(value, bool):
        return "true" if value else "false"

    if isinstance(value, Enum):
        return str(value.value)

    if isinstance(value, numbers.Real):
        return formatNumber(value, digits)

    return str(value)

def jsonCell(value: Any, digits: int = DEFAULT_SIGNIFICANT_DIGITS) -> Any:
    if value is None or isinstance(value, bool):
        return value

    if isinstance(value, Enum):
        return value.value

    if isinstance(value, numbers.Integral):
        return int(value)

    if isinstance(value, numbers.Real):
        number = float(value)

        # json has no literal for these
        if not math.isfinite(number):
            return formatNumber(number, digits)

        return float(formatNumber(number, digits))

    return str(value)

@dataclass
class Report:
    """
    a fixed set of columns and rows keyed by them, kept in insertion order.
    """

    columns: tuple[str, ...]
    rows: list[dict[str, Any]] = field(default_factory=list)

    def addRow(self, row: dict[str, Any]) -> None:
        missing = [column for column in self.columns if column not in row]
        extra = [key for key in row if key not in self.columns]

        if missing or extra:
            raise ContractError(f"row does not match report columns (missing {missing}, extra {extra})")

        self.rows.append({column: row[column] for column in self.columns})

def writeReport(
    report: Report,
    stream: TextIO,
    outputFormat: str = "csv",
    digits: Optional[int] = None
) -> None:
    """
    write a report as CSV with a header line, or as a JSON array of row objects.

    :param report: the report
    :type report: Report
    :param stream: destination, normally stdout
    :type stream: TextIO
    :param outputFormat: "csv" or "json"
    :type outputFormat: str
    :param digits: significant digits of numbers
    :type digits: Optional[int]
    """

    digits = DEFAULT_SIGNIFICANT_DIGITS if digits is None else int(digits)

    if outputFormat == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(report.columns)

        for row in report.rows:
            writer.writerow([formatCell(row[column], digits) for column in report.columns])

        return

    if outputFormat == "json":
        payload = [
            {column: jsonCell(row[column], digits) for column in report.columns}
            for row in report.rows
        ]

        json.dump(payload, stream, indent=2)
        stream.write("\n")
        return

    raise ContractError(f"unknown output format {outputFormat!r}, expected one of {FORMATS}")
