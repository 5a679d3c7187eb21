from .report import Report, writeReport

from ..cycles.specs import CarnotSpec, OttoSpec
from ..cycles.carnot import carnotLedger
from ..cycles.otto import ottoLedger
from ..cycles.ledger import CycleLedger, LEG_NAMES, formatFlags
from ..model.gup import GupParams
from ..config import ConfigController

from argparse import Namespace

import logging
import sys

logger = logging.getLogger(__name__)

LEDGER_COLUMNS = (
    "eta",
    "etaG",
    "deltaEta",
    "deltaEtaExact",
    *(f"Q_{name}" for name in LEG_NAMES),
    *(f"QG_{name}" for name in LEG_NAMES),
    "Q_in",
    "Q_out",
    "W",
    "QG_in",
    "QG_out",
    "WG",
    "approximation",
    "regimeFlags",
)

CARNOT_COLUMNS = ("cycle", *LEDGER_COLUMNS)
OTTO_COLUMNS = ("cycle", "fAD", "fCB", *LEDGER_COLUMNS)

def ledgerRow(ledger: CycleLedger) -> dict:
    """
    the columns shared by every cycle report.

    :param ledger: the ledger
    :type ledger: CycleLedger
    :return: values keyed by column
    :rtype: dict
    """

    row = {
        "cycle": ledger.cycle,
        "eta": ledger.eta,
        "etaG": ledger.etaG,
        "deltaEta": ledger.deltaEta,
        "deltaEtaExact": ledger.deltaEtaExact,
    }

    for legHeat in ledger.legs:
        row[f"Q_{legHeat.name}"] = legHeat.heat.Q

    for legHeat in ledger.legs:
        row[f"QG_{legHeat.name}"] = legHeat.heat.QG

    row.update({
        "Q_in": ledger.qIn,
        "Q_out": ledger.qOut,
        "W": ledger.work,
        "QG_in": ledger.qInG,
        "QG_out": ledger.qOutG,
        "WG": ledger.workG,
        "approximation": ledger.approximation,
        "regimeFlags": formatFlags(ledger.regimeFlags),
    })

    return row

def _warnFlags(ledger: CycleLedger) -> None:
    if ledger.regimeFlags:
        logger.warning(f"{ledger.cycle} cycle regime flags: {formatFlags(ledger.regimeFlags)}")

def cmdCarnot(arguments: Namespace, config: ConfigController) -> int:
    """
    one-row report of a carnot cycle.

    :param arguments: parsed command line
    :type arguments: Namespace
    :param config: merged configuration
    :type config: ConfigController
    :return: exit code
    :rtype: int
    """

    spec = CarnotSpec(
        tHot=arguments.t_hot,
        tCold=arguments.t_cold,
        lA=arguments.l_a,
        lB=arguments.l_b,
        mass=arguments.mass,
        gup=GupParams(arguments.beta_g, arguments.mass)
    )

    ledger = carnotLedger(spec, config.getValue("gup.deltaMax"))
    _warnFlags(ledger)

    report = Report(CARNOT_COLUMNS)
    report.addRow(ledgerRow(ledger))

    writeReport(report, sys.stdout, arguments.format, config.getValue("report.significantDigits"))
    return 0

def cmdOtto(arguments: Namespace, config: ConfigController) -> int:
    """
    one-row report of an otto cycle; the f_AD and f_CB in effect are echoed.

    :param arguments: parsed command line
    :type arguments: Namespace
    :param config: merged configuration
    :type config: ConfigController
    :return: exit code
    :rtype: int
    """

    spec = OttoSpec(
        tHot=arguments.t_hot,
        tCold=arguments.t_cold,
        lSmall=arguments.l_small,
        lLarge=arguments.l_large,
        mass=arguments.mass,
        gup=GupParams(arguments.beta_g, arguments.mass),
        fAD=arguments.f_ad,
        fCB=arguments.f_cb
    )

    ledger = ottoLedger(spec, config.getValue("gup.deltaMax"))
    _warnFlags(ledger)

    row = ledgerRow(ledger)
    row["fAD"] = spec.effectiveFAD
    row["fCB"] = spec.effectiveFCB

    report = Report(OTTO_COLUMNS)
    report.addRow(row)

    writeReport(report, sys.stdout, arguments.format, config.getValue("report.significantDigits"))
    return 0
