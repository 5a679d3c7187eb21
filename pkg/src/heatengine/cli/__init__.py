from .report import Report, writeReport, formatNumber, NUMBER_FORMAT_HELP, FORMATS
from .commands import cmdCarnot, cmdOtto
from .sweep import cmdSweep, SweepSpec, SweepRow, FigureTarget, runSweep
from .validate import cmdValidate
