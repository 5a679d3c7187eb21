from . import __version__

from .model.units import NATURAL_UNITS
from .config import ConfigController
from .errors import (
    HeatEngineError,
    RegimeError,
    ConvergenceError,
)

from typing import Optional, Sequence

import argparse
import logging

logger = logging.getLogger(__name__)

EXIT_INVALID = 2
EXIT_REGIME = 3

def setLogging(debug: bool) -> None:
    """
    Configures logging on the error stream based on the debug flag.

    :param debug: Whether to enable debug logging
    :type debug: bool
    """

    logging.basicConfig(
        level = (logging.DEBUG if debug else logging.INFO),
        format = "[%(asctime)s] [%(levelname)s] %(message)s",
    )

def addCommonOptions(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="output format on stdout (default: csv)"
    )

    parser.add_argument(
        "--delta-max",
        type=float,
        default=None,
        help="gup validity gate on delta = 4 m beta_G gamma (default: 1e-3)"
    )

def addCycleOptions(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--t-hot", type=float, required=True, help="hot reservoir temperature")
    parser.add_argument("--t-cold", type=float, required=True, help="cold reservoir temperature")
    parser.add_argument("--mass", type=float, required=True, help="particle mass")
    parser.add_argument("--beta-g", type=float, default=0.0, help="gup parameter beta_G (default: 0)")

def buildParser() -> argparse.ArgumentParser:
    """
    the argument parser of every command.

    :return: the parser
    :rtype: argparse.ArgumentParser
    """

    from .cli.report import NUMBER_FORMAT_HELP

    units = "; ".join(f"{key}: {value}" for (key, value) in NATURAL_UNITS.metadata().items())

    parser = argparse.ArgumentParser(
        prog="heatengine",
        description=f"Quantum Carnot and Otto cycles of a particle in a box ({NATURAL_UNITS.summary()})",
        epilog=f"{units}. {NUMBER_FORMAT_HELP}. exit codes: 0 ok, 1 validation failure, 2 invalid input, 3 gup gate violated."
    )

    parser.add_argument(
        "--debug", "-d",
        action="store_true",
        help="Enable debug logging output"
    )

    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}"
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    carnot = subparsers.add_parser("carnot", help="ledger of a quantum carnot cycle")
    addCycleOptions(carnot)
    carnot.add_argument("--l-a", type=float, required=True, help="well width at A")
    carnot.add_argument("--l-b", type=float, required=True, help="well width at B, above L_A")
    addCommonOptions(carnot)

    otto = subparsers.add_parser("otto", help="ledger of a quantum otto cycle")
    addCycleOptions(otto)
    otto.add_argument("--l-small", type=float, required=True, help="well width of the heating leg")
    otto.add_argument("--l-large", type=float, required=True, help="well width of the cooling leg")
    otto.add_argument("--f-ad", type=float, default=None, help="beta_A / beta_l for the first-order deficit (default: gamma_l / gamma_h)")
    otto.add_argument("--f-cb", type=float, default=None, help="beta_C / beta_h for the first-order deficit (default: gamma_h / gamma_l)")
    addCommonOptions(otto)

    sweep = subparsers.add_parser("sweep", help="figure function over a linear grid")
    sweep.add_argument("--target", choices=("fig3", "fig4", "fig5", "fig6"), required=True, help="fig3: carnot f(r), fig4: carnot f(r_L), fig5: otto f(r), fig6: otto f(r_L^O)")
    sweep.add_argument("--r-l", type=float, default=None, help="fixed r_L (fig3)")
    sweep.add_argument("--r", type=float, default=None, help="fixed r (fig4, fig6)")
    sweep.add_argument("--f-ad", type=float, default=None, help="fixed f_AD (fig5, fig6)")
    sweep.add_argument("--f-cb", type=float, default=None, help="fixed f_CB (fig5, fig6)")
    sweep.add_argument("--r-l-o", type=float, default=None, help="fixed r_L^O (fig5)")
    sweep.add_argument("--min", type=float, default=None, help="first grid value")
    sweep.add_argument("--max", type=float, default=None, help="last grid value")
    sweep.add_argument("--steps", type=int, default=None, help="number of grid points, endpoints included")
    sweep.add_argument("--with-prefactor", action="store_true", help="add the efficiency deficit as a 'scaled' column")
    sweep.add_argument("--beta-g", type=float, default=None, help="gup parameter for --with-prefactor")
    sweep.add_argument("--mass", type=float, default=None, help="particle mass for --with-prefactor")
    sweep.add_argument("--t-hot", type=float, default=None, help="hot temperature for --with-prefactor")
    addCommonOptions(sweep)

    validate = subparsers.add_parser("validate", help="run the oracle validation suite")
    validate.add_argument("--beta-gamma", type=float, default=None, help="beta*gamma probed by the closed-form validity check (default: 1e-4)")
    validate.add_argument("--steps", type=int, default=None, help="path integration steps (default: 1e4)")
    validate.add_argument("--tail-tol", type=float, default=None, help="tail tolerance of oracle sums (default: 1e-15)")
    validate.add_argument("--seed", type=int, default=None, help="seed of the random sweeps")
    validate.add_argument("--only", action="append", default=None, metavar="CHECK", help="run only this check id (repeatable)")
    addCommonOptions(validate)

    return parser

def configFromArguments(arguments: argparse.Namespace) -> ConfigController:
    config = ConfigController()

    config.bulkSetValues({"deltaMax": arguments.delta_max}, "gup")

    if arguments.command == "validate":
        config.bulkSetValues({
            "paths.steps": arguments.steps,
            "statmech.tailTolerance": arguments.tail_tol,
            "validate.betaGamma": arguments.beta_gamma,
            "validate.seed": arguments.seed,
        })

    overrides = config.describeOverrides()

    if overrides:
        logger.debug(f"Config overrides: {overrides}")

    return config

def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for the heatengine command line.

    :param argv: arguments without the program name; defaults to sys.argv
    :type argv: Optional[Sequence[str]]
    :return: exit code
    :rtype: int
    """

    parser = buildParser()

    try:
        arguments = parser.parse_args(argv)
    except SystemExit as exit:
        return int(exit.code or 0)

    # logging
    setLogging(arguments.debug)

    from .cli import cmdCarnot, cmdOtto, cmdSweep, cmdValidate

    commands = {
        "carnot": cmdCarnot,
        "otto": cmdOtto,
        "sweep": cmdSweep,
        "validate": cmdValidate,
    }

    try:
        config = configFromArguments(arguments)
        return commands[arguments.command](arguments, config)
    except RegimeError as error:
        logger.error(str(error))
        return EXIT_REGIME
    except ConvergenceError as error:
        logger.error(f"{error} (after {error.termsReached} terms)")
        return EXIT_INVALID
    except HeatEngineError as error:
        logger.error(str(error))
        return EXIT_INVALID

if __name__ == "__main__":
    raise SystemExit(main())
