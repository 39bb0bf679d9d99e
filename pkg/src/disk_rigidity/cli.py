# file: src/disk_rigidity/cli.py
"""
Command-Line Interface for the disk rigidity toolkit.
Uses argparse to handle commands and options.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from . import __version__
from . import config as app_config
from .analysis_manager import AnalysisManager
from .exceptions import DiskRigidityError
from .logging_utils import log_pass, log_step, logger, set_verbosity
from .models import RunConfig
from .parser import parse_constant
from .reporting import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR, EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand; defaults stay None so config files can fill them."""
    common = argparse.ArgumentParser(add_help=False)
    run = common.add_argument_group("Run options")
    run.add_argument("--subject", help="Map or generator in the map DSL, e.g. \"(z+0.3)/(1+0.3*z)\".")
    run.add_argument("--role", choices=app_config.ROLES, help="Interpret the subject as a self-map or a generator.")
    run.add_argument("--tau", help="Boundary point (default 1), e.g. \"-1\" or \"i\".")
    run.add_argument("--k-list", help="Comma separated horocycle parameters k for the conjugated checks.")
    run.add_argument("--seed", type=int, help=f"Seed of every sampler (default {app_config.SEED}).")
    run.add_argument("--tol-jet", type=float, help=f"Jet tolerance (default {app_config.JET_TOL:g}).")
    run.add_argument("--tol-ode", type=float, help=f"Flow integrator tolerance (default {app_config.ODE_TOL:g}).")
    run.add_argument("--tol-verdict", type=float,
                     help=f"Verdict tolerance (default {app_config.VERDICT_TOL:g}).")
    run.add_argument("--samples", type=int,
                     help=f"Samples per inclusion test (default {app_config.INCLUSION_SAMPLES}).")
    run.add_argument("--z0", help="Initial point of the flow (default 0).")
    run.add_argument("--t-end", type=float, help="Final time of the flow (default 1).")
    run.add_argument("--out", help="Output file (relative paths resolve against DISKRIG_OUTPUT_DIR); stdout if omitted.")
    run.add_argument("--no-meta", action="store_true", help="Omit the timestamp block so reruns are byte-identical.")
    run.add_argument("--config", help="Flat key=value run configuration file.")
    run.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    run.add_argument("-q", "--quiet", action="store_true", help="Warnings and errors only.")
    return common


def create_parser() -> argparse.ArgumentParser:
    """Creates and returns the argparse.ArgumentParser instance."""
    parser = argparse.ArgumentParser(
        prog="disk-rigidity",
        description="Boundary rigidity checks for holomorphic self-maps and semigroups of the unit disk.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_options()

    subparsers = parser.add_subparsers(
        dest="command",
        title="Commands",
        help="Action to perform. Use <command> -h for specific help.",
    )
    subparsers.required = True

    parser_analyze = subparsers.add_parser(
        "analyze", parents=[common],
        help="Run every analyzer for the subject and write one JSON report.",
    )
    parser_analyze.set_defaults(func=handle_analyze)

    parser_rigidity = subparsers.add_parser(
        "rigidity", parents=[common],
        help="Run the rigidity analyzers only (no quantitative bounds).",
    )
    parser_rigidity.set_defaults(func=handle_rigidity)

    parser_classify = subparsers.add_parser(
        "classify", parents=[common],
        help="Denjoy-Wolff classification of a self-map or a generator.",
    )
    parser_classify.set_defaults(func=handle_classify)

    parser_flow = subparsers.add_parser(
        "flow", parents=[common],
        help="Integrate the semigroup of a generator and write a CSV trajectory (t,re,im).",
    )
    parser_flow.set_defaults(func=handle_flow)

    parser_decompose = subparsers.add_parser(
        "decompose", parents=[common],
        help="Berkson-Porta data of a generator, or of the generator attached to a self-map.",
    )
    parser_decompose.set_defaults(func=handle_decompose)

    parser_verify = subparsers.add_parser(
        "verify", parents=[common],
        help="Run the built-in corpus and print the verify table.",
    )
    parser_verify.set_defaults(func=handle_verify)

    epilog_parts = [
        "\nConfiguration:",
        "  Precedence: command-line flag > --config file > DISKRIG_* environment > built-in default.",
        "  Config file keys: " + ", ".join(sorted(app_config.KNOWN_KEYS)),
        "\nExit codes:",
        "  0 all certified checks pass, 1 input error, 2 a certified check failed,",
        "  3 inconclusive, 4 internal error.",
    ]
    parser.epilog = "\n".join(epilog_parts)
    return parser


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Merges config file values and command-line flags into a RunConfig."""
    values: Dict[str, Any] = {}
    if getattr(args, "config", None):
        values.update(app_config.load_run_config_file(Path(args.config)))
    for key in app_config.KNOWN_KEYS:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            values[key] = flag_value
    return RunConfig(
        subject=values.get("subject"),
        role=values.get("role", "selfmap"),
        tau=parse_constant(values["tau"]) if "tau" in values else 1 + 0j,
        k_list=app_config.parse_k_list(values.get("k_list")),
        seed=values.get("seed", app_config.SEED),
        jet_tol=values.get("tol_jet", app_config.JET_TOL),
        ode_tol=values.get("tol_ode", app_config.ODE_TOL),
        verdict_tol=values.get("tol_verdict", app_config.VERDICT_TOL),
        samples=values.get("samples", app_config.INCLUSION_SAMPLES),
        out=values.get("out"),
        z0=parse_constant(values["z0"]) if "z0" in values else 0j,
        t_end=values.get("t_end", 1.0),
        no_meta=bool(getattr(args, "no_meta", False)),
    )


def handle_analyze(args: argparse.Namespace, manager: AnalysisManager) -> int:
    """Handles the analyze action."""
    return manager.analyze()


def handle_rigidity(args: argparse.Namespace, manager: AnalysisManager) -> int:
    """Handles the rigidity action."""
    return manager.rigidity()


def handle_classify(args: argparse.Namespace, manager: AnalysisManager) -> int:
    return manager.classify()


def handle_flow(args: argparse.Namespace, manager: AnalysisManager) -> int:
    return manager.flow()


def handle_decompose(args: argparse.Namespace, manager: AnalysisManager) -> int:
    return manager.decompose()


def handle_verify(args: argparse.Namespace, manager: AnalysisManager) -> int:
    """Handles the verify action."""
    return manager.verify()


def main_cli(argv: Optional[Sequence[str]] = None) -> None:
    """Main entry point for the CLI application."""
    parser = create_parser()
    args = parser.parse_args(argv)
    set_verbosity(logger, verbose=args.verbose, quiet=args.quiet)

    try:
        manager = AnalysisManager(build_run_config(args))
        log_step(logger, f"Executing command: {args.command}")
        code = args.func(args, manager)
        if code == EXIT_OK:
            log_pass(logger, f"Command '{args.command}' completed successfully.")
        else:
            logger.warning(f"Command '{args.command}' finished with exit code {code}.")
    except DiskRigidityError as e:
        logger.error(str(e))
        sys.exit(EXIT_INPUT_ERROR)
    except SystemExit:
        raise
    except Exception as e:
        logger.critical(f"An unexpected critical error occurred: {e}", exc_info=True)
        sys.exit(EXIT_INTERNAL_ERROR)
    sys.exit(code)
