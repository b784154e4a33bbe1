"""oversampling script.

Entry point of the command line. Usage::

    oversampling frames parseval --gen fig1 --lambda 2
    oversampling cond cert1d --p 3 --q 2 --lambda 7
    oversampling sigain class --region box-pair --dilation 2

Reports are JSON on stdout (or ``--out``). Exit status 0 means the condition holds or the command succeeded, 1 a violation, 2 an inconclusive or unsupported question and 3 bad input.
"""
# Standard Library
import argparse
import logging
import sys
import typing as t

# Pyramid
import plaster

# Oversampling
from oversampling.system import Settings
from oversampling.system.devop.cmdline import load_settings
from oversampling.system.devop.scripts import EXIT_INCONCLUSIVE
from oversampling.system.devop.scripts import EXIT_INPUT_ERROR
from oversampling.system.devop.scripts import INPUT_ERRORS
from oversampling.system.devop.scripts import UNSUPPORTED_ERRORS
from oversampling.system.devop.scripts import Command
from oversampling.system.devop.scripts import Report
from oversampling.system.devop.scripts import approx
from oversampling.system.devop.scripts import cond
from oversampling.system.devop.scripts import error_report
from oversampling.system.devop.scripts import feedback
from oversampling.system.devop.scripts import frames
from oversampling.system.devop.scripts import sigain
from oversampling.system.devop.scripts import write_report
from oversampling.utils.config.exceptions import OversamplingConfigException


logger = logging.getLogger(__name__)

GROUPS = (cond, frames, sigain, approx)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oversampling", description="Exact checks for oversampled affine frames")
    subparsers = parser.add_subparsers(dest="group", required=True)
    for group in GROUPS:
        group.register(subparsers)
    return parser


def parse_command(argv: t.Sequence[str]) -> Command:
    """Parse arguments, not including the program name.

    :raises SystemExit: usage errors, with argparse's status 2 replaced by the input error status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        if e.code:
            raise SystemExit(EXIT_INPUT_ERROR)
        raise
    return Command(verb=(args.group, args.verb), handler=args.handler, args=args, out=args.out)


def command_settings(command: Command) -> Settings:
    settings = load_settings(command.args.config)
    return settings.override(jmax=command.args.jmax, search_radius=command.args.radius)


def run(command: Command, settings: Settings) -> Report:
    """Execute a command, turning domain errors into error reports with their exit status."""
    try:
        return command.handler(command.args, settings)
    except UNSUPPORTED_ERRORS as e:
        logger.info("%s %s: %s", *command.verb, e)
        return error_report(e), EXIT_INCONCLUSIVE
    except INPUT_ERRORS as e:
        feedback("{0} {1}: {2}".format(command.verb[0], command.verb[1], e))
        return error_report(e), EXIT_INPUT_ERROR


def main(argv: t.List[str] = sys.argv):
    """Run one command and exit with its status.

    :param argv: Command line arguments, the first one being the program name
    :raises sys.SystemExit:
    """
    command = parse_command(argv[1:])
    try:
        settings = command_settings(command)
    except (OSError, ValueError, plaster.PlasterError, OversamplingConfigException) as e:
        feedback("Cannot load settings from {0}: {1}".format(command.args.config, e))
        write_report(error_report(e), command.out)
        sys.exit(EXIT_INPUT_ERROR)
    report, status = run(command, settings)
    write_report(report, command.out)
    sys.exit(status)
