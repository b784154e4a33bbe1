"""Command line scripts."""
# Standard Library
import argparse
import sys
import typing as t
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from textwrap import dedent

# Oversampling
from oversampling.system import DEFAULT_SETTINGS
from oversampling.system import Settings
from oversampling.system.conditions import DilationSpec
from oversampling.system.conditions import Status
from oversampling.system.conditions import Verdict
from oversampling.system.exactnum.rational import as_rational
from oversampling.system.exceptions import BadDilation
from oversampling.system.exceptions import BadIndex
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import HypothesisUnverifiable
from oversampling.system.exceptions import InputError
from oversampling.system.exceptions import NotALattice
from oversampling.system.exceptions import NotSublattice
from oversampling.system.exceptions import RadicandMismatch
from oversampling.system.exceptions import RankError
from oversampling.system.exceptions import Unsupported
from oversampling.system.frames import BUILTINS
from oversampling.system.frames import GeneratorSet
from oversampling.system.frames import builtin
from oversampling.system.lattice import Lattice
from oversampling.system.model import json as model_json
from oversampling.system.sigain import REGIONS


#: Holds, certified or success
EXIT_OK = 0

EXIT_VIOLATED = 1

#: Inconclusive verdict or unsupported input
EXIT_INCONCLUSIVE = 2

EXIT_INPUT_ERROR = 3

#: Exceptions reported as bad input
INPUT_ERRORS = (
    InputError, DimError, NotALattice, NotSublattice, BadDilation, BadIndex, RankError, RadicandMismatch,
    KeyError, ValueError,
)

#: Exceptions reported as a question the tool cannot settle
UNSUPPORTED_ERRORS = (Unsupported, HypothesisUnverifiable)

Report = t.Tuple[t.Any, int]
Handler = t.Callable[[argparse.Namespace, Settings], Report]


@dataclass(frozen=True)
class Command:
    """A parsed invocation: verb path, parameters and where the report goes."""

    verb: t.Tuple[str, str]
    handler: Handler
    args: argparse.Namespace
    out: t.Optional[str] = None


def feedback(message: str):
    """Print a human readable message on stderr.

    Reports own stdout, so nothing else may be printed there.
    """
    print(dedent(message), file=sys.stderr)


def exit_status(verdict: Verdict) -> int:
    if verdict.status is Status.VIOLATED:
        return EXIT_VIOLATED
    if verdict.status is Status.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def verdict_report(verdict: Verdict) -> Report:
    return model_json.encode_verdict(verdict), exit_status(verdict)


def read_input(path: str) -> str:
    """Text of an input document; ``-`` reads stdin.

    :raises InputError: the file cannot be read
    """
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError("Cannot read {0}: {1}".format(path, e.strerror))


def resolve_generators(value: str, settings: Settings = DEFAULT_SETTINGS) -> GeneratorSet:
    """A built-in generator name or the path of a generator JSON file.

    Documents without a ``radicand`` use ``settings.radicand``.

    :raises InputError: ``value`` names a built-in region, which has no generator set
    """
    if value in BUILTINS:
        return builtin(value)
    if value in REGIONS:
        raise InputError("{0!r} is a built-in region, not a generator set; it only works with the sigain verbs".format(value), "$")
    return model_json.load(read_input(value), "generators", radicand=settings.radicand)


def parse_dilation(text: str, settings: Settings = DEFAULT_SETTINGS) -> DilationSpec:
    """A dilation given on the command line as ``3/2`` or as JSON rows ``[[1, 1], [-1, 1]]``."""
    text = text.strip()
    if text.startswith("["):
        document = model_json.loads('{{"dilation": {0}}}'.format(text), "condition")
        return model_json.decode_dilation(document["dilation"], settings)
    return DilationSpec.scalar(as_rational(text), settings=settings)


def one_dimensional(args: argparse.Namespace, settings: Settings = DEFAULT_SETTINGS) -> t.Tuple[DilationSpec, Lattice]:
    """Dilation ``p/q`` and lattice ``(1/λ)Z`` from the ``--p``, ``--q`` and ``--lambda`` flags."""
    if args.p is None or args.lam is None:
        raise InputError("Give an input document or --p and --lambda", "$")
    return DilationSpec.scalar(Fraction(args.p, args.q), settings=settings), Lattice.scaled(Fraction(1, args.lam))


def add_common_arguments(parser: argparse.ArgumentParser):
    """Flags shared by every verb."""
    parser.add_argument("--config", help="INI file with [app:main] oversampling.* settings")
    parser.add_argument("--out", help="Write the JSON report here instead of stdout")
    parser.add_argument("--jmax", type=int, help="Truncation level of bounded checks")
    parser.add_argument("--radius", type=int, help="Search radius for approximate transversals")


def eps_type(value: str) -> Fraction:
    """Tolerances may be floats on the command line; they are kept as exact binary fractions."""
    try:
        return Fraction(value)
    except ValueError:
        raise argparse.ArgumentTypeError("Not a number: {0}".format(value))


def write_report(report: t.Any, out: t.Optional[str]):
    text = model_json.dumps(report)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def error_report(e: Exception) -> dict:
    return {
        "error": type(e).__name__,
        "message": e.args[0] if e.args else str(e),
        "path": getattr(e, "path", None),
    }
