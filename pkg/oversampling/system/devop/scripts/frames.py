"""``oversampling frames`` verbs.

Exact checks of one dimensional affine systems with step function generators. ``--gen`` takes a built-in name (``fig1``, ``shannon``, ``class-one``) or the path of a generator JSON document.
"""
# Standard Library
import argparse
from fractions import Fraction

# Oversampling
from oversampling.system import Settings
from oversampling.system.devop.scripts import EXIT_OK
from oversampling.system.devop.scripts import EXIT_VIOLATED
from oversampling.system.devop.scripts import Report
from oversampling.system.devop.scripts import add_common_arguments
from oversampling.system.devop.scripts import eps_type
from oversampling.system.devop.scripts import read_input
from oversampling.system.devop.scripts import resolve_generators
from oversampling.system.devop.scripts import verdict_report
from oversampling.system.exceptions import InputError
from oversampling.system.frames import StepFunction
from oversampling.system.frames import averaging_experiment
from oversampling.system.frames import check_dual
from oversampling.system.frames import check_parseval
from oversampling.system.frames import check_parseval_specialized
from oversampling.system.frames import frame_functional
from oversampling.system.frames import t_alpha
from oversampling.system.model import json as model_json


#: Test function used when ``--f`` is not given
DEFAULT_F = (1, 2)


def load_f(args: argparse.Namespace, radicand: int) -> StepFunction:
    if args.f:
        return model_json.load(read_input(args.f), "step", radicand=radicand)
    return StepFunction.indicator(*DEFAULT_F, 1, radicand)


def parseval(args: argparse.Namespace, settings: Settings) -> Report:
    psi = resolve_generators(args.gen, settings)
    if args.specialized:
        return verdict_report(check_parseval_specialized(psi, args.lam))
    return verdict_report(check_parseval(psi, args.lam))


def dual(args: argparse.Namespace, settings: Settings) -> Report:
    psi = resolve_generators(args.gen, settings)
    phi = resolve_generators(args.phi, settings) if args.phi else psi
    return verdict_report(check_dual(psi, phi, args.lam))


def talpha(args: argparse.Namespace, settings: Settings) -> Report:
    psi = resolve_generators(args.gen, settings)
    phi = resolve_generators(args.phi, settings) if args.phi else psi
    values = t_alpha(psi, phi, args.lam, args.alpha)
    report = {"alpha": args.alpha, "lambda": args.lam, "t": model_json.encode_step(values)}
    if values.period is not None:
        report["period"] = model_json.encode_value(values.period)
    return report, EXIT_OK


def functional(args: argparse.Namespace, settings: Settings) -> Report:
    psi = resolve_generators(args.gen, settings)
    report = frame_functional(load_f(args, psi.radicand), psi, args.lam)
    return model_json.encode_functional(report), EXIT_OK if report.is_isometric else EXIT_VIOLATED


def parse_schedule(text: str):
    """``"1:0.01,2:0.001"`` into matching ``J`` and ``ε`` lists."""
    j_schedule, eps_schedule = [], []
    for item in text.split(","):
        try:
            j, eps = item.split(":")
            j_schedule.append(int(j))
            eps_schedule.append(Fraction(eps))
        except ValueError:
            raise InputError("Schedule entries look like J:eps, got {0!r}".format(item), "$")
    return j_schedule, eps_schedule


def average(args: argparse.Namespace, settings: Settings) -> Report:
    """Averaging table; without ``--schedule`` the rows are ``J = 1…jmax`` with ε divided by 10 per row."""
    psi = resolve_generators(args.gen, settings)
    if args.schedule:
        j_schedule, eps_schedule = parse_schedule(args.schedule)
    else:
        j_schedule = list(range(1, settings.jmax + 1))
        eps_schedule = [args.eps / 10 ** k for k in range(len(j_schedule))]
    table = averaging_experiment(load_f(args, psi.radicand), psi, args.lam, j_schedule, eps_schedule, settings)
    return model_json.encode_averaging(table), EXIT_OK


VERBS = {
    "parseval": (parseval, "Parseval frame check at translation lattice (1/λ)Z"),
    "dual": (dual, "Dual frame check of --gen against --phi"),
    "talpha": (talpha, "The function t_α as a step function"),
    "functional": (functional, "Exact frame functional N(f, (1/λ)Z)"),
    "average": (average, "Translational averaging convergence table"),
}


def register(subparsers):
    group = subparsers.add_parser("frames", help="Affine frames with step generators")
    verbs = group.add_subparsers(dest="verb", required=True)
    for name, (handler, help_text) in VERBS.items():
        parser = verbs.add_parser(name, help=help_text)
        parser.add_argument("--gen", required=True, help="Built-in generator name or generator JSON file")
        parser.add_argument("--lambda", dest="lam", type=int, default=1, help="Oversampling factor")
        add_common_arguments(parser)
        if name in ("dual", "talpha"):
            parser.add_argument("--phi", help="Dual generator set, defaults to --gen")
        if name == "talpha":
            parser.add_argument("--alpha", type=int, required=True)
        if name == "parseval":
            parser.add_argument("--specialized", action="store_true", help="Use the reduced equation set")
        if name in ("functional", "average"):
            parser.add_argument("--f", help="Step function JSON file, defaults to the indicator of [1, 2)")
        if name == "average":
            parser.add_argument("--eps", type=eps_type, default=Fraction(1, 100))
            parser.add_argument("--schedule", help="Comma separated J:eps pairs")
        parser.set_defaults(handler=handler)
