"""``oversampling cond`` verbs.

Decide the lattice conditions under which oversampling keeps frame bounds. The input document holds ``dilation`` and ``lattice`` (and ``translations`` for ``reduce``); one dimensional cases can be given with ``--p``, ``--q`` and ``--lambda`` instead.
"""
# Standard Library
import argparse
import typing as t

# Oversampling
from oversampling.system import Settings
from oversampling.system.conditions import DilationSpec
from oversampling.system.conditions import certificate_1d
from oversampling.system.conditions import check_general_strong
from oversampling.system.conditions import check_strong
from oversampling.system.conditions import check_support_strong
from oversampling.system.conditions import check_support_weak
from oversampling.system.conditions import check_weak
from oversampling.system.conditions import prop36_battery
from oversampling.system.conditions import reduce_general
from oversampling.system.devop.scripts import EXIT_INCONCLUSIVE
from oversampling.system.devop.scripts import EXIT_OK
from oversampling.system.devop.scripts import EXIT_VIOLATED
from oversampling.system.devop.scripts import Report
from oversampling.system.devop.scripts import add_common_arguments
from oversampling.system.devop.scripts import one_dimensional
from oversampling.system.devop.scripts import read_input
from oversampling.system.devop.scripts import verdict_report
from oversampling.system.exceptions import InputError
from oversampling.system.lattice import Lattice
from oversampling.system.model import json as model_json


def load_pair(args: argparse.Namespace, settings: Settings) -> t.Tuple[DilationSpec, Lattice, t.Optional[Lattice]]:
    """Dilation, oversampling lattice and optional translation lattice of the invocation."""
    if not args.input:
        dilation, lattice = one_dimensional(args, settings)
        return dilation, lattice, None
    document = model_json.loads(read_input(args.input), "condition")
    if "lattice" not in document:
        raise InputError("'lattice' is a required property", "$")
    dilation = model_json.decode_dilation(document["dilation"], settings)
    lattice = model_json.decode_lattice(document["lattice"], "$.lattice")
    translations = None
    if "translations" in document:
        translations = model_json.decode_lattice(document["translations"], "$.translations")
    return dilation, lattice, translations


def strong(args: argparse.Namespace, settings: Settings) -> Report:
    dilation, lattice, translations = load_pair(args, settings)
    if translations is not None:
        return verdict_report(check_general_strong(dilation, translations, lattice, settings.jmax))
    return verdict_report(check_strong(dilation, lattice, settings.jmax))


def weak(args: argparse.Namespace, settings: Settings) -> Report:
    dilation, lattice, _ = load_pair(args, settings)
    return verdict_report(check_weak(dilation, lattice, settings.jmax))


def jstrong(args: argparse.Namespace, settings: Settings) -> Report:
    dilation, lattice, _ = load_pair(args, settings)
    return verdict_report(check_support_strong(dilation, lattice, args.j0, settings.jmax))


def jweak(args: argparse.Namespace, settings: Settings) -> Report:
    dilation, lattice, _ = load_pair(args, settings)
    return verdict_report(check_support_weak(dilation, lattice, args.j0, settings.jmax))


def prop36(args: argparse.Namespace, settings: Settings) -> Report:
    """All six equivalent statements; exit 2 when they disagree."""
    dilation, lattice, _ = load_pair(args, settings)
    report = prop36_battery(dilation, lattice, settings.jmax)
    if not report.consistent:
        status = EXIT_INCONCLUSIVE
    else:
        status = EXIT_OK if report.strong else EXIT_VIOLATED
    return model_json.encode_prop36(report), status


def cert1d(args: argparse.Namespace, settings: Settings) -> Report:
    if args.p is None or args.lam is None:
        raise InputError("cert1d needs --p and --lambda", "$")
    certified = certificate_1d(args.p, args.q, args.lam)
    return certified, EXIT_OK if certified else EXIT_VIOLATED


def reduce(args: argparse.Namespace, settings: Settings) -> Report:
    dilation, lattice, translations = load_pair(args, settings)
    if translations is None:
        raise InputError("'translations' is a required property", "$")
    reduced = reduce_general(dilation, translations, lattice)
    verdict = check_strong(reduced.dilation, reduced.lattice, settings.jmax)
    report = {
        "dilation": model_json.encode_matrix(reduced.dilation.matrix),
        "lattice": model_json.encode_lattice(reduced.lattice),
        "change_of_basis": model_json.encode_matrix(reduced.change_of_basis),
        "strong": model_json.encode_verdict(verdict),
    }
    _, status = verdict_report(verdict)
    return report, status


VERBS = {
    "strong": (strong, "Strong condition (Σ BʲΛ*) ∩ Zⁿ ⊂ Λ*"),
    "weak": (weak, "Weak condition BʲZⁿ ∩ Λ* ⊂ BʲΛ*"),
    "jstrong": (jstrong, "Strong condition shifted by --j0"),
    "jweak": (jweak, "Weak condition shifted by --j0"),
    "prop36": (prop36, "Six equivalent statements for an integer dilation"),
    "cert1d": (cert1d, "One dimensional gcd certificate"),
    "reduce": (reduce, "Reduce a general translation lattice to Zⁿ"),
}


def register(subparsers):
    group = subparsers.add_parser("cond", help="Lattice conditions")
    verbs = group.add_subparsers(dest="verb", required=True)
    for name, (handler, help_text) in VERBS.items():
        parser = verbs.add_parser(name, help=help_text)
        parser.add_argument("input", nargs="?", help="Condition JSON document, - for stdin")
        parser.add_argument("--p", type=int, help="Numerator of a one dimensional dilation")
        parser.add_argument("--q", type=int, default=1, help="Denominator of a one dimensional dilation")
        parser.add_argument("--lambda", dest="lam", type=int, help="Oversampling factor, Λ = (1/λ)Z")
        parser.add_argument("--j0", type=int, default=0, help="Shift J₀ of the support conditions")
        add_common_arguments(parser)
        parser.set_defaults(handler=handler)
