"""``oversampling sigain`` verbs.

Regions are given with ``--region`` as a built-in name (``box-pair``, ``shannon`` or any generator built-in, whose support is taken) or as the path of a RegionSet JSON document.
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
from oversampling.system.devop.scripts import parse_dilation
from oversampling.system.devop.scripts import read_input
from oversampling.system.devop.scripts import resolve_generators
from oversampling.system.devop.scripts import verdict_report
from oversampling.system.exactnum.rational import as_vector
from oversampling.system.exactnum.rational import format_rational
from oversampling.system.exceptions import InputError
from oversampling.system.frames import BUILTINS
from oversampling.system.frames import builtin
from oversampling.system.lattice import Lattice
from oversampling.system.model import json as model_json
from oversampling.system.sigain import REGIONS
from oversampling.system.sigain import RegionSet
from oversampling.system.sigain import behera_class
from oversampling.system.sigain import overlap_measure
from oversampling.system.sigain import oversample_crosscheck
from oversampling.system.sigain import oversample_with_support
from oversampling.system.sigain import si_gain_check


def resolve_region(value: str) -> RegionSet:
    if value in REGIONS:
        return REGIONS[value]()
    if value in BUILTINS:
        return RegionSet.from_generators(builtin(value))
    return model_json.load(read_input(value), "region")


def load_lattice(args: argparse.Namespace, dim: int) -> Lattice:
    if args.lattice:
        return model_json.load(read_input(args.lattice), "lattice")
    if dim != 1:
        raise InputError("Regions in dimension {0} need --lattice".format(dim), "$")
    return Lattice.scaled(Fraction(1, args.lam))


def overlap(args: argparse.Namespace, settings: Settings) -> Report:
    region = resolve_region(args.region)
    k = as_vector(args.k.split(","))
    measure = overlap_measure(region, k)
    return {"k": [format_rational(x) for x in k], "measure": format_rational(measure)}, EXIT_OK


def gain(args: argparse.Namespace, settings: Settings) -> Report:
    region = resolve_region(args.region)
    return verdict_report(si_gain_check(region, load_lattice(args, region.dim)))


def _dilation(args: argparse.Namespace, dim: int, settings: Settings):
    dilation = parse_dilation(args.dilation, settings)
    if dilation.n == 1 and dim > 1:
        return type(dilation).scalar(dilation.matrix[0][0], dim, settings)
    return dilation


def class_(args: argparse.Namespace, settings: Settings) -> Report:
    region = resolve_region(args.region)
    found = behera_class(region, _dilation(args, region.dim, settings), args.rmax)
    return {"class": model_json.encode_value(found), "r_max": args.rmax}, EXIT_OK


def crosscheck(args: argparse.Namespace, settings: Settings) -> Report:
    psi = resolve_generators(args.gen, settings)
    report = oversample_crosscheck(psi, psi.dilation, args.r)
    return model_json.encode_crosscheck(report), EXIT_OK if report.agrees else EXIT_VIOLATED


def support(args: argparse.Namespace, settings: Settings) -> Report:
    region = resolve_region(args.region)
    verdict = oversample_with_support(region, _dilation(args, region.dim, settings), load_lattice(args, region.dim), args.j0,
                                      settings.jmax)
    return verdict_report(verdict)


VERBS = {
    "overlap": (overlap, "Measure of K ∩ (K + k)"),
    "gain": (gain, "Whether the support allows Λ-shift-invariance"),
    "class": (class_, "Class r of an integer dilation read off the support"),
    "crosscheck": (crosscheck, "Class against oversampled Parseval checks"),
    "support": (support, "Frame bounds under the support condition and the shifted strong condition"),
}


def register(subparsers):
    group = subparsers.add_parser("sigain", help="Shift-invariance gain")
    verbs = group.add_subparsers(dest="verb", required=True)
    for name, (handler, help_text) in VERBS.items():
        parser = verbs.add_parser(name, help=help_text)
        add_common_arguments(parser)
        if name == "crosscheck":
            parser.add_argument("--gen", required=True, help="Built-in generator name or generator JSON file")
            parser.add_argument("--r", type=int, default=3)
        else:
            parser.add_argument("--region", required=True, help="Built-in region name or RegionSet JSON file")
        if name == "overlap":
            parser.add_argument("--k", required=True, help="Comma separated shift, e.g. 2 or 1,0")
        if name in ("gain", "support"):
            parser.add_argument("--lattice", help="Lattice JSON file")
            parser.add_argument("--lambda", dest="lam", type=int, default=1, help="Λ = (1/λ)Z in one dimension")
        if name in ("class", "support"):
            parser.add_argument("--dilation", default="2", help="3/2, 2 or JSON rows such as [[1,1],[-1,1]]")
        if name == "class":
            parser.add_argument("--rmax", type=int, default=8)
        if name == "support":
            parser.add_argument("--j0", type=int, default=0)
        parser.set_defaults(handler=handler)
