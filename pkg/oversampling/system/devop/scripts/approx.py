"""``oversampling approx`` verbs."""
# Standard Library
import argparse
from fractions import Fraction

# Oversampling
from oversampling.system import Settings
from oversampling.system.approx import multiscale_constellation
from oversampling.system.approx import verify_coverage
from oversampling.system.devop.scripts import EXIT_OK
from oversampling.system.devop.scripts import EXIT_VIOLATED
from oversampling.system.devop.scripts import Report
from oversampling.system.devop.scripts import add_common_arguments
from oversampling.system.devop.scripts import eps_type
from oversampling.system.devop.scripts.cond import load_pair
from oversampling.system.model import json as model_json


def constellation(args: argparse.Namespace, settings: Settings) -> Report:
    """Multiscale constellation for ``|j| <= jmax`` with its coverage reports."""
    dilation, lattice, _ = load_pair(args, settings)
    result = multiscale_constellation(dilation, lattice, settings.jmax, args.eps, settings)
    reports = verify_coverage(result, settings)
    report = model_json.encode_constellation(result)
    report["coverage"] = [model_json.encode_coverage(r) for r in reports]
    return report, EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATED


def register(subparsers):
    group = subparsers.add_parser("approx", help="Approximate transversal constellations")
    verbs = group.add_subparsers(dest="verb", required=True)
    parser = verbs.add_parser("constellation", help="Constellation for AʲΛ/AʲZⁿ, |j| <= jmax")
    parser.add_argument("input", nargs="?", help="Condition JSON document, - for stdin")
    parser.add_argument("--p", type=int)
    parser.add_argument("--q", type=int, default=1)
    parser.add_argument("--lambda", dest="lam", type=int)
    parser.add_argument("--eps", type=eps_type, default=Fraction(1, 100))
    add_common_arguments(parser)
    parser.set_defaults(handler=constellation)
