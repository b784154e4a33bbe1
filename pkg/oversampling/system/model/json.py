"""Exact JSON codec for the objects the command line reads and reports.

Rationals travel as ``"p/q"`` strings, quadratic scalars as ``{"a": …, "b": …}`` and matrices as row-major arrays. Decoding validates against :py:mod:`oversampling.system.model.schemas` first, so malformed documents fail with the JSON path of the first offending value.
"""
# Standard Library
import json
import logging
import math
import typing as t
from fractions import Fraction

from jsonschema import Draft202012Validator

# Oversampling
from oversampling.system import DEFAULT_SETTINGS
from oversampling.system import Settings
from oversampling.system.approx import Constellation
from oversampling.system.approx import CoverageReport
from oversampling.system.conditions import DilationSpec
from oversampling.system.conditions import Prop36Report
from oversampling.system.conditions import Verdict
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exactnum.quadratic import DEFAULT_RADICAND
from oversampling.system.exactnum.quadratic import ComplexQuad
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.exactnum.rational import as_rational
from oversampling.system.exactnum.rational import format_rational
from oversampling.system.exceptions import InputError
from oversampling.system.frames import AveragingTable
from oversampling.system.frames import FunctionalReport
from oversampling.system.frames import GeneratorSet
from oversampling.system.frames import StepFunction
from oversampling.system.lattice import Lattice
from oversampling.system.model.schemas import SCHEMAS
from oversampling.system.sigain import CrosscheckReport
from oversampling.system.sigain import RegionSet


logger = logging.getLogger(__name__)


def format_path(path: t.Iterable[t.Union[str, int]]) -> str:
    """``["boxes", 0, "lo"]`` as ``$.boxes[0].lo``."""
    result = "$"
    for part in path:
        if isinstance(part, int):
            result += "[{0}]".format(part)
        else:
            result += ".{0}".format(part)
    return result


def validate(kind: str, document: t.Any):
    """Check a decoded document against the named schema.

    :raises InputError: the first violation, ordered by path
    """
    validator = Draft202012Validator(SCHEMAS[kind])
    errors = sorted(validator.iter_errors(document), key=lambda e: [str(p) for p in e.absolute_path])
    if errors:
        first = errors[0]
        for other in errors[1:]:
            logger.debug("Also invalid at %s: %s", format_path(other.absolute_path), other.message)
        raise InputError(first.message, format_path(first.absolute_path))


def loads(text: str, kind: str) -> t.Any:
    """Parse and validate a JSON document.

    :raises InputError: not JSON or not matching the schema
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("Not valid JSON: {0}".format(e.msg), "$") from e
    validate(kind, document)
    return document


def dumps(report: t.Any) -> str:
    """Canonical report text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# Encoders

def encode_quad(value: QuadScalar) -> dict:
    return {"a": format_rational(value.a), "b": format_rational(value.b)}


def encode_complex(value: ComplexQuad) -> dict:
    return {"re": encode_quad(value.re), "im": encode_quad(value.im)}


def encode_matrix(matrix: mx.Matrix) -> t.List[t.List[str]]:
    return [[format_rational(x) for x in row] for row in matrix]


def encode_value(value: t.Any) -> t.Any:
    """Recursive encoder for witness payloads."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return "inf" if math.isinf(value) else value
    if isinstance(value, QuadScalar):
        return encode_quad(value)
    if isinstance(value, ComplexQuad):
        return encode_complex(value)
    if isinstance(value, Lattice):
        return encode_lattice(value)
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    raise TypeError("Cannot encode {0!r}".format(value))


def encode_lattice(lattice: Lattice) -> dict:
    return {"dim": lattice.dim, "basis": encode_matrix(lattice.basis)}


def encode_step(f: StepFunction) -> dict:
    return {
        "breakpoints": [format_rational(b) for b in f.breakpoints],
        "values": [encode_complex(v) for v in f.values],
        "radicand": f.radicand,
    }


def encode_generators(psis: GeneratorSet) -> dict:
    return {
        "dilation": format_rational(psis.dilation),
        "generators": [encode_step(psi) for psi in psis],
        "radicand": psis.radicand,
    }


def encode_region(region: RegionSet) -> dict:
    boxes = [{"lo": [format_rational(x) for x in lo], "hi": [format_rational(x) for x in hi]} for lo, hi in region.boxes]
    return {"dim": region.dim, "boxes": boxes}


def encode_verdict(verdict: Verdict) -> dict:
    return {
        "status": verdict.status.value,
        "witness": encode_value(verdict.witness),
        "certificate": verdict.certificate.value if verdict.certificate else None,
        "bound": verdict.bound,
        "notes": list(verdict.notes),
    }


def encode_coverage(report: CoverageReport) -> dict:
    return {
        "pair": report.pair,
        "method": report.method,
        "expected": report.expected,
        "smallest": report.smallest,
        "largest": report.largest,
        "ok": report.ok,
    }


def encode_constellation(constellation: Constellation) -> dict:
    return {
        "epsilon": format_rational(constellation.epsilon),
        "size": len(constellation),
        "points": [[format_rational(x) for x in p] for p in constellation.points],
        "warnings": list(constellation.warnings),
    }


def encode_prop36(report: Prop36Report) -> dict:
    return dict(report.as_dict(), consistent=report.consistent)


def encode_functional(report: FunctionalReport) -> dict:
    coefficients = [
        {"generator": index, "j": j, "m": format_rational(m), "value": encode_complex(value)}
        for (index, j, m), value in sorted(report.coefficients.items())
    ]
    return {
        "lambda": report.lam,
        "value": encode_quad(report.value),
        "norm2": encode_quad(report.norm2),
        "isometric": report.is_isometric,
        "scales": list(report.scales),
        "coefficients": coefficients,
    }


def encode_averaging(table: AveragingTable) -> dict:
    rows = []
    for row in table.rows:
        rows.append({
            "J": row.j,
            "epsilon": row.epsilon,
            "size": row.size,
            "average": [row.average.real, row.average.imag],
            "error": row.error,
            "bound": row.bound,
            "warnings": list(row.warnings),
        })
    return {"target": encode_quad(table.target), "norm2": encode_quad(table.norm2), "rows": rows}


def encode_crosscheck(report: CrosscheckReport) -> dict:
    return {
        "class": encode_value(report.behera_class),
        "r": report.r,
        "semi_orthogonal": report.semi_orthogonal,
        "agrees": report.agrees,
        "rows": [
            {"s": row.s, "parseval": encode_verdict(row.parseval), "class_allows": row.class_allows, "agrees": row.agrees}
            for row in report.rows
        ],
    }


# Decoders, applied to validated documents

def decode_quad(document: dict, radicand: int) -> QuadScalar:
    return QuadScalar(as_rational(document["a"]), as_rational(document.get("b", 0)), radicand)


def decode_complex(document: dict, radicand: int) -> ComplexQuad:
    im = document.get("im", {"a": 0})
    return ComplexQuad(decode_quad(document["re"], radicand), decode_quad(im, radicand))


def decode_matrix(rows: t.Sequence[t.Sequence]) -> mx.RatMatrix:
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise InputError("Matrix rows have different lengths: {0}".format(sorted(widths)))
    return tuple(tuple(as_rational(x) for x in row) for row in rows)


def decode_lattice(document: dict, path: str = "$") -> Lattice:
    basis = decode_matrix(document["basis"])
    if "dim" in document and document["dim"] != len(basis):
        raise InputError("Basis has {0} rows, dim says {1}".format(len(basis), document["dim"]), path + ".dim")
    return Lattice(basis)


def decode_dilation(document: t.Any, settings: Settings = DEFAULT_SETTINGS) -> DilationSpec:
    if isinstance(document, list):
        return DilationSpec.from_rows(document, settings)
    return DilationSpec.scalar(as_rational(document), settings=settings)


def decode_step(document: dict, radicand: t.Optional[int] = None) -> StepFunction:
    radicand = document.get("radicand", radicand or DEFAULT_RADICAND)
    values = [decode_complex(v, radicand) for v in document["values"]]
    try:
        return StepFunction(document["breakpoints"], values, radicand)
    except ValueError as e:
        raise InputError(str(e)) from e


def decode_generators(document: dict, radicand: t.Optional[int] = None) -> GeneratorSet:
    """Generator set of a document; ``radicand`` applies when the document does not name one."""
    radicand = document.get("radicand", radicand or DEFAULT_RADICAND)
    generators = []
    for index, g in enumerate(document["generators"]):
        try:
            generators.append(decode_step(g, radicand))
        except InputError as e:
            raise InputError(e.args[0], "$.generators[{0}]".format(index)) from e
    return GeneratorSet(generators=tuple(generators), dilation=as_rational(document["dilation"]), radicand=radicand)


def decode_region(document: dict) -> RegionSet:
    return RegionSet(document["dim"], [(box["lo"], box["hi"]) for box in document["boxes"]])


DECODERS: t.Dict[str, t.Callable[[t.Any], t.Any]] = {
    "lattice": decode_lattice,
    "step": decode_step,
    "generators": decode_generators,
    "region": decode_region,
}


def load(text: str, kind: str, **options) -> t.Any:
    """Validate and decode a document of the given kind into its domain object.

    :param options: Passed to the decoder, e.g. the fallback ``radicand`` of step and generator documents
    """
    return DECODERS[kind](loads(text, kind), **options)
