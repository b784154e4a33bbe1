"""JSON codec and schema validation."""
# Standard Library
import json
from fractions import Fraction

import pytest

# Oversampling
from oversampling.system.conditions import DilationSpec
from oversampling.system.conditions import check_strong
from oversampling.system.exactnum.quadratic import ComplexQuad
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.exceptions import InputError
from oversampling.system.frames import StepFunction
from oversampling.system.lattice import Lattice
from oversampling.system.model import json as model_json


def test_format_path():
    assert model_json.format_path([]) == "$"
    assert model_json.format_path(["boxes", 0, "lo"]) == "$.boxes[0].lo"


def test_not_json():
    with pytest.raises(InputError) as e:
        model_json.loads("{", "lattice")
    assert e.value.path == "$"
    assert "Not valid JSON" in str(e.value)


def test_lattice_roundtrip():
    lattice = model_json.load('{"dim": 2, "basis": [["1/2", 0], [0, "1/3"]]}', "lattice")
    assert lattice == Lattice([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    encoded = model_json.encode_lattice(lattice)
    assert encoded["dim"] == 2
    assert model_json.load(json.dumps(encoded), "lattice") == lattice


def test_lattice_dim_mismatch():
    with pytest.raises(InputError) as e:
        model_json.load('{"dim": 3, "basis": [[1, 0], [0, 1]]}', "lattice")
    assert e.value.path == "$.dim"


def test_ragged_matrix():
    with pytest.raises(InputError):
        model_json.load('{"basis": [[1, 0], [1]]}', "lattice")


def test_bad_rational_reports_path():
    """Zero denominators fail the pattern at the offending entry."""
    with pytest.raises(InputError) as e:
        model_json.load('{"basis": [[1, 0], [0, "1/0"]]}', "lattice")
    assert e.value.path == "$.basis[1][1]"


def test_float_entries_refused():
    with pytest.raises(InputError) as e:
        model_json.load('{"basis": [[0.5]]}', "lattice")
    assert e.value.path == "$.basis[0][0]"


def test_unknown_property():
    with pytest.raises(InputError) as e:
        model_json.load('{"basis": [[1]], "origin": [0]}', "lattice")
    assert e.value.path == "$"
    assert "origin" in str(e.value)


def test_step_function():
    text = '{"breakpoints": ["-1", "-2/3"], "values": [{"re": {"a": 0, "b": "1/2"}}]}'
    f = model_json.load(text, "step")
    r = QuadScalar(0, Fraction(1, 2), 2)
    assert f == StepFunction.indicator(-1, Fraction(-2, 3), r)
    assert f.radicand == 2


def test_step_function_missing_real_part():
    text = '{"breakpoints": [0, 1], "values": [{"im": {"a": 1}}]}'
    with pytest.raises(InputError) as e:
        model_json.load(text, "step")
    assert e.value.path == "$.values[0]"


def test_step_function_decreasing_breakpoints():
    text = '{"breakpoints": [1, 0], "values": [{"re": {"a": 1}}]}'
    with pytest.raises(InputError) as e:
        model_json.load(text, "step")
    assert "increasing" in str(e.value)


def test_generators(fig1):
    encoded = model_json.encode_generators(fig1)
    assert encoded["dilation"] == "3/2"
    decoded = model_json.load(json.dumps(encoded), "generators")
    assert decoded.dilation == Fraction(3, 2)
    assert decoded.generators == fig1.generators


def test_generators_error_names_generator():
    document = {
        "dilation": "2",
        "generators": [
            {"breakpoints": [1, 2], "values": [{"re": {"a": 1}}]},
            {"breakpoints": [2, 1], "values": [{"re": {"a": 1}}]},
        ],
    }
    with pytest.raises(InputError) as e:
        model_json.load(json.dumps(document), "generators")
    assert e.value.path == "$.generators[1]"


def test_region():
    region = model_json.load('{"dim": 1, "boxes": [{"lo": [1], "hi": [2]}, {"lo": ["-2"], "hi": ["-1"]}]}', "region")
    assert region.measure == 2
    encoded = model_json.encode_region(region)
    assert encoded["dim"] == 1
    assert len(encoded["boxes"]) == 2


def test_region_missing_dim():
    with pytest.raises(InputError) as e:
        model_json.load('{"boxes": []}', "region")
    assert "dim" in str(e.value)


def test_dilation_scalar_and_matrix():
    assert model_json.decode_dilation("3/2") == DilationSpec.scalar(Fraction(3, 2))
    spec = model_json.decode_dilation([[1, 1], [-1, 1]])
    assert spec.n == 2


def test_encode_value():
    value = {"k": [Fraction(1, 3), 2], "gain": float("inf"), "flag": True, "q": QuadScalar(1, 1, 2)}
    assert model_json.encode_value(value) == {
        "k": ["1/3", 2],
        "gain": "inf",
        "flag": True,
        "q": {"a": "1", "b": "1"},
    }


def test_encode_value_refuses_unknown():
    with pytest.raises(TypeError):
        model_json.encode_value(object())


def test_encode_complex():
    z = ComplexQuad(QuadScalar(Fraction(1, 2), 0, 2), QuadScalar(0, -1, 2))
    assert model_json.encode_complex(z) == {"re": {"a": "1/2", "b": "0"}, "im": {"a": "0", "b": "-1"}}


def test_encode_verdict():
    verdict = check_strong(DilationSpec.scalar(Fraction(3, 2)), Lattice.scaled(Fraction(1, 2)), 5)
    assert verdict.is_violated
    report = model_json.encode_verdict(verdict)
    assert report["status"] == verdict.status.value
    assert json.loads(model_json.dumps(report)) == report


def test_dumps_is_canonical():
    text = model_json.dumps({"b": 1, "a": "√2"})
    assert text.index('"a"') < text.index('"b"')
    assert "√2" in text
    assert text.endswith("\n")
