"""JSON schemas of every document the command line reads."""
# Standard Library
import typing as t


RATIONAL_PATTERN = r"^\s*-?[0-9]+(\s*/\s*[0-9]*[1-9][0-9]*)?\s*$"

DEFS = {
    "rational": {
        "anyOf": [
            {"type": "string", "pattern": RATIONAL_PATTERN},
            {"type": "integer"},
        ],
    },
    "vector": {
        "type": "array",
        "items": {"$ref": "#/$defs/rational"},
        "minItems": 1,
    },
    "matrix": {
        "type": "array",
        "items": {"$ref": "#/$defs/vector"},
        "minItems": 1,
    },
    "quad": {
        "type": "object",
        "properties": {
            "a": {"$ref": "#/$defs/rational"},
            "b": {"$ref": "#/$defs/rational"},
        },
        "required": ["a"],
        "additionalProperties": False,
    },
    "complex": {
        "type": "object",
        "properties": {
            "re": {"$ref": "#/$defs/quad"},
            "im": {"$ref": "#/$defs/quad"},
        },
        "required": ["re"],
        "additionalProperties": False,
    },
    "radicand": {"type": "integer", "minimum": 2},
    "step": {
        "type": "object",
        "properties": {
            "breakpoints": {"type": "array", "items": {"$ref": "#/$defs/rational"}},
            "values": {"type": "array", "items": {"$ref": "#/$defs/complex"}},
            "radicand": {"$ref": "#/$defs/radicand"},
        },
        "required": ["breakpoints", "values"],
        "additionalProperties": False,
    },
    "lattice": {
        "type": "object",
        "properties": {
            "dim": {"type": "integer", "minimum": 1},
            "basis": {"$ref": "#/$defs/matrix"},
        },
        "required": ["basis"],
        "additionalProperties": False,
    },
    "dilation": {
        "anyOf": [
            {"$ref": "#/$defs/rational"},
            {"$ref": "#/$defs/matrix"},
        ],
    },
}


def _document(body: dict) -> dict:
    schema = {"$schema": "https://json-schema.org/draft/2020-12/schema", "$defs": DEFS}
    schema.update(body)
    return schema


#: A lattice on its own
LATTICE = _document({"$ref": "#/$defs/lattice"})

#: A step function on its own
STEP_FUNCTION = _document({"$ref": "#/$defs/step"})

#: Input of the ``cond`` verbs
CONDITION = _document({
    "type": "object",
    "properties": {
        "dilation": {"$ref": "#/$defs/dilation"},
        "lattice": {"$ref": "#/$defs/lattice"},
        "translations": {"$ref": "#/$defs/lattice"},
    },
    "required": ["dilation"],
    "additionalProperties": False,
})

#: A generator set, used by the ``frames`` and ``sigain crosscheck`` verbs
GENERATORS = _document({
    "type": "object",
    "properties": {
        "dilation": {"$ref": "#/$defs/rational"},
        "generators": {"type": "array", "items": {"$ref": "#/$defs/step"}, "minItems": 1},
        "radicand": {"$ref": "#/$defs/radicand"},
    },
    "required": ["dilation", "generators"],
    "additionalProperties": False,
})

#: A union of half-open boxes
REGION_SET = _document({
    "type": "object",
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "boxes": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "lo": {"$ref": "#/$defs/vector"},
                    "hi": {"$ref": "#/$defs/vector"},
                },
                "required": ["lo", "hi"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["dim", "boxes"],
    "additionalProperties": False,
})

SCHEMAS: t.Dict[str, dict] = {
    "lattice": LATTICE,
    "step": STEP_FUNCTION,
    "condition": CONDITION,
    "generators": GENERATORS,
    "region": REGION_SET,
}
