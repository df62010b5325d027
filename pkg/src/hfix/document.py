"""JSON analysis documents: encoding of reports and the document schema.

Complex numbers are encoded as ``{"re": float, "im": float}``; the point at
infinity as the string ``"inf"``. Floats are written with Python's shortest
round-trip repr, so decoding is lossless.
"""

import json

from . import _kernels
from .poly import INF, is_inf

SCHEMA_VERSION = "1"

SYMBOLIC_ZETA = {
    "infinite_mu_fixed": "mu+conj(inf)",
    "infinite_omega_fixed": "inf+conj(omega)",
    "infinite_both": "inf+conj(inf)",
}


def encode_complex(z):
    if is_inf(z):
        return "inf"
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def decode_complex(obj):
    if obj == "inf":
        return INF
    return complex(obj["re"], obj["im"])


def encode_fixed_point(fp, component="f"):
    return {
        "component": component,
        "location": encode_complex(fp.location),
        "multiplier": encode_complex(fp.multiplier),
        "multiplicity": fp.multiplicity,
        "index": encode_complex(fp.index),
        "index_method": fp.index_method,
        "class": fp.classification,
        "weakly_repelling": fp.weakly_repelling,
        "simple": fp.simple,
        "multiplier_one": fp.multiplier_one,
        "rational_order": fp.rational_order,
    }


def encode_h_fixed_point(hp, i):
    return {
        "id": f"hfp-{i}",
        "mu": encode_complex(hp.mu),
        "omega": encode_complex(hp.omega),
        "zeta": encode_complex(hp.zeta) if hp.is_finite else SYMBOLIC_ZETA[hp.kind],
        "lambda": encode_complex(hp.lam),
        "theta": encode_complex(hp.theta),
        "kind": hp.kind,
        "multiplicity": list(hp.multiplicity),
    }


def new_document(command, inputs, tol):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": {
            "h": inputs.get("h"),
            "g": inputs.get("g"),
            "f": inputs.get("f"),
            "c": inputs.get("c"),
            "options": inputs.get("options", {}),
        },
        "fixed_points": [],
        "h_fixed_points": [],
        "verdicts": {"index_sum": None, "index_sum_pass": None},
        "diagnostics": {
            "backend": _kernels.BACKEND,
            "tolerances": tol.as_dict(),
            "iterations": 0,
            "warnings": [],
        },
    }


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False, allow_nan=False) + "\n"


def loads(text):
    return json.loads(text)


_complex = {
    "type": "object",
    "properties": {"re": {"type": "number"}, "im": {"type": "number"}},
    "required": ["re", "im"],
    "additionalProperties": False,
}
_point = {"oneOf": [{"$ref": "#/$defs/complex"}, {"const": "inf"}]}
_nullable_complex = {"oneOf": [{"$ref": "#/$defs/complex"}, {"type": "null"}]}

_fixed_point = {
    "type": "object",
    "properties": {
        "component": {"enum": ["f", "h", "g"]},
        "location": {"$ref": "#/$defs/point"},
        "multiplier": {"$ref": "#/$defs/complex"},
        "multiplicity": {"type": "integer", "minimum": 1},
        "index": {"$ref": "#/$defs/complex"},
        "index_method": {"enum": ["closed-form", "contour"]},
        "class": {"enum": ["super-attracting", "attracting", "repelling", "indifferent"]},
        "weakly_repelling": {"type": "boolean"},
        "simple": {"type": "boolean"},
        "multiplier_one": {"type": "boolean"},
        "rational_order": {"type": ["integer", "null"]},
    },
    "required": ["location", "multiplier", "multiplicity", "index", "class",
                 "weakly_repelling", "simple"],
}

_h_fixed_point = {
    "type": "object",
    "properties": {
        "id": {"type": "string", "pattern": "^hfp-[0-9]+$"},
        "mu": {"$ref": "#/$defs/point"},
        "omega": {"$ref": "#/$defs/point"},
        "zeta": {"oneOf": [{"$ref": "#/$defs/complex"},
                           {"enum": list(SYMBOLIC_ZETA.values())}]},
        "lambda": {"$ref": "#/$defs/complex"},
        "theta": {"$ref": "#/$defs/complex"},
        "kind": {"enum": ["finite", *SYMBOLIC_ZETA]},
        "multiplicity": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
    },
    "required": ["mu", "omega", "zeta", "lambda", "theta", "kind"],
}

_analysis = {
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["analyze", "harmonic", "quadratic", "verify"]},
        "input": {
            "type": "object",
            "properties": {
                "h": {"type": ["string", "null"]},
                "g": {"type": ["string", "null"]},
                "f": {"type": ["string", "null"]},
                "c": {"type": ["string", "null"]},
                "options": {"type": "object"},
            },
            "required": ["h", "g", "f", "c", "options"],
        },
        "fixed_points": {"type": "array", "items": {"$ref": "#/$defs/fixed_point"}},
        "h_fixed_points": {"type": "array", "items": {"$ref": "#/$defs/h_fixed_point"}},
        "verdicts": {
            "type": "object",
            "properties": {
                "index_sum": _nullable_complex,
                "index_sum_pass": {"type": ["boolean", "null"]},
                "conjecture": {
                    "type": "object",
                    "properties": {
                        "applies": {"type": "boolean"},
                        "pass": {"type": "boolean"},
                        "hypothesis": {"enum": ["met", "not met"]},
                        "witnesses": {"type": "array", "items": {"type": "string"}},
                        "witnesses_le1": {"type": "array", "items": {"type": "string"}},
                    },
                    "required": ["applies", "pass", "hypothesis", "witnesses"],
                },
            },
            "required": ["index_sum", "index_sum_pass"],
        },
        "diagnostics": {
            "type": "object",
            "properties": {
                "tolerances": {"type": "object"},
                "iterations": {"type": "integer"},
                "warnings": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["tolerances", "iterations", "warnings"],
        },
    },
    "required": ["schema_version", "input", "fixed_points", "h_fixed_points", "verdicts", "diagnostics"],
}

_batch = {
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"const": "batch"},
        "input": {"type": "object"},
        "results": {
            "type": "array",
            "items": {
                "oneOf": [
                    {"$ref": "#/$defs/analysis"},
                    {
                        "type": "object",
                        "properties": {"f": {"type": "string"}, "error": {"type": "string"}},
                        "required": ["f", "error"],
                    },
                ]
            },
        },
        "summary": {"type": "object"},
        "diagnostics": {"type": "object"},
    },
    "required": ["schema_version", "command", "results", "summary"],
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {
        "complex": _complex,
        "point": _point,
        "fixed_point": _fixed_point,
        "h_fixed_point": _h_fixed_point,
        "analysis": _analysis,
    },
    "oneOf": [{"$ref": "#/$defs/analysis"}, _batch],
}
