import json

import jsonschema
import pytest
from hypothesis import given, strategies as st

from hfix.cli import build_analyze, build_harmonic
from hfix.config import DEFAULT
from hfix.document import SCHEMA, decode_complex, dumps, encode_complex, loads
from hfix.poly import INF, is_inf

finite = st.complex_numbers(allow_nan=False, allow_infinity=False)


@given(finite)
def test_complex_round_trip_exact(z):
    back = decode_complex(json.loads(json.dumps(encode_complex(z))))
    assert back == z


def test_infinity_encoding():
    assert encode_complex(INF) == "inf"
    assert is_inf(decode_complex("inf"))


def test_dumps_rejects_nan():
    with pytest.raises(ValueError):
        dumps({"x": float("nan")})


def test_dumps_format():
    doc, _ = build_analyze("z^2", DEFAULT)
    text = dumps(doc)
    assert text.endswith("}\n") and loads(text) == doc


def test_schema_rejects_malformed():
    doc, _ = build_analyze("z^2", DEFAULT)
    v = jsonschema.Draft202012Validator(SCHEMA)
    v.validate(doc)
    bad = json.loads(dumps(doc))
    bad["fixed_points"][0]["class"] = "neutral"
    assert not v.is_valid(bad)
    bad = json.loads(dumps(doc))
    del bad["verdicts"]["index_sum"]
    assert not v.is_valid(bad)


def test_harmonic_symbolic_zeta():
    doc, _ = build_harmonic("z^2", "z^2", DEFAULT)
    jsonschema.validate(doc, SCHEMA)
    zetas = {h["kind"]: h["zeta"] for h in doc["h_fixed_points"]}
    assert zetas["infinite_mu_fixed"] == "mu+conj(inf)"
    assert zetas["infinite_omega_fixed"] == "inf+conj(omega)"
    assert zetas["infinite_both"] == "inf+conj(inf)"
