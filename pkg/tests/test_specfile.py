import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from hexfold.constructions import (
    classic_seven,
    construct_2nm,
    construct_density,
    construct_nm,
    fold7_thirtyseven,
)
from hexfold.geometry import Point
from hexfold.specfile import (
    SpecFileError,
    from_json_text,
    load_colouring,
    save_colouring,
    to_json_text,
)


def roundtrip_cases():
    return [
        classic_seven(),
        fold7_thirtyseven(),
        construct_nm(2.0, 3, 3),
        construct_2nm(1.0, 1, 2),
        construct_density(1.0, 9),
    ]


def test_roundtrip_byte_identical():
    for c in roundtrip_cases():
        text = to_json_text(c)
        c2 = from_json_text(text)
        assert to_json_text(c2) == text


def test_roundtrip_preserves_colours():
    import random

    rng = random.Random(0)
    for c in roundtrip_cases():
        c2 = from_json_text(to_json_text(c))
        assert (c2.j, c2.k) == (c.j, c.k)
        assert c2.interval.a == pytest.approx(c.interval.a)
        assert c2.interval.b == pytest.approx(c.interval.b)
        for _ in range(50):
            p = Point(rng.uniform(-3, 3), rng.uniform(-3, 3))
            assert c.colours_at(p) == c2.colours_at(p)


def test_save_and_load(tmp_path):
    path = tmp_path / "c.json"
    c = classic_seven()
    save_colouring(c, str(path))
    text = path.read_text()
    assert text.endswith("\n")
    c2 = load_colouring(str(path))
    assert c2.k == 7


@settings(max_examples=200, deadline=None)
@given(st.floats(allow_nan=False, allow_infinity=False, width=64))
def test_real_encoding_roundtrip(x):
    from hexfold.specfile import _parse_real, _real

    assert _parse_real(_real(x)) == x


def test_bad_version_rejected():
    doc = json.loads(to_json_text(classic_seven()))
    doc["version"] = 99
    with pytest.raises(SpecFileError):
        from_json_text(json.dumps(doc))


def test_colour_id_out_of_range_rejected():
    doc = json.loads(to_json_text(classic_seven()))
    entries = doc["layers"][0]["colour_map"]["entries"]
    key = next(iter(entries))
    entries[key] = [doc["k"] + 5]
    with pytest.raises(SpecFileError):
        from_json_text(json.dumps(doc))


def test_fold_mismatch_rejected():
    doc = json.loads(to_json_text(classic_seven()))
    doc["j"] = 3
    with pytest.raises(SpecFileError):
        from_json_text(json.dumps(doc))


def test_missing_key_rejected():
    doc = json.loads(to_json_text(classic_seven()))
    del doc["layers"]
    with pytest.raises(SpecFileError):
        from_json_text(json.dumps(doc))


def test_malformed_json_rejected():
    with pytest.raises(SpecFileError):
        from_json_text("{not json")


def test_incomplete_period_coverage_rejected():
    doc = json.loads(to_json_text(classic_seven()))
    entries = doc["layers"][0]["colour_map"]["entries"]
    key = next(iter(entries))
    del entries[key]
    with pytest.raises(SpecFileError):
        from_json_text(json.dumps(doc))
