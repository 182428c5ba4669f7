import json
from fractions import Fraction

import pytest

from realdelpezzo.corpus import named_curves, three_parabolas
from realdelpezzo.exact import AlgebraicNumber, UniPoly, isolate_real_roots
from realdelpezzo.jsonio import (
    SCHEMA_VERSION,
    InputError,
    algebraic_to_json,
    config_from_json,
    curve_from_json,
    curve_to_json,
    dumps,
    load_curve,
    parse_config_label,
    save_curve,
    script_from_json,
    stamp,
)
from realdelpezzo.topology import SmoothingChoice


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    assert stamp({"x": 1}, "thing") == {"schema_version": SCHEMA_VERSION, "document": "thing", "x": 1}


class TestAlgebraic:
    def test_rational_and_infinity(self):
        assert algebraic_to_json(None) == "infinity"
        assert algebraic_to_json(AlgebraicNumber.rational(-3)) == "-3"

    def test_irrational_text_is_stable(self):
        (r,) = [a for a in isolate_real_roots(UniPoly([-2, 0, 1])) if a > 0]
        first = algebraic_to_json(r)
        r.refine(Fraction(1, 10 ** 30))
        assert algebraic_to_json(r) == first
        assert first["approx"].startswith("1.41421356")
        lo, hi = (Fraction(s) for s in first["interval"])
        assert lo * lo < 2 < hi * hi


class TestCurves:
    @pytest.mark.parametrize("curve", named_curves(), ids=lambda c: c.name)
    def test_round_trip(self, curve):
        t, sign, name = curve_from_json(json.loads(dumps(curve_to_json(curve.trisection, curve.sign, curve.name))))
        assert (t, sign, name) == (curve.trisection, curve.sign, curve.name)

    def test_file_round_trip(self, tmp_path):
        p = tmp_path / "c.json"
        save_curve(p, three_parabolas(), -1, "fig")
        assert load_curve(p) == (three_parabolas(), -1, "fig")

    @pytest.mark.parametrize("doc", [
        [],
        {"schema_version": 2, "a": [], "b": [], "c": ["1"]},
        {"a": [], "b": [], "c": ["1"], "colour": "red"},
        {"a": [], "b": [], "c": ["1"], "sections": []},
        {"a": [], "b": [], "c": ["1"], "chart": "W"},
        {"a": [], "b": [], "c": ["1"], "cover_sign": 0},
        {"a": [], "b": [], "c": ["1"], "cover_sign": True},
        {"a": ["0.5"], "b": [], "c": ["1"]},
        {"a": [], "b": [], "c": ["1"], "name": 3},
    ])
    def test_rejects(self, doc):
        with pytest.raises(InputError):
            curve_from_json(doc)

    def test_unreadable_files(self, tmp_path):
        with pytest.raises(InputError):
            load_curve(tmp_path / "missing.json")
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(InputError):
            load_curve(bad)


class TestConfigsAndScripts:
    def test_labels(self):
        assert parse_config_label("A3+2A2+A1").mus == (3, 2, 2, 1)
        assert parse_config_label(" 4A1 ").mus == (1, 1, 1, 1)
        for bad in ("", "B3", "0A1", "A0", "2A"):
            with pytest.raises(InputError):
                parse_config_label(bad)

    def test_config_documents(self):
        c = config_from_json({"schema_version": 1, "configuration": [{"mu": 2}, {"mu": 1, "sign": "-"}]})
        assert c.label() == "A2++A1-"
        with pytest.raises(InputError):
            config_from_json({"configuration": "A1"})
        with pytest.raises(InputError):
            config_from_json([{"mu": 0}])

    def test_scripts(self):
        s = script_from_json({"script": [{"point_id": "p0", "choice": "Cut"}]})
        assert s == [("p0", SmoothingChoice.Cut)]
        with pytest.raises(InputError):
            script_from_json([{"point_id": "p0", "choice": "Melt"}])
        with pytest.raises(InputError):
            script_from_json([{"choice": "Cut"}])
