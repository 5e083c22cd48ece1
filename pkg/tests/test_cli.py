import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from tiltwall import NumClass, line_bundle, twist, wall_curve
from tiltwall.cli import run
from tiltwall.serialize import numclass_from_json, numclass_to_json

IDEAL_LINE = '{"r":"1","c":"0","d2":"-1","d3":"1"}'


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = cli(*argv)
    assert code == 0, err
    return json.loads(out)


def test_charge_zst_degenerate():
    assert ok("charge", "--kind", "zst", "--line-bundle", "1", "--s", "1/6", "--t", "1/2") == {"re": "0", "im": "0"}


def test_region_p3():
    assert ok("region", "p3", "--s", "3/4", "--t", "1/4") == {"holds": True}
    assert ok("region", "p3-lemma", "--s", "1/5", "--t", "1/4") == {"holds": False}
    assert ok("region", "quadric", "--alpha", "1/4") == {"holds": True}
    assert ok("region", "p3-intro", "--t-squared", "3") == {"holds": False}


def test_slope_nu_infinite():
    assert ok("slope", "--kind", "nu", "--class", '{"r":"0","c":"0","d2":"1","d3":"0"}', "--alpha", "1", "--beta", "0") == {"infinite": True}
    assert ok("slope", "--kind", "mu", "--line-bundle", "2", "--alpha", "1") == {"finite": "2"}
    assert ok("slope", "--kind", "minch1", "--alpha", "2", "--beta", "1/3", "--model", "quadric") == {"value": "8/3"}


def test_charges_and_polycharges():
    assert ok("charge", "--kind", "z", "--line-bundle", "1", "--alpha", "1") == {"re": "1/3", "im": "1/3"}
    assert ok("charge", "--kind", "zbar", "--line-bundle", "1", "--alpha", "1") == {"re": "1/2", "im": "1/3"}
    got = ok("charge", "--kind", "zinf", "--line-bundle", "0", "--alpha", "1")
    assert got["coeffs"][3] == {"re": "0", "im": "-1/6"}


def test_negative_rational_values():
    assert ok("charge", "--kind", "z", "--line-bundle", "-1/2", "--alpha", "1", "--beta", "-3/4") == {"re": "47/384", "im": "-13/96"}


def test_poly_compare():
    got = ok("poly-compare", "--line-bundle", "1", "--shift", "1", "--line-bundle2", "0", "--shift2", "1", "--alpha", "1")
    assert got == {"ordering": "Greater"}
    zero = {"re": "0", "im": "0"}
    p = json.dumps({"coeffs": [{"re": "1", "im": "0"}, zero, zero, zero]})
    q = json.dumps({"coeffs": [{"re": "-1", "im": "0"}, zero, zero, zero]})
    code, _, err = cli("poly-compare", "--p", p, "--q", q)
    assert code == 2 and json.loads(err)["error"] == "phase-gap-violation"


def test_checks():
    assert ok("check", "--kind", "bg:0,0", "--class", '{"r":"2","c":"1","d2":"1","d3":"0"}', "--alpha", "1") == {"holds": False, "margin": "-3"}
    assert ok("check", "--kind", "strong", "--line-bundle", "1", "--t-squared", "3") == {"holds": True, "margin": "0"}
    assert ok("check", "--kind", "con14", "--line-bundle", "1", "--t-squared", "3") == {"holds": True, "margin": "4/3"}
    assert ok("check", "--kind", "identity74", "--line-bundle", "1", "--t-squared", "3") == {"holds": True}
    assert ok("check", "--kind", "smin", "--alpha", "2") == {"value": "4/3"}
    assert ok("check", "--kind", "lattice", "--class", '{"r":"1","c":"1","d2":"1/3","d3":"0"}') == {"holds": False}
    d = ok("check", "--kind", "discriminants", "--class", '{"r":"2","c":"1","d2":"0","d3":"0"}', "--alpha", "1")
    assert d == {"delta": "1", "delta_bar": "1", "d1": "1", "d2h": "1", "d3h": "2"}


@pytest.mark.parametrize("argv, code, err", [
    (["charge", "--kind", "z", "--line-bundle", "1", "--alpha", "0.5"], 3, "parse-error"),
    (["charge", "--kind", "z", "--line-bundle", "1", "--alpha", "2/4"], 3, "parse-error"),
    (["charge", "--kind", "z", "--line-bundle", "1", "--alpha", "-1"], 2, "invalid-ample-class"),
    (["charge", "--kind", "z", "--line-bundle", "1", "--t-squared", "3"], 2, "irrational-alpha"),
    (["charge", "--kind", "zst", "--line-bundle", "1", "--s", "0", "--t", "1", "--model", "quadric"], 2, "unsupported-model"),
    (["check", "--kind", "strong", "--line-bundle", "1", "--alpha", "1"], 2, "nu-not-zero"),
    (["check", "--kind", "bg:-2,5", "--line-bundle", "1", "--alpha", "1"], 2, "invalid-ab-parameters"),
    (["check", "--kind", "bogus", "--line-bundle", "1", "--alpha", "1"], 3, "parse-error"),
    (["slope", "--kind", "nu", "--class", "{bad", "--alpha", "1"], 3, "parse-error"),
    (["walls", "enumerate", "--class", '{"r":"0","c":"0","d2":"1","d3":"0"}',
      "--beta-lo", "0", "--beta-hi", "1", "--t-lo", "1", "--t-hi", "2"], 2, "ch1-sign-change"),
    (["walls", "intersect", "--line-bundle", "1", "--line-bundle2", "0",
      "--beta-lo", "1", "--beta-hi", "0", "--t-lo", "1", "--t-hi", "2"], 2, "empty-window"),
    (["scenario", "divisor", "--r", "1", "--m", "1", "--s", "1", "--alpha", "1"], 2, "hypothesis-violated"),
    (["scenario", "curve", "--D", "4", "--d", "2", "--g", "0"], 2, "scenario-invariant"),
    (["scenario", "divisor", "--scenario", '{"r":"1","m":"x","s":"0"}', "--alpha", "1"], 3, "parse-error"),
    (["region", "p3", "--s", "1"], 3, "parse-error"),
    (["nonsense"], 3, "parse-error"),
    (["charge", "--kind", "z", "--line-bundle", "1", "--alpha", "1", "--model", "nowhere"], 3, "parse-error"),
])
def test_exit_codes(argv, code, err):
    got, out, stderr = cli(*argv)
    assert got == code and out == ""
    assert json.loads(stderr)["error"] == err


def test_walls_curve_and_intersect():
    assert ok("walls", "curve", "--line-bundle", "1", "--line-bundle2", "0") == {
        "u0": "1/6", "u1": "0", "q0": "0", "q1": "-1/2", "q2": "1/2"}
    got = ok("walls", "intersect", "--line-bundle", "1", "--line-bundle2", "0",
             "--beta-lo", "0", "--beta-hi", "1", "--t-lo", "1/2", "--t-hi", "1")
    assert got["holds"] and F(got["witness"]["t"]) == 3 * F(got["witness"]["beta"]) * (1 - F(got["witness"]["beta"]))


def test_walls_enumerate_roundtrip():
    got = ok("walls", "enumerate", "--class", IDEAL_LINE, "--beta-lo", "-2", "--beta-hi", "-1/2",
             "--t-lo", "1/100", "--t-hi", "3", "--max-rank", "3", "--threads", "2")
    assert got["metadata"]["max_rank"] == 3 and got["metadata"]["window"]["beta_hi"] == "-1/2"
    vE = numclass_from_json(IDEAL_LINE)
    keys = []
    for wall in got["walls"]:
        w = numclass_from_json(dict(wall["w"], d3="0"))
        conic = wall_curve(vE, w)
        assert {k: str(getattr(conic, k)) for k in ("u0", "u1", "q0", "q1", "q2")} == wall["conic"]
        keys.append(wall["w"])
    assert {"r": "-1", "c": "2", "d2": "-2"} in keys


def test_walls_enumerate_line_bundle_fixture_is_empty():
    got = ok("walls", "enumerate", "--line-bundle", "1", "--beta-lo", "0", "--beta-hi", "9/10",
             "--t-lo", "1/100", "--t-hi", "2", "--max-rank", "1")
    assert got["walls"] == []


@pytest.mark.parametrize("precision", [3, 8, 12])
def test_walls_sample_csv(precision):
    code, out, err = cli("walls", "sample", "--class", IDEAL_LINE, "--class2", '{"r":"1","c":"-1","d2":"1/2","d3":"-1/6"}',
                         "--beta-lo", "-2", "--beta-hi", "-1", "--samples", "21", "--csv", "--precision", str(precision))
    assert code == 0, err
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["beta", "t"] and len(rows) > 5
    wc = wall_curve(numclass_from_json(IDEAL_LINE), line_bundle(-1))
    tol = F(1, 10**precision)
    for b, t in rows[1:]:
        b, t = F(b), F(t)
        # wall points: t = 3/4 - 3 (beta + 3/2)^2, rounded to the printed precision
        exact_t = -(wc.q0 + wc.q1 * b + wc.q2 * b * b) / wc.u0
        assert abs(t - exact_t) <= tol * 20


def test_walls_sample_json_exact():
    pts = ok("walls", "sample", "--line-bundle", "1", "--line-bundle2", "0", "--beta-lo", "0", "--beta-hi", "1", "--samples", "5")
    assert [(p["beta"], p["t"]) for p in pts] == [("1/4", "9/16"), ("1/2", "3/4"), ("3/4", "9/16")]


def test_scenarios():
    got = ok("scenario", "divisor", "--r", "1", "--m", "2", "--s", "1/3", "--alpha", "1")
    assert (got["active_case"], got["margin"], got["holds"]) == ("Bog2", "4/9", True)
    got = ok("scenario", "divisor", "--scenario", '{"r":"1","m":2,"s":"1","t_squared":"3"}')
    assert (got["active_case"], got["margin"]) == ("Bog1", "0")
    got = ok("scenario", "curve", "--D", "5", "--d", "2", "--g", "0")
    assert got["class"] == numclass_to_json(NumClass(1, 1, F(1, 10), F(-19, 30)))
    assert got["ch3_curve"] == "2" and got["t_scale_sq"] == "3/5"
    rows = ok("scenario", "castelnuovo", "--D-lo", "4", "--D-hi", "12", "--threads", "3")
    assert all(r["holds"] for r in rows) and len(rows) == sum((D - 1) // 2 for D in range(4, 13))


def test_model_path(monkeypatch, tmp_path):
    (tmp_path / "cubic.json").write_text(json.dumps({"name": "cubic", "d": 3, "lam2": 2, "lam3": 6}))
    monkeypatch.setenv("TILTWALL_MODEL_PATH", str(tmp_path))
    assert ok("check", "--kind", "smin", "--alpha", "1", "--model", "cubic") == {"value": "1/2"}
    assert ok("check", "--kind", "smin", "--alpha", "1", "--model", "custom:3,2,6") == {"value": "1/2"}
    assert ok("check", "--kind", "smin", "--alpha", "1", "--model", "hypersurface:3") == {"value": "1/2"}


def test_class_json_roundtrip_through_cli():
    v = twist(NumClass(2, -1, F(3, 2), F(-1, 6)), F(2, 3))
    raw = json.dumps(numclass_to_json(v))
    got = ok("charge", "--kind", "z", "--class", raw, "--alpha", "3/2", "--beta", "1/5")
    from tiltwall import P3, z
    want = z(v, F(3, 2), F(1, 5), P3)
    assert (F(got["re"]), F(got["im"])) == (want.re, want.im)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tiltwall", "region", "p3", "--s", "3/4", "--t", "1/4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"holds": True}
