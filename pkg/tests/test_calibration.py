import importlib.util
import math
from pathlib import Path

import pytest

from dimgrowth.calibration import constant, constants, record
from dimgrowth.corpus import affine_curve_corpus

EXPECTED = {
    "b_upper_C",
    "detval_slack_c",
    "inverse_height_C",
    "inverse_height_eps",
    "minor_gcd_c1",
    "curve_bound_C",
    "envelope_C",
    "affine_curve_C",
    "walkowiak_C",
}
SLACKS = {"minor_gcd_c1", "detval_slack_c"}


def _script():
    path = Path(__file__).resolve().parents[1] / "scripts" / "calibrate.py"
    spec = importlib.util.spec_from_file_location("calibrate_script", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_keys_and_margins():
    rec = record()
    assert set(constants()) == EXPECTED
    ratio, slack = rec["margins"]["ratio"], rec["margins"]["slack"]
    for k, raw in rec["raw"].items():
        frozen = constant(k)
        if k in SLACKS:
            assert frozen == round(raw + slack, 6)
        else:
            assert frozen == math.ceil(raw * ratio * 1e6) / 1e6
        assert frozen >= raw
    with pytest.raises(KeyError):
        constant("nosuch")


def test_cheap_refit_reproduces_raw_values():
    cal = _script()
    affine = affine_curve_corpus()
    raw = record()["raw"]
    assert len(affine) == record()["corpora"]["affine_curves"]["size"]
    assert cal.fit_inverse_height(affine) == raw["inverse_height_C"]
    assert cal.fit_walkowiak(affine) == raw["walkowiak_C"]
    assert cal.fit_affine_curve(affine) == raw["affine_curve_C"]
    c, n = cal.fit_slack()
    assert c == raw["detval_slack_c"] and n == record()["corpora"]["lifts"]["size"]
