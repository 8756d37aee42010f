"""Smoke tests for the python bindings: golden-section cases with known
digit streams, exact arithmetic through the Real class, and error mapping."""

import pytest

import ostrowski

PHI = "quad:(-1+1*sqrt(5))/2"
SQRT2M1 = "quad:(-1+1*sqrt(2))/1"


def test_real_arithmetic_is_exact():
    phi = ostrowski.Real(PHI)
    assert phi * phi + phi == ostrowski.Real(1)
    assert phi.floor() == 0
    assert phi.ceil() == 1
    assert (-phi).floor() == -1
    assert phi.decimal(10) == "0.6180339887"
    assert phi.p == -1 and phi.q == 1 and phi.d == 5 and phi.r == 2


def test_real_big_integers_cross_the_boundary():
    big = 10**40 + 7
    x = ostrowski.Real.rational(big, 3)
    assert x.floor() == (10**40 + 7) // 3
    assert ostrowski.Real(big) == ostrowski.Real(str(f"rat:{big}/1"))


def test_cf_expand_golden():
    out = ostrowski.cf_expand(PHI, max_digits=10)
    assert out["digits"] == ["1"] * 10
    assert out["limit"] == "inf"
    assert out["period"]["digits"] == ["1"]


def test_cf_expand_rational_terminates():
    out = ostrowski.cf_expand("rat:355/113", max_digits=16)
    assert out["a0"] == "3"
    assert out["limit"] == "2"
    assert out["digits"] == ["7", "16"]


def test_abs_expand_golden_half():
    out = ostrowski.abs_expand(PHI, "rat:1/2", max_digits=16)
    assert out["digits"][:5] == ["0", "1", "0", "0", "1"]
    assert out["terminated"] is False


def test_abs_self_expansion_terminates():
    out = ostrowski.abs_expand(PHI, ostrowski.Real(PHI), max_digits=8)
    assert out["digits"] == ["1"]
    assert out["terminated"] is True
    assert out["residual_bound"] == "0"


def test_evaluate_round_trip():
    out = ostrowski.abs_expand(SQRT2M1, "rat:2/7", max_digits=24)
    ev = ostrowski.abs_evaluate(
        SQRT2M1, [int(d) for d in out["digits"]], depth=24, prefix=True
    )
    lo = float(ev["partial_lower"])
    hi = float(ev["partial_upper"])
    tail = float(ev["tail_bound"])
    assert lo <= 2 / 7 <= hi + tail


def test_alt_expand_all_ones():
    gamma = ostrowski.Real(PHI) * ostrowski.Real(PHI)  # 1 - phi
    out = ostrowski.alt_expand(PHI, gamma, max_digits=40)
    assert out["digits"] == ["1"] * 40


def test_validators():
    assert ostrowski.abs_validate(PHI, [1, 1])["verdict"] == "inadmissible"
    assert ostrowski.abs_validate(PHI, [1])["verdict"] == "admissible"
    assert (
        ostrowski.alt_validate(PHI, [], period=[1])["verdict"] == "admissible"
    )
    assert (
        ostrowski.alt_validate(PHI, [], period=[1], strictness="definition")[
            "verdict"
        ]
        == "inadmissible"
    )


def test_identities_interval_mode():
    out = ostrowski.check_identities("cf:[;2,1]", depth=40)
    assert out["mode"] == "interval"
    assert out["all_pass"] is True
    assert len(out["identities"]) == 5


def test_certify_uniqueness():
    report = ostrowski.certify_uniqueness(PHI, variant="absolute", depth=6)
    assert report["pass"] is True
    assert report["duplicates"] == []


def test_line_expand():
    out = ostrowski.alt_expand_line(PHI, "rat:3/1", max_digits=8)
    assert out["c0"] == "-3"
    assert out["terminated"] is True


def test_errors_raise():
    with pytest.raises(ValueError):
        ostrowski.abs_expand(PHI, "rat:0/1")
    with pytest.raises(ValueError):
        ostrowski.theta("rat:1/2")
    with pytest.raises(ValueError):
        ostrowski.Real("rat:1/0")


def test_parity():
    assert ostrowski.parity(0) == 0
    assert ostrowski.parity(7) == 1
    assert ostrowski.parity(12) == 0
