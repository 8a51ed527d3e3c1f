import copy

import pytest

import hclab


def test_dyadic_arithmetic():
    a = hclab.Dyadic("1/2")
    assert str(a + hclab.Dyadic("1/4")) == "3/2^2"
    assert a.numerator == 1 and a.exponent == 1
    assert float(hclab.Dyadic("-3/8") * hclab.Dyadic(2)) == -0.75
    assert hclab.lt_pow2(hclab.Dyadic("1/4"), 1)
    with pytest.raises(hclab.ParseError):
        hclab.Dyadic("0.5")


def test_operators():
    two_b = hclab.Operator('{"scale":[2,"B"]}')
    e3 = hclab.SparseVector.basis(3)
    assert str(hclab.apply_power(two_b, 2, e3)) == "{1:4}"
    assert hclab.kernel_index(two_b, e3, 10) == 3
    assert hclab.kernel_index(hclab.identity(), e3, 10) is None
    assert str(hclab.operator_norm_bound(hclab.build_T())) == "2"
    assert str(hclab.build_S()(hclab.SparseVector("{2:1}"))) == "{1:1/2^1, 2:1}"


def test_constructions():
    report = hclab.check_quasiconjugacy(hclab.build_T(), hclab.build_S(), 500)
    assert report["passed"] and report["checked"] == 500
    bad = hclab.check_invariance(hclab.Operator('{"scale":[2,"B"]}'), {"parity": "odd", "norm": "sup"},
                                 [hclab.SparseVector.basis(3)])
    assert not bad["passed"]


def test_enumeration_and_orbit():
    xs = hclab.enumerate_prefix('{"parity":"odd","norm":"sup"}', 5)
    assert str(xs[0]) == "{1:-2}" and xs[4].is_zero()
    report = hclab.orbit(hclab.Operator('{"scale":[2,"B"]}'), hclab.SparseVector.basis(2), 3)
    assert [p["norm"] for p in report["points"]] == [1, 2, 0, 0]


def test_certificate_round_trip():
    assert "example-linf" in hclab.scenario_names()
    assert hclab.check_conditions("example-linf")["iv_left_inverse"]["passed"]
    cert = hclab.build_certificate("example-linf", 12)
    assert [p["m"] for p in cert["payload"]["selection"]][:3] == [4, 8, 16]
    assert hclab.verify_certificate(cert)["passed"]
    tampered = copy.deepcopy(cert)
    tampered["payload"]["checks"][2]["exact_error"] = 0
    assert not hclab.verify_certificate(tampered)["passed"]
