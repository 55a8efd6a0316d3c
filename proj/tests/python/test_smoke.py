import json
import math

import pytest

import altwidth as aw


def test_parse_arithmetic_roundtrip():
    g = aw.Permutation.parse("(1 2 3)(4 5)")
    assert str(g) == "(1 2 3)(4 5)"
    assert g.word_length() == 3
    assert g.parity() == "odd"
    assert g(1) == 2 and g(3) == 1 and g(6) == 6
    assert (g * g.inverse()).is_identity()
    assert str(g.conjugate_by(aw.Permutation.parse("(3 7)"))) == "(1 2 7)(4 5)"
    assert str(g.cycle_type()) == "3+2"
    assert aw.iota(2) == aw.Permutation.parse("(1 2)(3 4)")
    assert aw.iota(2).word_length() == 2


def test_certificate_pipeline():
    g = aw.Permutation.parse("(1 2)(3 4)")
    h = aw.Permutation.parse("(1 2 3)")
    cert = aw.decompose(g, h)
    report = aw.verify_certificate(cert)
    assert report.passed and report.within_bound
    assert report.factor_count == len(cert.factors) <= 8  # 4*2/2 + 4
    assert all(f.cycle_type() == h.cycle_type() for f in cert.factors)

    # JSON round-trip through the documented wire format.
    blob = json.loads(cert.to_json())
    assert blob["convention"] == "right-factor-first"
    again = aw.Certificate.from_json(cert.to_json())
    assert aw.verify_certificate(again).passed

    with pytest.raises(aw.ParityObstructionError):
        aw.decompose(aw.Permutation.parse("(1 2)"), h)


def test_oracle_and_metrics():
    g = aw.Permutation.parse("(1 2)(3 4)")
    h = aw.Permutation.parse("(1 2 3)")
    res = aw.exact_lambda(g, h)
    assert res.value == 2 and res.stabilized
    prod = aw.Permutation()
    for w in res.witness:
        prod = prod * w
    assert prod == g

    blocked = aw.exact_lambda(aw.Permutation.parse("(1 2)"), h)
    assert blocked.value is None and blocked.reason == "parity"

    assert aw.class_size(aw.CycleType.from_string("2"), 3) == 3
    assert len(aw.class_members(aw.CycleType.from_string("3"), 3)) == 2

    t3 = aw.CycleType.from_string("3")
    t22 = aw.CycleType.from_string("2+2")
    assert aw.psi(t3) == pytest.approx(math.log(2))
    bounds = aw.d_bounds(t3, t22)
    exact = aw.exact_d(
        aw.canonical_representative(t3), aw.canonical_representative(t22), 8
    )
    assert bounds["d_lower"] - 1e-9 <= exact <= bounds["d_upper"] + 1e-9
    assert bounds["d_upper"] - abs(aw.psi(t3) - aw.psi(t22)) <= math.log(8) + 1e-9
