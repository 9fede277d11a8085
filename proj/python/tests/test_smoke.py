from fractions import Fraction
from math import comb

import pytest

import hkgrass as hk


def test_intersection_numbers():
    assert hk.intersection_numbers() == {"c1c3": 330, "c4": 105, "c1^2c2": 825, "c2^2": 477, "c1^4": 1452}
    assert hk.c2_of_Y() == {"c1^2": 5, "c2": -8, "pairing": 660}


def test_hilbert_polynomials_agree():
    want = {0: Fraction(3), 2: Fraction(55, 2), 4: Fraction(121, 2)}
    assert hk.hilb2_hilbert_polynomial() == want
    assert hk.riemann_roch_hilbert(hk.koszul_euler(0)) == want
    for t in range(-3, 4):
        assert hk.koszul_euler(t) == sum(c * t**e for e, c in want.items())


def test_bwb_numbers():
    assert hk.koszul_hodge_vector() == [1, 0, 1, 0, 1]
    g = hk.griffiths_hodge()
    assert (g["h_9_11"], g["h_10_10_van"], g["h0_O1"], g["h0_T"]) == (1, 20, 120, 99)
    r = hk.vanishing_sweep("F_tensor_wedge")
    assert r["complete"] and r["violations"] == 0
    with pytest.raises(ValueError):
        hk.vanishing_sweep("nope")


def test_degrees():
    assert hk.dual_variety_degree(3, 10) == 640
    assert hk.companion_class_number() == 2
    assert hk.k3_model_degree() == {"expected_dimension": 2, "degree": 22, "calabi_yau": True}


def test_plethysm_dimensions():
    for i in range(21):
        terms = hk.wedge_plethysm(i, 6)
        assert sum(c * hk.schur_dimension(list(p), 6) for p, c in terms) == comb(20, i)


def test_lattice_and_blowup():
    assert hk.bb_square(10, -33) == 22
    assert hk.polarization_type(10, -33) == {"d": 11, "divisibility": 2, "split": False}
    with pytest.raises(ValueError):
        hk.polarization_type(2, 4)
    assert hk.blowup_numbers() == {"L^4": 2904, "L^2 c2": 1320, "c2": "-3*e^2 + 24*o1 + 24*o2"}


def test_trilab():
    b = hk.configuration("B", 101, 7)
    assert b["line_in_Y"] and b["line_prime_in_Y"]
    assert len(b["points"]) == 1 and b["point_is_trace_sum"]
    assert hk.configuration("A", 0, 3)["points"] == []
    c = hk.companions(5, 1)
    assert c["count"] == 2 and c["spans_w6"]
    text = hk.singular_trivector(2, 4)
    scan = hk.scan_singular_points(text)
    assert scan["complete"] and scan["lines_scanned"] == 1023
    assert "<(1,0,0,0,0,0,0,0,0,0),(0,1,0,0,0,0,0,0,0,0),(0,0,1,0,0,0,0,0,0,0)>" in scan["points"]
    r = hk.random_trivector(0, 5)
    assert hk.normalize_trivector(r) == r
    with pytest.raises(ValueError):
        hk.normalize_trivector("Fp 4\n")
