from fractions import Fraction


import _hyperflex as hx

B_REF = [0, 0, 0, -1, 1, 1]


def test_discriminant_reference():
    d = hx.discriminant(B_REF)
    assert d == 1815566443 == 2347 * 773569
    assert hx.discriminant([0, 0, 0, 0, 0, 0]) == 0


def test_scaling_weight():
    lam = 3
    scaled = [p * lam**w for p, w in zip(B_REF, (2, 5, 6, 8, 9, 12))]
    assert hx.discriminant(scaled) == lam**72 * hx.discriminant(B_REF)


def test_smoothness_and_counts():
    assert hx.is_smooth(B_REF)
    assert hx.is_smooth(B_REF, p=2)
    assert hx.point_count(B_REF, 2) == 1
    assert hx.point_count(B_REF, 3) == 4
    assert not hx.is_smooth([0, 0, 0, 0, 0, 0])


def test_enumeration_matches_box():
    assert hx.box_count(10**4) == 14175 == hx.enumerate_count(10**4)
    assert hx.enumerate_count(10**4, minimal=True) < 14175


def test_bitangent_resultant():
    r = hx.bitangent_resultant(B_REF)
    assert r["degree"] == 27
    assert r["coefficients"][0] == 4096
    assert r["coefficients"][27] == 1
    assert r["monic"][0] == Fraction(4096)
    cusp = hx.bitangent_resultant([0, 0, 0, 0, 0, 0])
    assert cusp["degree"] == 27
    assert cusp["coefficients"] == [0] * 27 + [1]


def test_formal_log_leading_terms():
    l1, l2, l3 = hx.formal_log(B_REF, p=2, order=13)
    assert l1[1] == 1 and l1[9] == Fraction(-1, 3)
    assert l2[2] == Fraction(1, 2)
    assert l3[5] == Fraction(1, 5)
    assert all(c == 0 for c in l3[:5])


def test_disk_image_and_torsion():
    assert hx.rho_log_image(B_REF) == [(1, 0, 0), (1, 1, 0)]
    assert hx.torsion_disk_check(B_REF)
    assert hx.sieve_lower_bound("1/4", 2) == Fraction(1, 4)


def test_chabauty_combine():
    c = hx.chabauty_combine("3", "6/7", 22)
    assert c["delta_low"] == Fraction(5, 7)
    assert c["majority_low"] == Fraction(4, 7)
    assert c["point_cap"] == 26
