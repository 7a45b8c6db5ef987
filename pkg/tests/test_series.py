"""E/H series, coefficient extraction, and the HE inversion identity."""

import pytest

from qjt.ring import ONE, ZERO, AlgType, f_hom, letters, make_type
from qjt.series import E_series, H_series, check_HE, e_coeff, geom_inverse, h_coeff

A1 = make_type("A", 1)
A2 = make_type("A", 2)
B2 = make_type("B", 2)
C2 = make_type("C", 2)
C3 = make_type("C", 3)


def test_geom_inverse_coeffs():
    s = geom_inverse(A2, 1, 1, 3)
    assert s.coeffs[0] == ONE
    assert s.coeffs[1] == f_hom(A2, 1, 0)
    assert s.coeffs[2] == f_hom(A2, 1, 0) * f_hom(A2, 1, -2)
    # B has delta = 2, so the ladder steps by 4
    sb = geom_inverse(B2, 2, 1, 2)
    assert sb.coeffs[2] == f_hom(B2, 2, 0) * f_hom(B2, 2, -4)


def test_E_examples():
    assert E_series(A1, 2).coeffs[1] == f_hom(A1, 1, 0) + f_hom(A1, 2, 0)
    assert E_series(C2, 4).coeffs[3].is_zero()  # e_{n+1} = 0 for C_n
    assert E_series(A2, 5).coeffs[4].is_zero()  # e_i = 0 for i > n+1
    assert E_series(A2, 5).coeffs[5].is_zero()


def test_E_vanishing_C():
    # e_i = 0 for i > 2n+2 and i = n+1 for C_n
    E = E_series(C2, 8)
    assert E.coeffs[3].is_zero()
    for i in range(7, 9):
        assert E.coeffs[i].is_zero()
    E3 = E_series(C3, 9)
    assert E3.coeffs[4].is_zero()
    assert E3.coeffs[9].is_zero()


def test_H_first_coeffs():
    for t in (A2, B2, C2, make_type("D", 3)):
        H = H_series(t, 2)
        assert H.coeffs[0] == ONE
        want = ZERO
        for c in letters(t):
            want = want + f_hom(t, c, 0)
        assert H.coeffs[1] == want, t


def test_H2_C2_monomial_count():
    h2 = h_coeff(C2, 2, 0)
    assert h2.num_terms() == 11


def test_e2_C2_monomial_count():
    assert e_coeff(C2, 2, 0).num_terms() == 5


def test_coeff_conventions():
    for t in (A2, C2):
        assert h_coeff(t, -1, 0).is_zero()
        assert e_coeff(t, -2, 4).is_zero()
        assert h_coeff(t, 0, 5) == ONE
        assert h_coeff(t, 2, 3) == h_coeff(t, 2, 0).shift_spectral(3)


def test_h1_equals_e1():
    for t in (A2, B2, C2):
        assert (h_coeff(t, 1, 0) - e_coeff(t, 1, 0)).is_zero()


@pytest.mark.parametrize("fam", "ABCD")
@pytest.mark.parametrize("n", [1, 2, 3])
def test_check_HE(fam, n):
    if fam == "D" and n < 2:
        pytest.skip("D needs rank >= 2")
    assert check_HE(make_type(fam, n), 8)
