"""Exact coefficient rings: Laurent polynomials and cyclotomic fields."""

import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dilutetl.ring import (CycloElem, GENERIC, LaurentPoly, beta,
                           cyclotomic_poly, ell_of, qnum, root_of_unity)

settings.register_profile("fixed", derandomize=True, max_examples=60)
settings.load_profile("fixed")

laurent = st.dictionaries(
    st.integers(-5, 5),
    st.fractions(min_value=-9, max_value=9, max_denominator=4),
    max_size=5).map(LaurentPoly)


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a


@given(laurent, laurent)
def test_laurent_specialization_oracle(a, b):
    v = Fraction(3, 2)
    assert (a * b).subs_fraction(v) == a.subs_fraction(v) * b.subs_fraction(v)
    assert (a + b).subs_fraction(v) == a.subs_fraction(v) + b.subs_fraction(v)


@given(laurent, laurent)
def test_laurent_exact_div_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


def test_laurent_nonexact_div_raises():
    with pytest.raises(ValueError):
        (LaurentPoly.q() + 1).exact_div(LaurentPoly.q() - 1)


@given(laurent)
def test_laurent_parse_roundtrip(a):
    assert LaurentPoly.parse(str(a)) == a


@pytest.mark.parametrize("m", list(range(1, 31)))
def test_cyclotomic_poly_vs_sympy(m):
    x = sympy.symbols("x")
    want = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert cyclotomic_poly(m) == [Fraction(v) for v in want]


def _complex_eval(elem):
    """Numerical value of a cyclotomic element at exp(2*pi*i/m)."""
    w = cmath.exp(2j * cmath.pi / elem.m)
    return sum(float(v) * w ** e for e, v in enumerate(elem.rep))


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8, 10, 12])
def test_qnum_complex_oracle(m):
    mode = root_of_unity(m)
    w = cmath.exp(2j * cmath.pi / m)
    for j in range(0, 9):
        want = sum(w ** e for e in range(j - 1, -j, -2))
        assert abs(_complex_eval(qnum(j, mode)) - want) < 1e-9


@pytest.mark.parametrize("m", [3, 4, 5, 6, 8, 12])
def test_cyclo_field(m):
    q = CycloElem.q(m)
    assert q ** m == CycloElem.one(m)
    for d in range(1, m):
        assert q ** d != CycloElem.one(m), "root must be primitive"
    a = q + CycloElem.const(m, Fraction(2, 3))
    assert a * a.inv() == CycloElem.one(m)
    assert (a / a) == CycloElem.one(m)


@pytest.mark.parametrize("m,ell", [(3, 3), (4, 2), (5, 5), (6, 3), (8, 4),
                                   (10, 5), (12, 6)])
def test_ell_of(m, ell):
    assert ell_of(m) == ell
    mode = root_of_unity(m)
    # the ell-th q-number vanishes exactly at these roots
    assert qnum(ell, mode).is_zero()
    for j in range(1, ell):
        assert not qnum(j, mode).is_zero()


def test_beta_generic():
    assert beta() == LaurentPoly({1: 1, -1: 1})
    assert beta(root_of_unity(4)).is_zero()  # q = i gives loop weight zero


def test_small_m_rejected():
    with pytest.raises(ValueError):
        ell_of(2)
    with pytest.raises(AssertionError):
        CycloElem.one(2)
