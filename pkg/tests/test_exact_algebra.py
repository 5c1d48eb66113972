import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recurseq.errors import DomainError
from recurseq.exact_algebra import (
    IntPoly,
    cyclotomic,
    p_adic_valuation,
    poly_gcd,
    poly_product,
    resultant,
    resultant_y,
    reverse_poly,
    squarefree_part,
)

from oracles import schoolbook, sylvester_resultant

P = IntPoly
small = st.integers(-9, 9)


def polys(max_deg=5, nonzero=True):
    s = st.lists(small, min_size=1, max_size=max_deg + 1).map(IntPoly)
    return s.filter(bool) if nonzero else s


def test_canonical_form():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).degree == -1
    assert not P()
    assert P([-0]) == P()


def test_product_examples():
    assert poly_product(P([1, 1]), P([1, -1])) == P([1, 0, -1])
    p = P([3, 0, -2, 5])
    assert p * P([1]) == p
    assert poly_product(P([1, -1, -1]), P([1, 1])) == P(schoolbook([1, -1, -1], [1, 1]))
    assert poly_product(P([1, -1, -1]), P([1, 1])) == P([1, 0, -2, -1])


@given(polys(6, nonzero=False), polys(6, nonzero=False))
def test_product_matches_schoolbook(p, q):
    assert poly_product(p, q) == P(schoolbook(list(p.coeffs), list(q.coeffs)))
    if p and q:
        assert (p * q).degree == p.degree + q.degree


def test_gcd_examples():
    assert poly_gcd(P([-1, 0, 1]), P([-1, 1])) == P([-1, 1])
    assert poly_gcd(P([6, 4, -2]), P()) == P([-3, -2, 1])
    assert poly_gcd(P([2, 2]), P([-4, 0, 4])) == P([1, 1])
    with pytest.raises(DomainError):
        poly_gcd(P(), P())


@given(polys(4), polys(4), polys(3))
@settings(max_examples=150)
def test_gcd_divides_both(p, q, common):
    a, b = p * common, q * common
    d = poly_gcd(a, b)
    assert d.content() == 1 and d.lc > 0
    # exact division after clearing contents
    a.primitive().exquo(d)
    b.primitive().exquo(d)
    assert d.degree >= common.degree


def test_resultant_examples():
    assert resultant(P([-2, 1]), P([-1, 0, 1])) == 3
    assert resultant(P([1, 2, 3]), P([5])) == 25
    assert resultant(P([-1, 0, 1]), P([-4, 0, 1])) == 9
    with pytest.raises(DomainError):
        resultant(P(), P([1]))


@given(polys(5), polys(5))
@settings(max_examples=200)
def test_resultant_matches_sylvester_and_antisymmetry(p, q):
    r = resultant(p, q)
    assert r == sylvester_resultant(list(p.coeffs), list(q.coeffs))
    assert r == (-1) ** (p.degree * q.degree) * resultant(q, p)


@given(polys(5), polys(5))
@settings(max_examples=200)
def test_resultant_zero_iff_common_factor(p, q):
    assert (resultant(p, q) == 0) == (poly_gcd(p, q).degree > 0)


def test_resultant_over_zx_matches_pointwise():
    # Res_y(y^2 - 3y + 2, x - y^3) evaluated at x = 0..4 against integer resultants
    g = [P([2]), P([-3]), P([1])]
    b = [P([0, 1]), P(), P(), P([-1])]
    h = resultant_y(g, b)
    for x0 in range(5):
        assert h(x0) == resultant(P([2, -3, 1]), P([x0, 0, 0, -1]))


def test_reverse():
    assert reverse_poly(P([1, -1, -1]), 2) == P([-1, -1, 1])
    assert reverse_poly(P([1]), 0) == P([1])
    assert reverse_poly(P([1, 2]), 3) == P([0, 0, 2, 1])
    with pytest.raises(DomainError):
        reverse_poly(P([1, 2, 3]), 1)


@given(polys(5).filter(lambda p: p[0] != 0))
def test_reverse_involution(p):
    assert reverse_poly(reverse_poly(p, p.degree), p.degree) == p


def test_cyclotomic_examples():
    assert cyclotomic(1) == P([-1, 1])
    assert cyclotomic(4) == P([1, 0, 1])
    assert cyclotomic(6) == P([1, -1, 1])
    with pytest.raises(DomainError):
        cyclotomic(0)


@pytest.mark.parametrize("n", range(1, 41))
def test_cyclotomic_product_identity(n):
    prod = P([1])
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic(d)
    assert prod == P([-1] + [0] * (n - 1) + [1])


def test_valuation():
    assert p_adic_valuation(2, 16) == 4
    assert p_adic_valuation(3, 18) == 2
    assert p_adic_valuation(5, 7) == 0
    assert p_adic_valuation(2, -12) == 2
    with pytest.raises(DomainError):
        p_adic_valuation(2, 0)


@given(polys(3), st.integers(1, 3))
def test_squarefree_part(p, e):
    if p.degree < 1:
        return
    s = squarefree_part(p**e)
    assert poly_gcd(s, s.derivative()).degree == 0
    assert s.degree <= p.degree


def test_str_and_eval():
    p = P([-1, -1, 1])
    assert str(p) == "x^2 - x - 1"
    assert p(3) == 5
    assert str(P()) == "0"
