import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtchars.cartan import cartan_data, gamma_table
from qtchars.errors import Mismatch, NotPointed
from qtchars.monomial import Monomial, a_monomial
from qtchars.torus import PointedElement, TorusElement, bar, ev_t1, gamma_pair, star_product

CD = cartan_data(("B", 2))
G = gamma_table(CD)

monomials = st.dictionaries(
    st.tuples(st.sampled_from(CD.labels), st.integers(0, 5)), st.integers(-2, 2), max_size=3
).map(Monomial)
coeffs = st.dictionaries(st.integers(-3, 3), st.integers(-2, 2), min_size=1, max_size=2)
elements = st.dictionaries(monomials, coeffs, max_size=3).map(lambda d: TorusElement(CD, d))


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_associative(x, y, z):
    assert star_product(G, star_product(G, x, y), z) == star_product(G, x, star_product(G, y, z))


@settings(max_examples=40, deadline=None)
@given(elements, elements)
def test_bar_is_anti_involution(x, y):
    assert bar(star_product(G, x, y)) == star_product(G, bar(y), bar(x))
    assert bar(bar(x)) == x


@settings(max_examples=40, deadline=None)
@given(elements, elements)
def test_ev_is_homomorphism(x, y):
    lhs = ev_t1(star_product(G, x, y))
    prod = {}
    for m1, c1 in ev_t1(x).terms.items():
        for m2, c2 in ev_t1(y).terms.items():
            prod[m1 * m2] = prod.get(m1 * m2, 0) + c1[0] * c2[0]
    assert lhs == TorusElement(CD, {m: {0: c} for m, c in prod.items()})


@settings(max_examples=40, deadline=None)
@given(monomials, monomials)
def test_skew_commutation(m1, m2):
    a = star_product(G, TorusElement.monomial(CD, m1), TorusElement.monomial(CD, m2))
    b = star_product(G, TorusElement.monomial(CD, m2), TorusElement.monomial(CD, m1))
    assert a == b.scale(1, 2 * gamma_pair(G, m1, m2))


def test_mismatch():
    other = TorusElement.one(cartan_data(("C", 2)))
    with pytest.raises(Mismatch):
        star_product(G, TorusElement.one(CD), other)
    with pytest.raises(Mismatch):
        gamma_pair(G, Monomial.y(3, 0), Monomial.y(1, 0))


def test_pointed_validation():
    top = Monomial.y(1, 0)
    low = top / a_monomial(CD, 1, 1)
    PointedElement(top, TorusElement(CD, {top: {0: 1}, low: {2: 5}}))
    with pytest.raises(NotPointed):
        PointedElement(top, TorusElement(CD, {top: {0: 1}, top * Monomial.y(2, 3): {0: 1}}))
    with pytest.raises(NotPointed):
        PointedElement(top, TorusElement(CD, {top: {2: 1}}))
