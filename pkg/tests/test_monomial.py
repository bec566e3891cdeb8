import pytest

from qtchars.cartan import cartan_data
from qtchars.errors import ParseError
from qtchars.monomial import ONE, Monomial, a_monomial, factor_generators, nakajima_leq, parse_monomial

Y = Monomial.y


def test_parse_roundtrip():
    m = parse_monomial(" Y[2,3]^-1 Y[1,0] ")
    assert m == Y(1, 0) * Y(2, 3, -1)
    assert m.to_text() == "Y[1,0]Y[2,3]^-1"
    assert parse_monomial(m.to_text()) == m
    assert parse_monomial("1") is ONE or parse_monomial("1") == ONE
    assert parse_monomial("Y[1,0]Y[1,0]") == Y(1, 0, 2)
    assert parse_monomial("Y[1,0]Y[1,0]^-1") == ONE


@pytest.mark.parametrize("bad", ["Y[1,0", "X[1,0]", "Y[1,0]*Y[2,0]", "Y[a,0]", "Y[1,0]Yo[1,2]"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_monomial(bad)


def test_orbit_prefix():
    assert parse_monomial("Yo[0,2]", "Yo") == Y(0, 2)
    with pytest.raises(ParseError):
        parse_monomial("Y[0,2]", "Yo")


def test_a_monomials():
    a = cartan_data(("A", 3))
    assert a_monomial(a, 2, 1) == Y(2, 0) * Y(2, 2) * Y(1, 1, -1) * Y(3, 1, -1)
    b = cartan_data(("B", 2))  # c_12 = -2, d = (1, 2)
    assert a_monomial(b, 2, 2) == Y(2, 0) * Y(2, 4) * Y(1, 1, -1) * Y(1, 3, -1)
    assert a_monomial(b, 1, 1) == Y(1, 0) * Y(1, 2) * Y(2, 1, -1)


def test_factorization_and_order():
    cd = cartan_data(("C", 3))
    v = a_monomial(cd, 1, 4) * a_monomial(cd, 2, 3) ** 2 * a_monomial(cd, 3, 7)
    assert factor_generators(cd, v) == {(1, 4): 1, (2, 3): 2, (3, 7): 1}
    m = Y(1, 0) * Y(3, 2)
    assert nakajima_leq(cd, m / v, m)
    assert not nakajima_leq(cd, m, m / v)
    assert not nakajima_leq(cd, m * Y(1, 9), m)
    assert factor_generators(cd, v, allowed={1, 2}) is None


def test_shift_and_dominance():
    m = Y(1, 0) * Y(2, 3, -1)
    assert m.shift(2) == Y(1, 2) * Y(2, 5, -1)
    assert not m.is_dominant() and m.is_i_dominant(1) and not m.is_i_dominant(2)
    assert m.spectral_range() == (0, 3)
