import pytest

from qtchars.cartan import cartan_data, gamma_table
from qtchars.errors import CapExceeded, NotDominant
from qtchars.monomial import Monomial, a_monomial
from qtchars.tfm import a_height, dominance_closure, f_classical, f_t
from qtchars.torus import ev_t1, is_bar_invariant

Y = Monomial.y


def _g(fam, rank):
    return gamma_table(cartan_data((fam, rank)))


# node 1 of B and C is the end node opposite the double bond
@pytest.mark.parametrize("fam,rank,i,size,dim", [
    ("A", 3, 2, 6, 6), ("A", 4, 1, 5, 5), ("B", 2, 1, 4, 4), ("B", 2, 2, 5, 5),
    ("C", 3, 1, 14, 14), ("C", 3, 3, 6, 6), ("D", 4, 1, 8, 8), ("D", 4, 3, 28, 29),
])
def test_fundamental_sizes(fam, rank, i, size, dim):
    res = f_t(_g(fam, rank), Y(i, 0))
    assert len(res.body) == size
    assert ev_t1(res.body).total() == dim


def test_adjoint_multiplicity():
    res = f_t(_g("D", 4), Y(3, 0))
    assert res.body.terms[Y(3, 2) * Y(3, 4, -1)] == {2: 1, -2: 1}


def test_only_dominant_monomial_is_top():
    g = _g("B", 2)
    m = Y(1, 0) * Y(2, 3)
    res = f_t(g, m)
    assert res.body.dominant_part() == [m] or set(res.body.dominant_part()) == {m}
    assert is_bar_invariant(res.body)


def test_classical_path_agrees():
    g = _g("C", 2)
    m = Y(1, 0) * Y(2, 1)
    assert ev_t1(f_t(g, m).body) == f_classical(g, m)


def test_shift_covariance():
    g = _g("A", 2)
    m = Y(1, 0) * Y(2, 3)
    assert f_t(g, m.shift(5)) == f_t(g, m).shift(5)


def test_orders_agree():
    g = _g("D", 4)
    m = Y(1, 0) * Y(3, 0) * Y(4, 0)
    assert f_t(g, m, order="lex") == f_t(g, m, order="revlex")


def test_cap_and_dominance_errors():
    g = _g("A", 3)
    with pytest.raises(CapExceeded):
        dominance_closure(g, Y(2, 0) * Y(2, 2), cap=3)
    with pytest.raises(NotDominant):
        f_t(g, Y(1, 0, -1))


def test_a_height():
    cd = cartan_data(("B", 3))
    v = a_monomial(cd, 1, 1) * a_monomial(cd, 3, 4) ** 2
    assert a_height(cd, v) > a_height(cd, a_monomial(cd, 1, 1)) > 0
    with pytest.raises(ValueError):
        a_height(cartan_data(("A", 1)), Y(1, 0))
