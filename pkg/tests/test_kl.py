import pytest

from qtchars.cartan import cartan_data, gamma_table
from qtchars.errors import NotDominant
from qtchars.kl import chi_q, chi_qt, dim_simple, e_t, kl_solve
from qtchars.monomial import ONE, Monomial
from qtchars.tfm import f_t
from qtchars.torus import is_bar_invariant

Y = Monomial.y


def _g(fam, rank):
    return gamma_table(cartan_data((fam, rank)))


def test_rank_one_example():
    g = _g("A", 1)
    m = Y(1, 0) * Y(1, 2)
    exp = kl_solve(g, m)
    assert exp.terms == {m: {0: 1}, ONE: {-2: -1}}
    chi = chi_qt(g, m)
    assert set(chi.body.terms) == {m, Y(1, 0) * Y(1, 4, -1), Y(1, 2, -1) * Y(1, 4, -1)}
    assert chi.body - e_t(g, m).body == e_t(g, ONE).body.scale(-1, -2)


def test_generic_product_is_simple():
    g = _g("A", 1)
    m = Y(1, 0) * Y(1, 6)
    assert kl_solve(g, m).terms == {m: {0: 1}}
    assert dim_simple(g, m) == 4


def test_fundamental_equals_f_t():
    g = _g("C", 3)
    assert chi_qt(g, Y(2, 0)) == f_t(g, Y(2, 0))


@pytest.mark.parametrize("fam,rank,m,dim", [
    ("A", 1, Y(1, 0) * Y(1, 2), 3),
    ("A", 2, Y(1, 0) * Y(2, 1), 9),
    ("A", 2, Y(1, 0) * Y(2, 3), 8),
    ("A", 3, Y(2, 0), 6),
    ("B", 2, Y(1, 0), 4),
    ("C", 2, Y(2, 0), 4),
    ("C", 2, Y(1, 0), 5),
    ("D", 4, Y(1, 0), 8),
])
def test_dimensions(fam, rank, m, dim):
    assert dim_simple(_g(fam, rank), m) == dim


@pytest.mark.parametrize("fam,rank,m", [
    ("B", 2, Y(1, 0) * Y(2, 3)),
    ("A", 3, Y(1, 0) * Y(2, 1) * Y(3, 2)),
    ("C", 2, Y(1, 0) * Y(1, 4)),
])
def test_canonical_properties(fam, rank, m):
    g = _g(fam, rank)
    y, exp = chi_qt(g, m, with_expansion=True)
    assert is_bar_invariant(y.body)
    y.validate()
    assert all(k < 0 and k % 2 == 0 for mp, q in exp.terms.items() if mp != m for k in q)
    assert all(c[0] > 0 for c in chi_q(g, m).terms.values())


def test_not_dominant():
    with pytest.raises(NotDominant):
        chi_qt(_g("A", 2), Y(1, 0) * Y(2, 2, -1))
