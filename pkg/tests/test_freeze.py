import pytest

from qtchars.cartan import cartan_data, gamma_table
from qtchars.errors import Mismatch, NotPointed
from qtchars.freeze import (DiagramInclusion, check_lemma_frz, freeze, inclusion, leq_I,
                            lift_monomial)
from qtchars.kl import chi_qt, e_t
from qtchars.monomial import Monomial, a_monomial
from qtchars.tfm import f_t
from qtchars.torus import PointedElement

Y = Monomial.y


@pytest.mark.parametrize("fam,small,big,m", [
    ("A", 2, 4, Y(1, 0) * Y(2, 1)),
    ("B", 2, 3, Y(2, 0)),
    ("C", 2, 3, Y(1, 0) * Y(2, 3)),
    ("D", 4, 5, Y(1, 0) * Y(3, 1)),
])
@pytest.mark.parametrize("make", [chi_qt, f_t, e_t])
def test_freeze_matches_small_rank(fam, small, big, m, make):
    inc = inclusion(fam, small, big)
    gs, gb = gamma_table(inc.small), gamma_table(inc.big)
    assert freeze(inc, make(gb, lift_monomial(inc, m))) == make(gs, m)


def test_lemma_on_products():
    inc = inclusion("A", 2, 3)
    gs, gb = gamma_table(inc.small), gamma_table(inc.big)
    assert check_lemma_frz(inc, gs, gb, f_t(gb, Y(1, 0)), f_t(gb, Y(2, 1) * Y(3, 2)))


def test_leq_I():
    inc = inclusion("A", 2, 3)
    m = Y(1, 0) * Y(3, 0)
    assert leq_I(inc, m / a_monomial(inc.big, 1, 1), m)
    assert not leq_I(inc, m / a_monomial(inc.big, 3, 1), m)


def test_bad_inclusion():
    small, big = cartan_data(("B", 2)), cartan_data(("B", 3))
    with pytest.raises(Mismatch):
        DiagramInclusion(small, big, ((1, 2), (2, 3)))
    with pytest.raises(Mismatch):
        DiagramInclusion(small, big, ((1, 1),))


def test_freeze_errors():
    inc = inclusion("A", 2, 3)
    with pytest.raises(Mismatch):
        freeze(inc, f_t(gamma_table(inc.small), Y(1, 0)))
    y = f_t(gamma_table(inc.big), Y(1, 0))
    with pytest.raises(NotPointed):
        freeze(inc, PointedElement(y.top, y.body.scale(2), check=False))
