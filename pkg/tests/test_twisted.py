import pytest

from qtchars.cartan import gamma_table
from qtchars.errors import IncompatibleInclusion, NonConstantCoefficient, UnsupportedFolding
from qtchars.kl import chi_q
from qtchars.monomial import ONE, Monomial
from qtchars.tfm import f_t
from qtchars.torus import PointedElement
from qtchars.twisted import (check_freeze_fold, check_frozen_simple, check_res_fold,
                             chi_q_twisted, fold_phi, folding_datum, is_sigma_invariant,
                             sigma_act, signed_labels, twisted_a_monomial, twisted_inclusion,
                             umul, unfold_expand, unfold_monomial, unfolded_a, utext)

Y = Monomial.y


def test_signed_labels():
    assert signed_labels(3) == (-1, 0, 1)
    assert signed_labels(4) == (-2, -1, 1, 2)


def test_data():
    fd = folding_datum("A", 3)
    assert fd.map == {-1: 1, 0: 0, 1: -1} and fd.fixed() == [0]
    std = folding_datum("A", 4, labeling="standard")
    assert std.map == {1: 4, 2: 3, 3: 2, 4: 1}
    d = folding_datum("D", 5)
    assert d.map[1] == 2 and d.map[3] == 3
    for fam, rank, r in [("B", 3, 2), ("D", 4, 3), ("A", 1, 2), ("C", 3, 2)]:
        with pytest.raises(UnsupportedFolding):
            folding_datum(fam, rank, r)


@pytest.mark.parametrize("fam,rank", [("A", 3), ("A", 4), ("D", 4)])
def test_a_monomials_fold_and_unfold(fam, rank):
    fd = folding_datum(fam, rank)
    for i in fd.cartan.labels:
        a = twisted_a_monomial(fd, i, 3)
        assert unfold_monomial(fd, a) == umul(unfolded_a(fd, fd.map[i], 3, 1), unfolded_a(fd, i, 3, 0))


def test_unfold_examples():
    fd = folding_datum("A", 3)
    assert utext(unfold_monomial(fd, Y(0, 0))) == "Y[0,0,0]Y[0,0,1]"
    u = unfold_monomial(fd, Y(-1, 2))
    assert set(u) == {((1, 2, 1), 1), ((-1, 2, 0), 1)}
    assert sigma_act(fd, sigma_act(fd, u)) == u
    assert unfold_monomial(fd, ONE) == ()


@pytest.mark.parametrize("fam,rank,m,terms,dim", [
    ("A", 3, Y(0, 0), 6, 6),
    ("A", 3, Y(-1, 0), 4, 4),
    ("D", 4, Y(1, 0), 8, 8),
])
def test_twisted_characters(fam, rank, m, terms, dim):
    fd = folding_datum(fam, rank)
    x = chi_q_twisted(fd, gamma_table(fd.cartan), m)
    assert len(x) == terms and x.total() == dim and x.top == m
    assert is_sigma_invariant(fd, unfold_expand(fd, x))


def test_trivial_and_errors():
    fd = folding_datum("A", 3)
    g = gamma_table(fd.cartan)
    one = chi_q_twisted(fd, g, ONE)
    assert one.terms == {ONE: 1}
    with pytest.raises(NonConstantCoefficient):
        fold_phi(fd, f_t(g, Y(0, 0) * Y(0, 2)).body.scale(1, 2))
    with pytest.raises(IncompatibleInclusion):
        twisted_inclusion(folding_datum("A", 4, labeling="standard"), folding_datum("A", 5, labeling="standard"))
    with pytest.raises(IncompatibleInclusion):
        twisted_inclusion(folding_datum("A", 3), folding_datum("D", 4))


@pytest.mark.parametrize("fam,small,big,m", [
    ("A", 3, 5, Y(0, 0) * Y(1, 1)),
    ("D", 4, 5, Y(1, 0) * Y(3, 1)),
])
def test_freeze_commutes_with_folding(fam, small, big, m):
    tinc = twisted_inclusion(folding_datum(fam, small), folding_datum(fam, big))
    gs, gb = gamma_table(tinc.small.cartan), gamma_table(tinc.big.cartan)
    assert check_res_fold(tinc, chi_q(gb, m))
    assert check_frozen_simple(tinc, gs, gb, m)
    assert check_freeze_fold(tinc, PointedElement(m, chi_q(gb, m), check=False))
