import pytest
import sympy as sp

from qtchars.cartan import LieType, cartan_data, gamma_table
from qtchars.errors import InvalidRank
from qtchars.monomial import Monomial, a_monomial
from qtchars.torus import gamma_pair


def sympy_cprime(cd, order):
    """Oracle: Taylor coefficients of C(z)^-1 via sympy's exact inverse."""
    z = sp.symbols("z")
    n = cd.rank
    C = sp.zeros(n, n)
    for a, i in enumerate(cd.labels):
        for b, j in enumerate(cd.labels):
            if a == b:
                C[a, b] = z ** cd.d[a] + z ** (-cd.d[a])
            elif cd.c[a][b]:
                c = cd.c[a][b]
                C[a, b] = sp.cancel((z ** c - z ** (-c)) / (z - 1 / z))
    inv = C.inv()
    out = {}
    for a in range(n):
        for b in range(n):
            ser = sp.series(sp.cancel(inv[a, b]), z, 0, order).removeO()
            poly = sp.Poly(sp.expand(ser), z)
            for (k,), v in poly.terms():
                out[(cd.labels[a], cd.labels[b], k)] = int(v)
    return out


@pytest.mark.parametrize("t", [("A", 2), ("B", 2), ("C", 3), ("D", 4)])
def test_cprime_matches_sympy(t):
    cd = cartan_data(t)
    g = gamma_table(cd)
    order = 14
    oracle = sympy_cprime(cd, order)
    for i in cd.labels:
        for j in cd.labels:
            for u in range(-3, order):
                assert g.cprime(i, j, u) == oracle.get((i, j, u), 0), (i, j, u)


def test_a1_series():
    g = gamma_table(cartan_data(("A", 1)))
    assert [g.cprime(1, 1, u) for u in range(8)] == [0, 1, 0, -1, 0, 1, 0, -1]
    assert g.gamma_ij(1, 1, 2) == 2
    assert g.gamma_ij(1, 1, -2) == -2
    assert g.gamma_ij(1, 1, 0) == 0


def test_gamma_skew():
    g = gamma_table(cartan_data(("C", 3)))
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            for u in range(-9, 10):
                assert g.gamma_ij(i, j, u) == -g.gamma_ij(j, i, -u)


@pytest.mark.parametrize("t", [("A", 3), ("B", 3), ("C", 2), ("D", 5)])
def test_gamma_closed_forms(t):
    cd = cartan_data(t)
    g = gamma_table(cd)
    for i in cd.labels:
        for j in cd.labels:
            dc = cd.di(i) * cd.cij(i, j)
            for u in range(-12, 13):
                want = 2 * ((u == dc) - (u == -dc))
                assert gamma_pair(g, a_monomial(cd, i, u), a_monomial(cd, j, 0)) == want
                want = 2 * (i == j) * ((u == cd.di(i)) - (u == -cd.di(i)))
                assert gamma_pair(g, a_monomial(cd, i, u), Monomial.y(j, 0)) == want


def test_conventions():
    b = cartan_data(("B", 3))
    assert b.cij(1, 2) == -2 and b.cij(2, 1) == -1 and b.d == (1, 2, 2)
    c = cartan_data(("C", 3))
    assert c.cij(2, 1) == -2 and c.d == (2, 1, 1)
    d = cartan_data(("D", 4))
    assert d.neighbours(3) == [1, 2, 4] and d.cij(1, 2) == 0


@pytest.mark.parametrize("t", [("A", 0), ("B", 1), ("C", 1), ("D", 3)])
def test_invalid_rank(t):
    with pytest.raises(InvalidRank):
        LieType(*t)


def test_relabel_keeps_matrix():
    cd = cartan_data(("A", 3), labels=(-1, 0, 1))
    assert cd.cij(-1, 0) == -1 and cd.cij(-1, 1) == 0
    g = gamma_table(cd)
    g0 = gamma_table(cartan_data(("A", 3)))
    assert g.gamma_ij(-1, 1, 3) == g0.gamma_ij(1, 3, 3)
