"""Cartan data of classical type, the deformed Cartan matrix and the pairing gamma.

Nodes are labelled by integers.  The default labelling is ``1..n`` as in the
usual Dynkin pictures (for type D the two short legs are 1 and 2, attached to
node 3).  A different integer labelling can be supplied, which is how the
signed labels ``-l..l`` used for diagram foldings of type A are realised.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidRank, NonUnitConstant

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam not in MIN_RANK:
            raise InvalidRank(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < MIN_RANK[fam]:
            raise InvalidRank(f"rank {self.rank} out of range for type {fam}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def _cartan_matrix(family, n):
    c = [[0] * n for _ in range(n)]
    for a in range(n):
        c[a][a] = 2
    if family == "D":
        # positions 0,1 are the legs, both attached to position 2
        edges = [(0, 2), (1, 2)] + [(k, k + 1) for k in range(2, n - 1)]
    else:
        edges = [(k, k + 1) for k in range(n - 1)]
    for a, b in edges:
        c[a][b] = c[b][a] = -1
    if family == "B":
        c[0][1] = -2
    elif family == "C":
        c[1][0] = -2
    return c


def _symmetrizer(family, n):
    if family == "B":
        return [1] + [2] * (n - 1)
    if family == "C":
        return [2] + [1] * (n - 1)
    return [1] * n


def _dual_coxeter(family, n):
    return {"A": n + 1, "B": 2 * n - 1, "C": n + 1, "D": 2 * n - 2}[family]


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix ``c``, symmetrizer ``d``, lacing number and dual Coxeter number.

    ``c`` and ``d`` are stored positionally; use :meth:`cij` and :meth:`di`
    for access by node label.
    """

    family: str
    rank: int
    labels: tuple
    c: tuple
    d: tuple
    lacing: int
    dual_coxeter: int
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_pos", {lab: k for k, lab in enumerate(self.labels)})

    @property
    def nodes(self):
        return self.labels

    @property
    def lie_type(self):
        return LieType(self.family, self.rank)

    def index(self, i):
        return self._pos[i]

    def has_node(self, i):
        return i in self._pos

    def cij(self, i, j):
        return self.c[self._pos[i]][self._pos[j]]

    def di(self, i):
        return self.d[self._pos[i]]

    def neighbours(self, i):
        return [j for j in self.labels if j != i and self.cij(j, i) != 0]

    def relabel(self, labels):
        labels = tuple(labels)
        if len(labels) != self.rank or len(set(labels)) != self.rank:
            raise InvalidRank("relabelling must be a bijection onto distinct integers")
        return CartanData(self.family, self.rank, labels, self.c, self.d,
                          self.lacing, self.dual_coxeter)

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_data(lie_type, labels=None):
    if not isinstance(lie_type, LieType):
        lie_type = LieType(*lie_type)
    fam, n = lie_type.family, lie_type.rank
    c = tuple(tuple(row) for row in _cartan_matrix(fam, n))
    d = tuple(_symmetrizer(fam, n))
    lacing = 2 if fam in "BC" else 1
    cd = CartanData(fam, n, tuple(range(1, n + 1)), c, d, lacing, _dual_coxeter(fam, n))
    if labels is not None:
        cd = cd.relabel(labels)
    return cd


def _laurent_bracket(c):
    # (z^c - z^-c)/(z - z^-1) for c <= 0, as {exponent: coeff}
    k = -c
    return {k - 1 - 2 * s: -1 for s in range(k)}


def _fraction_inverse(mat):
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(a == b)) for b in range(n)]
           for a, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class GammaTable:
    """Lazily expanded Taylor coefficients of ``C(z)^{-1}`` and the values ``gamma_ij(u)``.

    Row ``i`` of ``C(z)`` is multiplied by ``z^{s_i}`` to obtain a polynomial
    matrix ``P(z)`` with integer unimodular constant term; ``P(z)^{-1}`` is
    then expanded as a power series with integer coefficients.  Extension of
    the series is guarded by a lock, so the table can be shared by threads.
    """

    def __init__(self, cartan: CartanData):
        self.cartan = cartan
        n = cartan.rank
        rows = []
        shifts = []
        for a in range(n):
            row = []
            for b in range(n):
                if a == b:
                    da = cartan.d[a]
                    row.append({da: 1, -da: 1})
                elif cartan.c[a][b] == 0:
                    row.append({})
                else:
                    row.append(_laurent_bracket(cartan.c[a][b]))
            low = min(e for entry in row for e in entry)
            shifts.append(-low)
            rows.append(row)
        self._shift = shifts
        deg = 0
        for a in range(n):
            for b in range(n):
                for e in rows[a][b]:
                    deg = max(deg, e + shifts[a])
        # P[l][a][b] = coefficient of z^l in row-shifted C(z)
        self._P = [[[0] * n for _ in range(n)] for _ in range(deg + 1)]
        for a in range(n):
            for b in range(n):
                for e, v in rows[a][b].items():
                    self._P[e + shifts[a]][a][b] += v
        inv0 = _fraction_inverse(self._P[0])
        if inv0 is None or any(x.denominator != 1 for row in inv0 for x in row):
            raise NonUnitConstant(f"constant term of the deformed Cartan matrix of {cartan} is not unimodular")
        self._P0inv = [[int(x) for x in row] for row in inv0]
        self._series = []  # X_k, k = 0, 1, ...: matrices of P(z)^{-1}
        self._lock = threading.Lock()
        self._gamma_cache = {}
        self._caches = {}

    @property
    def guard(self):
        return 2 * max(self.cartan.d)

    def _extend(self, order):
        n = self.cartan.rank
        with self._lock:
            while len(self._series) <= order:
                k = len(self._series)
                if k == 0:
                    self._series.append(self._P0inv)
                    continue
                acc = [[0] * n for _ in range(n)]
                for l in range(1, min(k, len(self._P) - 1) + 1):
                    Pl, X = self._P[l], self._series[k - l]
                    for a in range(n):
                        for b in range(n):
                            if Pl[a][b]:
                                pab = Pl[a][b]
                                Xb = X[b]
                                row = acc[a]
                                for c in range(n):
                                    row[c] += pab * Xb[c]
                new = [[-sum(self._P0inv[a][b] * acc[b][c] for b in range(n)) for c in range(n)]
                       for a in range(n)]
                self._series.append(new)

    def cprime(self, i, j, u):
        """Coefficient of ``z^u`` in the ``(i, j)`` entry of ``C(z)^{-1}``."""
        a, b = self.cartan.index(i), self.cartan.index(j)
        k = u - self._shift[b]
        if k < 0:
            return 0
        if k >= len(self._series):
            self._extend(k + self.guard)
        return self._series[k][a][b]

    def gamma_ij(self, i, j, u):
        key = (i, j, u)
        val = self._gamma_cache.get(key)
        if val is None:
            d = self.cartan.di(i)
            val = (self.cprime(i, j, u - d) - self.cprime(i, j, u + d)
                   - self.cprime(i, j, -u - d) + self.cprime(i, j, -u + d))
            self._gamma_cache[key] = val
        return val

    def cache(self, name):
        """Named memo dictionary attached to this table (f_it, f_t, e_t, ...)."""
        with self._lock:
            return self._caches.setdefault(name, {})


_TABLES = {}
_TABLES_LOCK = threading.Lock()


def gamma_table(cartan: CartanData) -> GammaTable:
    """Shared table per Cartan datum (caches are reused across calls)."""
    key = (cartan.family, cartan.rank, cartan.labels)
    with _TABLES_LOCK:
        tab = _TABLES.get(key)
        if tab is None:
            tab = _TABLES[key] = GammaTable(cartan)
        return tab


def cprime_coeff(g: GammaTable, i, j, u):
    return g.cprime(i, j, u)
