"""The quantum torus: elements, twisted product, bar involution, evaluation at t = 1."""
from __future__ import annotations

import numpy as np

from .errors import Mismatch, NotPointed
from .laurent import HalfTLaurent, padd, pbar, pev1, piadd, pshift
from .monomial import ONE, Monomial, a_monomial, factor_generators, nakajima_leq  # noqa: F401


def _same(c1, c2):
    return c1.family == c2.family and c1.rank == c2.rank and c1.labels == c2.labels


def _check_nodes(cartan, m):
    for (i, _), _e in m.items:
        if not cartan.has_node(i):
            raise Mismatch(f"node {i} of {m} is not a node of {cartan}")


class TorusElement:
    """Finite sum ``sum c_m * m`` with ``c_m`` in ``Z[t^{+-1/2}]``.

    ``terms`` maps :class:`Monomial` to a ``{half_exponent: coeff}`` dict;
    treat it as read-only.
    """

    __slots__ = ("cartan", "terms")

    def __init__(self, cartan, terms=None, *, clean=True):
        self.cartan = cartan
        if terms is None:
            terms = {}
        if clean:
            terms = {m: dict(c) for m, c in terms.items() if any(c.values())}
            for c in terms.values():
                for k in [k for k, v in c.items() if not v]:
                    del c[k]
        self.terms = terms

    @classmethod
    def monomial(cls, cartan, m, coeff=None):
        if coeff is None:
            c = {0: 1}
        elif isinstance(coeff, HalfTLaurent):
            c = dict(coeff.coeffs)
        elif isinstance(coeff, int):
            c = {0: coeff}
        else:
            c = dict(coeff)
        return cls(cartan, {m: c})

    @classmethod
    def one(cls, cartan):
        return cls.monomial(cartan, ONE)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def support(self):
        return list(self.terms)

    def coeff(self, m) -> HalfTLaurent:
        return HalfTLaurent(self.terms.get(m, {}))

    def raw(self, m):
        return self.terms.get(m, {})

    def is_zero(self):
        return not self.terms

    def _compat(self, other):
        if not _same(self.cartan, other.cartan):
            raise Mismatch(f"elements over {self.cartan} and {other.cartan}")

    def __add__(self, other):
        self._compat(other)
        out = {m: c for m, c in self.terms.items()}
        for m, c in other.terms.items():
            new = padd(out.get(m, {}), c)
            if new:
                out[m] = new
            else:
                out.pop(m, None)
        return TorusElement(self.cartan, out, clean=False)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, TorusElement) and _same(self.cartan, other.cartan)
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset((m, frozenset(c.items())) for m, c in self.terms.items()))

    def scale(self, factor=1, half_shift=0):
        """Multiply by ``factor * t^{half_shift/2}`` (``factor`` int or HalfTLaurent)."""
        if isinstance(factor, HalfTLaurent):
            f = pshift(factor.coeffs, half_shift)
            out = {}
            for m, c in self.terms.items():
                new = {}
                for k1, v1 in c.items():
                    piadd(new, f, v1, k1)
                if new:
                    out[m] = new
            return TorusElement(self.cartan, out, clean=False)
        if factor == 0:
            return TorusElement(self.cartan, {})
        return TorusElement(self.cartan, {m: {k + half_shift: v * factor for k, v in c.items()}
                                          for m, c in self.terms.items()}, clean=False)

    def shift(self, s):
        """Shift every spectral index by ``s``."""
        if s == 0:
            return self
        return TorusElement(self.cartan, {m.shift(s): c for m, c in self.terms.items()}, clean=False)

    def is_t_free(self):
        return all(set(c) <= {0} for c in self.terms.values())

    def int_terms(self):
        """``{m: integer}`` for a ``t``-free element."""
        return {m: c.get(0, 0) for m, c in self.terms.items()}

    def total(self):
        return sum(pev1(c) for c in self.terms.values())

    def dominant_part(self):
        return {m: c for m, c in self.terms.items() if m.is_dominant()}

    def __repr__(self):
        body = " + ".join(f"({HalfTLaurent(c)}){m}" for m, c in sorted(self.terms.items(),
                                                                       key=lambda kv: kv[0].items))
        return f"TorusElement[{self.cartan}]({body or '0'})"


def gamma_pair(g, m1: Monomial, m2: Monomial) -> int:
    """Bilinear extension of ``gamma(Y[i,p], Y[j,s]) = gamma_ij(p - s)``."""
    _check_nodes(g.cartan, m1)
    _check_nodes(g.cartan, m2)
    total = 0
    for (i, p), e1 in m1.items:
        for (j, s), e2 in m2.items:
            total += e1 * e2 * g.gamma_ij(i, j, p - s)
    return total


def _exponent_matrix(terms, index):
    mat = np.zeros((len(terms), len(index)), dtype=np.int64)
    for a, (m, _) in enumerate(terms):
        for k, e in m.items:
            mat[a, index[k]] = e
    return mat


def _flatten_coeffs(terms):
    ti, te, tc = [], [], []
    for a, (_, c) in enumerate(terms):
        for k, v in c.items():
            ti.append(a)
            te.append(k)
            tc.append(v)
    return (np.array(ti, dtype=np.int64), np.array(te, dtype=np.int64),
            np.array(tc, dtype=np.int64))


def _star_terms(g, xterms, yterms):
    xs = list(xterms.items())
    ys = list(yterms.items())
    if not xs or not ys:
        return {}
    keys = sorted({k for m, _ in xs for k, _ in m.items} | {k for m, _ in ys for k, _ in m.items})
    if not keys:
        # both sides are multiples of the unit monomial
        out = {}
        for _, c1 in xs:
            for _, c2 in ys:
                for k1, v1 in c1.items():
                    piadd(out, c2, v1, k1)
        return {ONE: out} if out else {}
    index = {k: a for a, k in enumerate(keys)}
    X = _exponent_matrix(xs, index)
    Y = _exponent_matrix(ys, index)
    G = np.array([[g.gamma_ij(i, j, p - s) for (j, s) in keys] for (i, p) in keys], dtype=np.int64)
    gam = X @ G @ Y.T
    N, M, K = len(xs), len(ys), len(keys)
    Z = (X[:, None, :] + Y[None, :, :]).reshape(N * M, K)
    rows, inv = np.unique(Z, axis=0, return_inverse=True)
    inv = inv.reshape(-1)
    xi, xe, xc = _flatten_coeffs(xs)
    yi, ye, yc = _flatten_coeffs(ys)
    ti = inv[xi[:, None] * M + yi[None, :]].reshape(-1)
    te = (xe[:, None] + ye[None, :] + gam[xi[:, None], yi[None, :]]).reshape(-1)
    tc = (xc[:, None] * yc[None, :]).reshape(-1)
    emin = int(te.min())
    span = int(te.max()) - emin + 1
    key = ti * span + (te - emin)
    order = np.argsort(key, kind="stable")
    ks = key[order]
    vs = tc[order]
    starts = np.flatnonzero(np.concatenate(([True], ks[1:] != ks[:-1])))
    sums = np.add.reduceat(vs, starts)
    uk = ks[starts]
    out = {}
    mono_cache = {}
    for kk, s in zip(uk.tolist(), sums.tolist()):
        if not s:
            continue
        r, e = divmod(kk, span)
        m = mono_cache.get(r)
        if m is None:
            row = rows[r]
            nz = np.flatnonzero(row)
            m = mono_cache[r] = Monomial._raw(tuple((keys[a], int(row[a])) for a in nz))
        c = out.get(m)
        if c is None:
            c = out[m] = {}
        c[e + emin] = s
    return out


def star_product(g, x: TorusElement, y: TorusElement) -> TorusElement:
    """``m * m' = t^{gamma(m, m')/2} m m'`` extended bilinearly."""
    x._compat(y)
    if not _same(g.cartan, x.cartan):
        raise Mismatch(f"gamma table for {g.cartan} used on elements over {x.cartan}")
    return TorusElement(x.cartan, _star_terms(g, x.terms, y.terms), clean=False)


def star_monomials(g, m1: Monomial, m2: Monomial) -> TorusElement:
    return TorusElement.monomial(g.cartan, m1 * m2, {gamma_pair(g, m1, m2): 1})


def bar(x: TorusElement) -> TorusElement:
    return TorusElement(x.cartan, {m: pbar(c) for m, c in x.terms.items()}, clean=False)


def ev_t1(x: TorusElement) -> TorusElement:
    out = {}
    for m, c in x.terms.items():
        s = pev1(c)
        if s:
            out[m] = {0: s}
    return TorusElement(x.cartan, out, clean=False)


def is_bar_invariant(x: TorusElement) -> bool:
    return all(c == pbar(c) for c in x.terms.values())


class PointedElement:
    """An element ``top + sum_{m' < top} c_{m'} m'``.

    ``check`` verifies the coefficient of ``top`` and the strict Nakajima
    inequality for every other monomial of the body.
    """

    __slots__ = ("top", "body")

    def __init__(self, top: Monomial, body: TorusElement, check=True):
        self.top = top
        self.body = body
        if check:
            self.validate()

    def validate(self):
        if self.body.raw(self.top) != {0: 1}:
            raise NotPointed(f"coefficient of top monomial {self.top} is {self.body.coeff(self.top)}, not 1")
        cartan = self.body.cartan
        for m in self.body.terms:
            if m != self.top and factor_generators(cartan, self.top / m) is None:
                raise NotPointed(f"monomial {m} is not below the top {self.top}")
        return True

    @property
    def cartan(self):
        return self.body.cartan

    @property
    def terms(self):
        return self.body.terms

    def __len__(self):
        return len(self.body)

    def coeff(self, m):
        return self.body.coeff(m)

    def __eq__(self, other):
        return isinstance(other, PointedElement) and self.top == other.top and self.body == other.body

    def __hash__(self):
        return hash((self.top, self.body))

    def shift(self, s):
        return PointedElement(self.top.shift(s), self.body.shift(s), check=False)

    def __repr__(self):
        return f"PointedElement(top={self.top}, {len(self.body)} terms)"


def pointed_product(g, y1: PointedElement, y2: PointedElement, check=False) -> PointedElement:
    """``t^{-gamma(m1, m2)/2} y1 * y2``, pointed at ``m1 m2``."""
    prod = star_product(g, y1.body, y2.body).scale(1, -gamma_pair(g, y1.top, y2.top))
    return PointedElement(y1.top * y2.top, prod, check=check)
