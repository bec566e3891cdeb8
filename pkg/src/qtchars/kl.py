"""Standard basis ``E_t(m)``, the canonical basis ``chi_{q,t}(L(m))`` and ``chi_q(L(m))``."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonPolynomialQ, NonPositiveCoefficient, NotDominant
from .laurent import padd, pbar, piadd, pmul
from .monomial import ONE, Monomial
from .tfm import DEFAULT_CAP, _normalize, a_height, f_t
from .torus import PointedElement, TorusElement, ev_t1, gamma_pair, star_product


def _require_dominant(m):
    if not m.is_dominant():
        raise NotDominant(f"{m} is not dominant")


def ordered_factorization(m: Monomial, tie_order=None):
    """Fundamental factors ``(i, p)`` with ``p`` non-increasing.

    ``tie_order`` optionally fixes the order of nodes sharing the same ``p``.
    """
    facs = m.fundamental_factors()
    rank = {} if tie_order is None else {i: k for k, i in enumerate(tie_order)}
    return sorted(facs, key=lambda ip: (-ip[1], rank.get(ip[0], ip[0])))


def e_t(g, m: Monomial, cap: int = DEFAULT_CAP, factors=None) -> PointedElement:
    """``t^{gamma(m)} F_t(Y[i1,p1]) * ... * F_t(Y[il,pl])`` with ``p1 >= ... >= pl``.

    ``factors`` may pin a specific admissible ordered factorization.
    """
    _require_dominant(m)
    cartan = g.cartan
    if factors is not None:
        facs = list(factors)
        if Monomial([(f, 1) for f in facs]) != m or any(a[1] < b[1] for a, b in zip(facs, facs[1:])):
            raise ValueError("factors must be an ordered factorization of m with non-increasing p")
        return _e_t_product(g, m, facs, cap)
    base, s = _normalize(m)
    cache = g.cache("e_t")
    hit = cache.get(base)
    if hit is None:
        hit = cache[base] = _e_t_product(g, base, ordered_factorization(base), cap)
    return hit.shift(s)


def _e_t_product(g, m, facs, cap):
    cartan = g.cartan
    if not facs:
        return PointedElement(ONE, TorusElement.one(cartan), check=False)
    ys = [Monomial.y(i, p) for i, p in facs]
    shift = 0
    for a in range(len(ys)):
        for b in range(a + 1, len(ys)):
            shift -= gamma_pair(g, ys[a], ys[b])
    acc = None
    for y in ys:
        f = f_t(g, y, cap).body
        acc = f if acc is None else star_product(g, acc, f)
    return PointedElement(m, acc.scale(1, shift), check=False)


@dataclass
class StandardExpansion:
    """``chi = sum_{m'} Q[m'] E_t(m')`` over the dominant set ``S`` (``Q[top] = 1``)."""

    top: Monomial
    terms: dict
    dominant_set: list = field(default_factory=list)

    def q_degrees(self):
        return {m: (min(c), max(c)) for m, c in self.terms.items() if c}


def dominant_set(g, m: Monomial, cap: int = DEFAULT_CAP):
    """Dominant monomials reached from ``m`` through supports of ``E_t``, sorted from ``m`` down."""
    seen = {m}
    stack = [m]
    while stack:
        cur = stack.pop()
        for mm in e_t(g, cur, cap).terms:
            if mm.is_dominant() and mm not in seen:
                seen.add(mm)
                stack.append(mm)
    cartan = g.cartan
    heights = {x: a_height(cartan, m / x) for x in seen}
    return sorted(seen, key=lambda x: (heights[x], x.items))


def _dominant_rows(g, S, cap):
    """Dominant coefficients of each ``E_t(m')``, ``m'`` in ``S``."""
    members = set(S)
    rows = {}
    for mp in S:
        e = e_t(g, mp, cap)
        row = {}
        for mm, c in e.terms.items():
            if mm.is_dominant():
                if mm not in members:
                    raise AssertionError(f"dominant monomial {mm} of E_t({mp}) escaped the set S")
                row[mm] = c
        if row.get(mp) != {0: 1}:
            raise AssertionError(f"E_t({mp}) is not unitriangular")
        rows[mp] = row
    return rows


def bar_matrix(g, m: Monomial, cap: int = DEFAULT_CAP):
    """Coefficients ``a[m'][m'']`` with ``bar(E_t(m')) = sum a[m'][m''] E_t(m'')``.

    An element of the quantum Grothendieck ring is determined by its dominant
    coefficients, so the expansion is a unitriangular solve on those.
    """
    S = dominant_set(g, m, cap)
    rows = _dominant_rows(g, S, cap)
    pos = {x: k for k, x in enumerate(S)}
    out = {}
    for mp in S:
        resid = {x: pbar(c) for x, c in rows[mp].items()}
        coeffs = {}
        for x in S[pos[mp]:]:
            c = resid.pop(x, None)
            if not c:
                continue
            coeffs[x] = c
            for y, cy in rows[x].items():
                new = padd(resid.get(y, {}), pmul(c, cy), -1)
                if new:
                    resid[y] = new
                else:
                    resid.pop(y, None)
        if resid:
            raise AssertionError("bar expansion did not terminate inside S")
        if coeffs.get(mp) != {0: 1}:
            raise AssertionError(f"bar matrix diagonal at {mp} is {coeffs.get(mp)}")
        out[mp] = coeffs
    return S, out


def kl_solve(g, m: Monomial, cap: int = DEFAULT_CAP) -> StandardExpansion:
    """Find ``Q[m'] in t^{-1} Z[t^{-1}]`` making ``sum Q[m'] E_t(m')`` bar-invariant.

    Bar-invariance is imposed on dominant coefficients, which determine the
    element; dominant monomials are processed from ``m`` downward.
    """
    _require_dominant(m)
    S = dominant_set(g, m, cap)
    rows = _dominant_rows(g, S, cap)
    Q = {m: {0: 1}}
    # running dominant coefficients of sum_{processed} Q[x] E_t(x)
    dom = {}
    for y, cy in rows[m].items():
        dom[y] = dict(cy)
    for d in S[1:]:
        r = dom.get(d, {})
        q = _q_from_residual(r, d)
        if q:
            Q[d] = q
            for y, cy in rows[d].items():
                slot = dom.setdefault(y, {})
                piadd(slot, pmul(q, cy))
                if not slot:
                    del dom[y]
        final = dom.get(d, {})
        if final != pbar(final):
            raise NonPolynomialQ(f"coefficient of {d} is not bar-invariant after the solve: {final}")
    return StandardExpansion(m, Q, S)


def _q_from_residual(r, d):
    # Need Q in t^{-1}Z[t^{-1}] with Q + r bar-invariant:
    # for k > 0: r[k] = r[-k] + Q[-k], so Q[-k] = r[k] - r[-k].
    q = {}
    for k in {abs(k) for k in r if k}:
        diff = r.get(k, 0) - r.get(-k, 0)
        if diff:
            if k % 2:
                raise NonPolynomialQ(f"coefficient of {d} has a half-integral asymmetric part: {r}")
            q[-k] = diff
    return q


def chi_qt(g, m: Monomial, cap: int = DEFAULT_CAP, with_expansion=False):
    """The simple (q,t)-character: bar-invariant, ``m``-pointed, ``E_t(m)`` plus lower terms."""
    _require_dominant(m)
    base, s = _normalize(m)
    cache = g.cache("chi_qt")
    hit = cache.get(base)
    if hit is None:
        exp = kl_solve(g, base, cap)
        acc = {}
        for mp, q in exp.terms.items():
            for mm, c in e_t(g, mp, cap).terms.items():
                slot = acc.setdefault(mm, {})
                piadd(slot, pmul(q, c))
                if not slot:
                    del acc[mm]
        body = TorusElement(g.cartan, acc, clean=False)
        hit = cache[base] = (PointedElement(base, body, check=False), exp)
    res, exp = hit
    res = res.shift(s)
    if with_expansion:
        exp = StandardExpansion(exp.top.shift(s), {k.shift(s): v for k, v in exp.terms.items()},
                                [x.shift(s) for x in exp.dominant_set])
        return res, exp
    return res


def chi_q(g, m: Monomial, cap: int = DEFAULT_CAP) -> TorusElement:
    """``ev_{t=1}`` of the simple (q,t)-character; every coefficient must be positive."""
    res = ev_t1(chi_qt(g, m, cap).body)
    for mm, c in res.terms.items():
        if c[0] <= 0:
            raise NonPositiveCoefficient(f"coefficient {c[0]} at {mm} in chi_q({m})")
    return res


def dim_simple(g, m: Monomial, cap: int = DEFAULT_CAP) -> int:
    return chi_q(g, m, cap).total()
