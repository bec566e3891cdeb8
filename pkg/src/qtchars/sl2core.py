"""Rank-one building blocks ``F_{i,t}(m)`` for ``i``-dominant monomials."""
from __future__ import annotations

from typing import NamedTuple

from .errors import NotIDominant
from .monomial import ONE, Monomial, a_monomial, factor_generators
from .laurent import padd, pmul
from .torus import PointedElement, TorusElement, gamma_pair, star_product


class StringBlock(NamedTuple):
    node: int
    start: int
    length: int

    def spectral(self, d):
        return [self.start + 2 * d * k for k in range(self.length)]

    def monomial(self, d):
        return Monomial([((self.node, p), 1) for p in self.spectral(d)])


def in_general_position(b1: StringBlock, b2: StringBlock, d: int) -> bool:
    """Neither string extends the other into a longer string."""
    s1, s2 = set(b1.spectral(d)), set(b2.spectral(d))
    if b1.node != b2.node or s1 <= s2 or s2 <= s1:
        return True
    union = sorted(s1 | s2)
    is_string = all(b - a == 2 * d for a, b in zip(union, union[1:]))
    return not is_string


def string_decompose(cartan, m: Monomial, i) -> list:
    """Split the ``i``-part of ``m`` into strings of step ``2 d_i`` in pairwise general position.

    Strings are peeled greedily from the highest occupied index downward,
    each as long as the remaining multiplicities allow.
    """
    if not m.is_i_dominant(i):
        raise NotIDominant(f"{m} is not {i}-dominant")
    d = cartan.di(i)
    counts = {p: e for (j, p), e in m.items if j == i}
    blocks = []
    while counts:
        top = max(counts)
        p = top
        while counts.get(p, 0) > 0:
            counts[p] -= 1
            if not counts[p]:
                del counts[p]
            p -= 2 * d
        start = p + 2 * d
        blocks.append(StringBlock(i, start, (top - start) // (2 * d) + 1))
    blocks.sort(key=lambda b: (-b.start, -b.length))
    return blocks


def string_expansion(cartan, block: StringBlock) -> dict:
    """Monomials of the Kirillov-Reshetikhin string, each with coefficient 1."""
    d = cartan.di(block.node)
    k = block.length
    m = block.monomial(d)
    out = {m: {0: 1}}
    for s in range(k):
        m = m * a_monomial(cartan, block.node, block.start + (2 * (k - s) - 1) * d).inverse()
        out[m] = {0: 1}
    return out


def _check_f_it(cartan, m, i, body):
    if body.raw(m) != {0: 1}:
        raise AssertionError(f"F_{i},t({m}) is not pointed")
    for mm in body.terms:
        if mm != m and mm.is_i_dominant(i):
            raise AssertionError(f"F_{i},t({m}) has a second {i}-dominant monomial {mm}")
        fac = factor_generators(cartan, m / mm, allowed={i})
        if fac is None:
            raise AssertionError(f"{mm} is not m times a product of A[{i},p]^-1")


def _rank_one_fundamental(cartan, i, p):
    y = Monomial.y(i, p)
    return {y: {0: 1}, y / a_monomial(cartan, i, p + cartan.di(i)): {0: 1}}


def rank_one_standard(g, m: Monomial, i) -> TorusElement:
    """Normalized product of the spectator ``m / m_i`` and the generators
    ``Y[i,p] (1 + A[i,p+d_i]^-1)`` of ``K_{i,t}``, in non-increasing ``p``."""
    if not m.is_i_dominant(i):
        raise NotIDominant(f"{m} is not {i}-dominant")
    cartan = g.cartan
    acc = TorusElement.monomial(cartan, m.without(i))
    facs = sorted((p for (j, p), e in m.items if j == i for _ in range(e)), reverse=True)
    for p in facs:
        acc = star_product(g, acc, TorusElement(cartan, _rank_one_fundamental(cartan, i, p), clean=False))
    (k,) = acc.raw(m)
    return acc.scale(1, -k)


def _peel_i_dominant(cartan, m, i, acc, lower, sub):
    """Remove every ``i``-dominant monomial other than ``m`` from ``acc`` by subtracting
    ``coefficient * lower(m')`` from the top down."""
    while True:
        cands = [mm for mm in acc if mm != m and mm.is_i_dominant(i)]
        if not cands:
            return acc
        best = min(cands, key=lambda mm: (sum(factor_generators(cartan, m / mm, allowed={i}).values()),
                                          mm.items))
        acc = sub(acc, acc[best], lower(best))


def _shift_normal(m):
    rng = m.spectral_range()
    return (m, 0) if rng is None else (m.shift(-rng[0]), rng[0])


def _rank_one_core(g, mi, i):
    """``F_{i,t}`` of a pure ``i``-part ``mi``, as a terms dict; cached up to shift."""
    shifted = g.cache("f_it_shifted")
    hit = shifted.get((mi, i))
    if hit is not None:
        return hit
    base, sh = _shift_normal(mi)
    cache = g.cache("f_it")
    core = cache.get((base, i))
    if core is None:
        cartan = g.cartan

        def sub(acc, c, f):
            out = dict(acc)
            for mm, cm in f.terms.items():
                new = padd(out.get(mm, {}), pmul(c, cm), -1)
                if new:
                    out[mm] = new
                else:
                    out.pop(mm, None)
            return out

        core = _peel_i_dominant(cartan, base, i, dict(rank_one_standard(g, base, i).terms),
                                lambda mm: f_it(g, mm, i), sub)
        _check_f_it(cartan, base, i, TorusElement(cartan, core, clean=False))
        cache[(base, i)] = core
    if sh:
        core = {mm.shift(sh): c for mm, c in core.items()}
    shifted[(mi, i)] = core
    return core


def f_it(g, m: Monomial, i) -> PointedElement:
    """The ``m``-pointed element of ``K_{i,t}`` with ``m`` as its only ``i``-dominant monomial.

    Built from the rank-one standard product of the ``i``-part by subtracting
    ``F_{i,t}`` of the lower ``i``-dominant monomials it contains.  Variables
    at other nodes pair trivially with every ``A[i,p]`` under gamma, so the
    spectator ``m / m_i`` multiplies in without any power of ``t``.
    """
    if not m.is_i_dominant(i):
        raise NotIDominant(f"{m} is not {i}-dominant")
    return PointedElement(m, TorusElement(g.cartan, f_it_terms(g, m, i), clean=False), check=False)


def f_it_terms(g, m, i):
    """Terms dict of ``F_{i,t}(m)`` (no validation of ``m``; read-only)."""
    spect = m.without(i)
    core = _rank_one_core(g, m.part(i), i)
    if not spect.items:
        return core
    return {spect * mm: c for mm, c in core.items()}


def f_i_classical(cartan, m: Monomial, i, _cache={}) -> dict:
    """``t = 1`` rank-one expansion as ``{monomial: int}``.

    Commutative product of the string expansions of the ``i``-part, corrected
    by subtracting the classical expansions of lower ``i``-dominant monomials.
    """
    if not m.is_i_dominant(i):
        raise NotIDominant(f"{m} is not {i}-dominant")
    key = (cartan.family, cartan.rank, cartan.labels, m, i)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    acc = {m.without(i): 1}
    for b in string_decompose(cartan, m, i):
        terms = list(string_expansion(cartan, b))
        new = {}
        for mm, c in acc.items():
            for tm in terms:
                k = mm * tm
                new[k] = new.get(k, 0) + c
        acc = new

    def sub(acc, c, f):
        out = dict(acc)
        for mm, cm in f.items():
            v = out.get(mm, 0) - c * cm
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        return out

    acc = {k: v for k, v in acc.items() if v}
    res = _peel_i_dominant(cartan, m, i, acc, lambda mm: f_i_classical(cartan, mm, i), sub)
    _cache[key] = res
    return res


def normalized_product(g, y1: PointedElement, y2: PointedElement) -> PointedElement:
    """``t^{-gamma(m1, m2)/2} y1 * y2`` pointed at ``m1 m2`` (used for multiplicativity checks)."""
    prod = star_product(g, y1.body, y2.body).scale(1, -gamma_pair(g, y1.top, y2.top))
    return PointedElement(y1.top * y2.top, prod, check=False)


__all__ = ["StringBlock", "string_decompose", "string_expansion", "f_it", "f_i_classical",
           "in_general_position", "normalized_product", "rank_one_standard", "ONE"]
