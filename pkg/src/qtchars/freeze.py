"""Diagram inclusions, the restriction ``res_I`` and the freezing operator."""
from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanData, cartan_data
from .errors import Mismatch, NotPointed
from .monomial import Monomial, factor_generators
from .torus import PointedElement, TorusElement, _same, gamma_pair, star_product


@dataclass(frozen=True)
class DiagramInclusion:
    """An injection ``embed: I -> I~`` preserving Cartan entries and symmetrizers."""

    small: CartanData
    big: CartanData
    embed: tuple  # ((small_label, big_label), ...)

    def __post_init__(self):
        emb = dict(self.embed)
        if set(emb) != set(self.small.labels):
            raise Mismatch("embedding must be defined on every node of the small diagram")
        if len(set(emb.values())) != len(emb) or not all(self.big.has_node(v) for v in emb.values()):
            raise Mismatch("embedding must be injective into the big diagram")
        for i in self.small.labels:
            if self.small.di(i) != self.big.di(emb[i]):
                raise Mismatch(f"symmetrizer differs at node {i}")
            for j in self.small.labels:
                if self.small.cij(i, j) != self.big.cij(emb[i], emb[j]):
                    raise Mismatch(f"Cartan entry differs at ({i},{j})")

    @property
    def mapping(self):
        return dict(self.embed)

    @property
    def image(self):
        return frozenset(v for _, v in self.embed)

    @property
    def back(self):
        return {v: k for k, v in self.embed}


def inclusion(family, small_rank, big_rank):
    """Same-family inclusion ``[1, n] subset [1, n~]`` with the standard labelling."""
    small = cartan_data((family, small_rank))
    big = cartan_data((family, big_rank))
    return DiagramInclusion(small, big, tuple((i, i) for i in small.labels))


def labelled_inclusion(small: CartanData, big: CartanData):
    """Inclusion by identical labels (used with signed labellings)."""
    return DiagramInclusion(small, big, tuple((i, i) for i in small.labels))


def res_monomial(inc: DiagramInclusion, m: Monomial) -> Monomial:
    return m.relabel(inc.back)


def res_I(inc: DiagramInclusion, x: TorusElement) -> TorusElement:
    """Send ``Y~[i,p]`` to ``Y[i,p]`` for ``i`` in ``I`` and to 1 otherwise; coefficients untouched.

    Linear, but not multiplicative for the twisted products.
    """
    if not _same(x.cartan, inc.big):
        raise Mismatch(f"element over {x.cartan}, inclusion expects {inc.big}")
    back = inc.back
    out = {}
    for m, c in x.terms.items():
        r = m.relabel(back)
        slot = out.setdefault(r, {})
        for k, v in c.items():
            w = slot.get(k, 0) + v
            if w:
                slot[k] = w
            else:
                del slot[k]
        if not slot:
            del out[r]
    return TorusElement(inc.small, out, clean=False)


def leq_I(inc: DiagramInclusion, m: Monomial, m_prime: Monomial) -> bool:
    """``m <=_I m_prime`` over the big diagram."""
    return factor_generators(inc.big, m_prime / m, allowed=inc.image) is not None


def freeze(inc: DiagramInclusion, y: PointedElement, check=True) -> PointedElement:
    """Drop the terms not ``<=_I`` the top monomial, then restrict to ``I``."""
    if not _same(y.cartan, inc.big):
        raise Mismatch(f"element over {y.cartan}, inclusion expects {inc.big}")
    if y.body.raw(y.top) != {0: 1}:
        raise NotPointed(f"coefficient of {y.top} is not 1")
    kept = {}
    for m, c in y.terms.items():
        if m == y.top:
            kept[m] = c
            continue
        fac = factor_generators(inc.big, y.top / m)
        if fac is None:
            raise NotPointed(f"{m} is not below {y.top}")
        if all(i in inc.image for (i, _), x in fac.items() if x):
            kept[m] = c
    body = res_I(inc, TorusElement(inc.big, kept, clean=False))
    return PointedElement(res_monomial(inc, y.top), body, check=check)


def check_lemma_frz(inc, g_small, g_big, y1: PointedElement, y2: PointedElement) -> bool:
    """Freezing a normalized product equals the normalized product of the freezings."""
    m1, m2 = y1.top, y2.top
    lhs_body = star_product(g_big, y1.body, y2.body).scale(1, -gamma_pair(g_big, m1, m2))
    lhs = freeze(inc, PointedElement(m1 * m2, lhs_body, check=False), check=False)
    f1, f2 = freeze(inc, y1, check=False), freeze(inc, y2, check=False)
    r1, r2 = f1.top, f2.top
    rhs_body = star_product(g_small, f1.body, f2.body).scale(1, -gamma_pair(g_small, r1, r2))
    return lhs.top == r1 * r2 and lhs.body == rhs_body


def lift_monomial(inc: DiagramInclusion, m: Monomial) -> Monomial:
    """Replace each ``Y[i,p]`` of the small diagram with ``Y~[embed(i),p]``."""
    return m.relabel(inc.mapping)
