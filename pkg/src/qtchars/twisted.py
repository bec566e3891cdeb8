"""Order-2 diagram foldings of types A and D: orbit variables, the folding map and
twisted q-characters of simple modules.

Twisted elements live in the variables ``Yo[i,p]`` (one per orbit ``[i,q^p]``).
Since ``(i,p) -> [i,q^p]`` is injective on the skeletal index set, an orbit
monomial is stored as an ordinary :class:`Monomial` keyed by ``(i, p)``; only
the interpretation differs.  Unfolded monomials carry a third index
``eps`` in ``Z/2`` standing for the sign of the spectral parameter
``(-1)^eps q^p``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanData, cartan_data
from .errors import (IncompatibleInclusion, Mismatch, NonConstantCoefficient, NotPointed,
                     UnsupportedFolding)
from .freeze import DiagramInclusion, freeze, res_I
from .kl import chi_q
from .monomial import ONE, Monomial, factor_generators
from .tfm import DEFAULT_CAP
from .torus import PointedElement, TorusElement, _same


def signed_labels(n):
    """Labels ``-l..l`` (``n = 2l+1``) or ``-l..-1, 1..l`` (``n = 2l``), left to right."""
    l = n // 2
    if n % 2:
        return tuple(range(-l, l + 1))
    return tuple(range(-l, 0)) + tuple(range(1, l + 1))


@dataclass(frozen=True)
class FoldingDatum:
    cartan: CartanData
    sigma: tuple  # ((i, sigma(i)), ...)
    r: int = 2
    omega: int = -1  # formal sign: sigma sends eps to eps + 1

    def __post_init__(self):
        s = dict(self.sigma)
        if set(s) != set(self.cartan.labels) or set(s.values()) != set(self.cartan.labels):
            raise Mismatch("sigma must permute the nodes")
        if any(s[s[i]] != i for i in s) or all(s[i] == i for i in s):
            raise Mismatch("sigma must be a non-trivial involution")
        for i in s:
            for j in s:
                if self.cartan.cij(s[i], s[j]) != self.cartan.cij(i, j):
                    raise Mismatch(f"sigma does not preserve the Cartan entry ({i},{j})")

    @property
    def map(self):
        return dict(self.sigma)

    def fixed(self):
        return [i for i, j in self.sigma if i == j]

    def __str__(self):
        return f"({self.cartan.family}{self.cartan.rank}, 2)"


def folding_datum(family, rank, r=2, labeling="signed") -> FoldingDatum:
    """The unique order-``r`` automorphism for ``(A_n, 2)`` or ``(D_n, 2)``.

    ``labeling`` picks signed labels (type A, ``sigma(i) = -i``) or the
    standard ``1..n`` (type A, ``sigma(i) = n+1-i``); type D always uses
    ``1..n`` with ``1 <-> 2``.
    """
    if r != 2 or family not in ("A", "D"):
        raise UnsupportedFolding(f"folding ({family}{rank}, {r}) is not supported")
    if family == "A":
        if rank < 2:
            raise UnsupportedFolding("A1 has no non-trivial diagram automorphism")
        if labeling == "signed":
            cd = cartan_data(("A", rank), labels=signed_labels(rank))
            sig = tuple((i, -i) for i in cd.labels)
        elif labeling == "standard":
            cd = cartan_data(("A", rank))
            sig = tuple((i, rank + 1 - i) for i in cd.labels)
        else:
            raise ValueError(f"unknown labeling {labeling!r}")
        return FoldingDatum(cd, sig)
    cd = cartan_data(("D", rank))
    sig = tuple((i, {1: 2, 2: 1}.get(i, i)) for i in cd.labels)
    return FoldingDatum(cd, sig)


class TwistedElement:
    """Integer combination of orbit monomials ``Yo[i,p]``, optionally with a top."""

    __slots__ = ("datum", "terms", "top")

    def __init__(self, datum: FoldingDatum, terms: dict, top: Monomial | None = None):
        self.datum = datum
        self.terms = {m: c for m, c in terms.items() if c}
        self.top = top

    def __eq__(self, other):
        return (isinstance(other, TwistedElement) and _same(self.datum.cartan, other.datum.cartan)
                and self.terms == other.terms and self.top == other.top)

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.top))

    def __len__(self):
        return len(self.terms)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                k = m1 * m2
                out[k] = out.get(k, 0) + c1 * c2
        top = self.top * other.top if self.top is not None and other.top is not None else None
        return TwistedElement(self.datum, out, top)

    def total(self):
        return sum(self.terms.values())

    def __repr__(self):
        body = " + ".join(f"{c}*{m.to_text('Yo')}" for m, c in sorted(self.terms.items(),
                                                                        key=lambda kv: kv[0].items))
        return f"TwistedElement[{self.datum}]({body or '0'})"


def twisted_a_monomial(fd: FoldingDatum, i, p) -> Monomial:
    """``A[[i,p]] = Yo[i,p-1] Yo[i,p+1] prod_{c_ji = -1} Yo[j,p]^-1``."""
    acc = {(i, p - 1): 1, (i, p + 1): 1}
    for j in fd.cartan.labels:
        if j != i and fd.cartan.cij(j, i) == -1:
            acc[(j, p)] = -1
    return Monomial(acc)


def twisted_factor(fd: FoldingDatum, v: Monomial, allowed=None):
    """Factor ``v`` into ``A[[i,p]]``; the product is re-multiplied as a guard."""
    fac = factor_generators(fd.cartan, v, generator=lambda i, p: twisted_a_monomial(fd, i, p),
                            allowed=allowed)
    if fac is None:
        return None
    check = ONE
    for (i, p), x in fac.items():
        check = check * twisted_a_monomial(fd, i, p) ** x
    if check != v:
        raise AssertionError(f"twisted factorization of {v} does not multiply back")
    return fac


def twisted_leq(fd: FoldingDatum, m: Monomial, m_prime: Monomial, allowed=None) -> bool:
    """``m <=^sigma m_prime`` (restricted to nodes in ``allowed`` when given)."""
    return twisted_factor(fd, m_prime / m, allowed) is not None


def check_twisted_pointed(y: TwistedElement) -> bool:
    if y.top is None or y.terms.get(y.top) != 1:
        raise NotPointed("twisted element has no top of coefficient 1")
    for m in y.terms:
        if m != y.top and twisted_factor(y.datum, y.top / m) is None:
            raise NotPointed(f"{m.to_text('Yo')} is not below {y.top.to_text('Yo')}")
    return True


def fold_phi(fd: FoldingDatum, x) -> TwistedElement:
    """Relabel ``Y[i,p] -> Yo[i,p]``; ``x`` must have t-free coefficients."""
    top = None
    if isinstance(x, PointedElement):
        top, x = x.top, x.body
    elif isinstance(x, Monomial):
        return TwistedElement(fd, {x: 1}, x)
    if not _same(x.cartan, fd.cartan):
        raise Mismatch(f"element over {x.cartan}, folding datum over {fd.cartan}")
    out = {}
    for m, c in x.terms.items():
        if set(c) - {0}:
            raise NonConstantCoefficient(f"coefficient of {m} depends on t")
        out[m] = c[0]
    return TwistedElement(fd, out, top)


def chi_q_twisted(fd: FoldingDatum, g, m: Monomial, cap: int = DEFAULT_CAP) -> TwistedElement:
    """Twisted q-character of ``L^sigma(phi(m))`` as the folding of ``chi_q(L(m))``."""
    if not _same(g.cartan, fd.cartan):
        raise Mismatch(f"gamma table for {g.cartan}, folding datum over {fd.cartan}")
    y = fold_phi(fd, PointedElement(m, chi_q(g, m, cap), check=False))
    check_twisted_pointed(y)
    return y


# unfolded monomials: sorted tuples of ((i, p, eps), e)

def _umono(acc):
    return tuple(sorted((k, e) for k, e in acc.items() if e))


def unfold_monomial(fd: FoldingDatum, m: Monomial):
    """``Yo[i,p] -> Y(sigma(i),p,1) Y(i,p,0)``."""
    s = fd.map
    acc = {}
    for (i, p), e in m.items:
        for k in ((s[i], p, 1), (i, p, 0)):
            acc[k] = acc.get(k, 0) + e
    return _umono(acc)


def unfold_expand(fd: FoldingDatum, x: TwistedElement) -> dict:
    out = {}
    for m, c in x.terms.items():
        u = unfold_monomial(fd, m)
        out[u] = out.get(u, 0) + c
    return {u: c for u, c in out.items() if c}


def sigma_act(fd: FoldingDatum, u):
    s = fd.map
    return _umono({(s[i], p, (eps + 1) % 2): e for (i, p, eps), e in u})


def is_sigma_invariant(fd: FoldingDatum, expanded: dict) -> bool:
    return all(expanded.get(sigma_act(fd, u), 0) == c for u, c in expanded.items())


def unfolded_a(fd: FoldingDatum, i, p, eps=0):
    """Untwisted ``A[i, (-1)^eps q^p]`` in unfolded variables (simply-laced)."""
    acc = {(i, p - 1, eps): 1, (i, p + 1, eps): 1}
    for j in fd.cartan.labels:
        if j != i and fd.cartan.cij(j, i) == -1:
            acc[(j, p, eps)] = -1
    return _umono(acc)


def umul(u1, u2):
    acc = dict(u1)
    for k, e in u2:
        acc[k] = acc.get(k, 0) + e
    return _umono(acc)


def utext(u):
    if not u:
        return "1"
    return "".join(f"Y[{i},{p},{eps}]" + ("" if e == 1 else f"^{e}") for (i, p, eps), e in u)


@dataclass(frozen=True)
class TwistedInclusion:
    small: FoldingDatum
    big: FoldingDatum
    inc: DiagramInclusion

    def __post_init__(self):
        emb, s, sb = self.inc.mapping, self.small.map, self.big.map
        for i in self.small.cartan.labels:
            if sb[emb[i]] not in self.inc.image or sb[emb[i]] != emb[s[i]]:
                raise IncompatibleInclusion(f"sigma of the big diagram does not restrict to sigma at node {i}")


def twisted_inclusion(small: FoldingDatum, big: FoldingDatum) -> TwistedInclusion:
    """Label-identity inclusion (signed labels for type A, ``1..n`` for type D)."""
    if small.cartan.family != big.cartan.family:
        raise IncompatibleInclusion("families differ")
    if not set(small.cartan.labels) <= set(big.cartan.labels):
        raise IncompatibleInclusion("small labels are not big labels")
    try:
        inc = DiagramInclusion(small.cartan, big.cartan, tuple((i, i) for i in small.cartan.labels))
    except Mismatch as exc:
        raise IncompatibleInclusion(str(exc)) from exc
    return TwistedInclusion(small, big, inc)


def res_sigma_I(tinc: TwistedInclusion, x: TwistedElement) -> TwistedElement:
    back = tinc.inc.back
    out = {}
    for m, c in x.terms.items():
        r = m.relabel(back)
        out[r] = out.get(r, 0) + c
    top = None if x.top is None else x.top.relabel(back)
    return TwistedElement(tinc.small, out, top)


def twisted_freeze(tinc: TwistedInclusion, y: TwistedElement, check=True) -> TwistedElement:
    """Keep the terms ``<=^sigma_I`` the top, then restrict to ``I``."""
    if not _same(y.datum.cartan, tinc.big.cartan):
        raise Mismatch(f"element over {y.datum.cartan}, inclusion expects {tinc.big.cartan}")
    if y.top is None or y.terms.get(y.top) != 1:
        raise NotPointed("twisted element has no top of coefficient 1")
    fd = tinc.big
    kept = {}
    for m, c in y.terms.items():
        if m == y.top:
            kept[m] = c
            continue
        fac = twisted_factor(fd, y.top / m)
        if fac is None:
            raise NotPointed(f"{m.to_text('Yo')} is not below the top")
        if all(i in tinc.inc.image for (i, _), x in fac.items() if x):
            kept[m] = c
    out = res_sigma_I(tinc, TwistedElement(fd, kept, y.top))
    if check:
        check_twisted_pointed(out)
    return out


def check_res_fold(tinc: TwistedInclusion, x: TorusElement) -> bool:
    """``res^sigma_I . phi_big = phi_small . res_I`` on a t-free element."""
    lhs = res_sigma_I(tinc, fold_phi(tinc.big, x))
    rhs = fold_phi(tinc.small, res_I(tinc.inc, x))
    return lhs.terms == rhs.terms


def check_freeze_fold(tinc: TwistedInclusion, y: PointedElement) -> bool:
    """Twisted freezing of the folding equals the folding of the freezing."""
    lhs = twisted_freeze(tinc, fold_phi(tinc.big, y), check=False)
    rhs = fold_phi(tinc.small, freeze(tinc.inc, y, check=False))
    return lhs == rhs


def check_frozen_simple(tinc: TwistedInclusion, g_small, g_big, m: Monomial, cap=DEFAULT_CAP) -> bool:
    """Twisted freezing sends the big twisted simple character to the small one."""
    lhs = twisted_freeze(tinc, chi_q_twisted(tinc.big, g_big, m, cap))
    rhs = chi_q_twisted(tinc.small, g_small, m.relabel(tinc.inc.back), cap)
    return lhs == rhs


__all__ = ["FoldingDatum", "folding_datum", "signed_labels", "TwistedElement", "twisted_a_monomial",
           "twisted_factor", "twisted_leq", "check_twisted_pointed", "fold_phi", "chi_q_twisted",
           "unfold_monomial", "unfold_expand", "sigma_act", "is_sigma_invariant", "unfolded_a",
           "umul", "utext", "TwistedInclusion", "twisted_inclusion", "res_sigma_I",
           "twisted_freeze", "check_res_fold", "check_freeze_fold", "check_frozen_simple"]
