"""The t-analogue of the Frenkel-Mukhin algorithm and its classical t = 1 counterpart."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cartan import _fraction_inverse
from .errors import CapExceeded, NotDominant, WellDefinednessViolation
from .laurent import piadd
from .monomial import Monomial
from .sl2core import f_i_classical, f_it_terms
from .torus import PointedElement, TorusElement

DEFAULT_CAP = 200_000

_HEIGHT_WEIGHTS = {}


def _height_weights(cartan):
    """Column sums of ``C^{-1}`` over a common denominator: ``({node: int}, denominator)``."""
    key = (cartan.family, cartan.rank, cartan.labels)
    w = _HEIGHT_WEIGHTS.get(key)
    if w is None:
        inv = _fraction_inverse([list(r) for r in cartan.c])
        n = cartan.rank
        cols = {lab: sum((inv[a][b] for a in range(n)), Fraction(0)) for b, lab in enumerate(cartan.labels)}
        den = 1
        for v in cols.values():
            den = den * v.denominator // gcd(den, v.denominator)
        w = _HEIGHT_WEIGHTS[key] = ({lab: int(v * den) for lab, v in cols.items()}, den)
    return w


def a_height(cartan, v: Monomial) -> int:
    """Total number of ``A`` factors of ``v``, read off from its weight."""
    w, den = _height_weights(cartan)
    h, r = divmod(sum(w[i] * e for (i, _), e in v.items), den)
    if r:
        raise ValueError(f"{v} is not in the root lattice")
    return h


def order_key(order, degree, m):
    if order == "lex":
        return (degree, m.items)
    if order == "revlex":
        return (degree, tuple((k, -e) for k, e in reversed(m.items)), len(m.items))
    raise ValueError(f"unknown total order {order!r}")


@dataclass
class ClosureSet:
    seed: Monomial
    members: list
    degrees: list
    order: str = "lex"

    def __len__(self):
        return len(self.members)

    def index(self):
        return {m: k for k, m in enumerate(self.members)}


def _require_dominant(m):
    if not m.is_dominant():
        raise NotDominant(f"{m} is not dominant")


def _closure(cartan, m, cap, order, expand, keep=None):
    seen = {m: 0}
    stack = [m]
    while stack:
        cur = stack.pop()
        for i in cartan.labels:
            if not cur.is_i_dominant(i):
                continue
            terms = expand(cur, i)
            if keep is not None:
                keep[(cur, i)] = terms
            for mm in terms:
                if mm not in seen:
                    seen[mm] = a_height(cartan, m / mm)
                    if len(seen) > cap:
                        raise CapExceeded(cap)
                    stack.append(mm)
    members = sorted(seen, key=lambda x: order_key(order, seen[x], x))
    if members[0] != m:
        raise AssertionError("seed is not first in the closure order")
    return ClosureSet(m, members, [seen[x] for x in members], order)


def dominance_closure(g, m: Monomial, cap: int = DEFAULT_CAP, order: str = "lex",
                      keep=None) -> ClosureSet:
    """The set ``D(m)`` sorted by A-height from ``m`` then by ``order``.

    ``keep``, if given, receives the rank-one expansions met on the way.
    """
    _require_dominant(m)
    return _closure(g.cartan, m, cap, order, lambda cur, i: f_it_terms(g, cur, i), keep)


def _normalize(m):
    rng = m.spectral_range()
    return (m, 0) if rng is None else (m.shift(-rng[0]), rng[0])


def f_t(g, m: Monomial, cap: int = DEFAULT_CAP, order: str = "lex") -> PointedElement:
    """``F_t(m)``: the unique ``m``-pointed element of the quantum Grothendieck ring
    whose only dominant monomial is ``m``."""
    _require_dominant(m)
    base, s = _normalize(m)
    cache = g.cache("f_t")
    key = (base, order)
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = _f_t(g, base, cap, order)
    return hit.shift(s)


def _f_t(g, m, cap, order):
    cartan = g.cartan
    expansions = {}
    closure = dominance_closure(g, m, cap, order, keep=expansions)
    pos = closure.index()
    nodes = cartan.labels
    acc = {}  # (member, node) -> s_i accumulator
    out = {}
    for k, mk in enumerate(closure.members):
        si = {i: acc.pop((mk, i), {}) for i in nodes}
        if k == 0:
            s = {0: 1}
            si = {i: {} for i in nodes}
        elif mk.is_dominant():
            s = {}
        else:
            bad = [i for i in nodes if not mk.is_i_dominant(i)]
            s = si[bad[0]]
            for j in bad[1:]:
                if si[j] != s:
                    raise WellDefinednessViolation(
                        f"s_{bad[0]}({mk}) = {s} but s_{j}({mk}) = {si[j]}")
        if s:
            out[mk] = s
        for i in nodes:
            if not mk.is_i_dominant(i):
                continue
            w = dict(s)
            piadd(w, si[i], -1)
            if not w:
                continue
            for mm, c in expansions.pop((mk, i)).items():
                if mm == mk:
                    continue
                if mm not in pos or pos[mm] <= k:
                    raise AssertionError(f"{mm} missing from D({m}) or out of order")
                slot = acc.setdefault((mm, i), {})
                for k1, v1 in w.items():
                    piadd(slot, c, v1, k1)
    return PointedElement(m, TorusElement(cartan, out, clean=False), check=False)


def f_classical(g, m: Monomial, cap: int = DEFAULT_CAP) -> TorusElement:
    """The same recursion with integer coefficients (t = 1), on its own code path.

    Meant as an oracle for fundamental q-characters, not as a general simple
    q-character.
    """
    _require_dominant(m)
    cartan = g.cartan
    cache = g.cache("f_classical")
    base, shift = _normalize(m)
    hit = cache.get(base)
    if hit is not None:
        return hit.shift(shift)
    expand = lambda cur, i: f_i_classical(cartan, cur, i)  # noqa: E731
    closure = _closure(cartan, base, cap, "lex", expand)
    nodes = cartan.labels
    acc = {}
    out = {}
    for k, mk in enumerate(closure.members):
        si = {i: acc.pop((mk, i), 0) for i in nodes}
        if k == 0:
            s, si = 1, {i: 0 for i in nodes}
        elif mk.is_dominant():
            s = 0
        else:
            bad = [i for i in nodes if not mk.is_i_dominant(i)]
            s = si[bad[0]]
            if any(si[j] != s for j in bad):
                raise WellDefinednessViolation(f"classical s_i disagree at {mk}")
        if s:
            out[mk] = {0: s}
        for i in nodes:
            if mk.is_i_dominant(i) and s - si[i]:
                for mm, c in f_i_classical(cartan, mk, i).items():
                    if mm != mk:
                        acc[(mm, i)] = acc.get((mm, i), 0) + (s - si[i]) * c
    res = cache[base] = TorusElement(cartan, out, clean=False)
    return res.shift(shift)
