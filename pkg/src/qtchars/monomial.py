"""Laurent monomials in the variables ``Y[i,p]`` and their A-factorizations."""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError


class Monomial:
    """Immutable Laurent monomial; ``items`` is a sorted tuple of ``((i, p), e)`` with ``e != 0``."""

    __slots__ = ("items", "_hash")

    def __init__(self, exps=None):
        if exps is None:
            items = ()
        elif isinstance(exps, dict):
            items = tuple(sorted((k, e) for k, e in exps.items() if e))
        else:
            acc = {}
            for k, e in exps:
                acc[k] = acc.get(k, 0) + e
            items = tuple(sorted((k, e) for k, e in acc.items() if e))
        self.items = items
        self._hash = hash(items)

    @classmethod
    def _raw(cls, items):
        m = object.__new__(cls)
        m.items = items
        m._hash = hash(items)
        return m

    @classmethod
    def y(cls, i, p, e=1):
        return cls._raw((((i, p), e),)) if e else ONE

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._hash == other._hash and self.items == other.items

    def __lt__(self, other):
        return self.items < other.items

    def __bool__(self):
        return True

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def as_dict(self):
        return dict(self.items)

    def exponent(self, i, p):
        for k, e in self.items:
            if k == (i, p):
                return e
        return 0

    def __mul__(self, other):
        if not other.items:
            return self
        if not self.items:
            return other
        acc = dict(self.items)
        for k, e in other.items:
            v = acc.get(k, 0) + e
            if v:
                acc[k] = v
            else:
                del acc[k]
        return Monomial._raw(tuple(sorted(acc.items())))

    def inverse(self):
        return Monomial._raw(tuple((k, -e) for k, e in self.items))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        if n == 0:
            return ONE
        return Monomial._raw(tuple((k, e * n) for k, e in self.items))

    def is_one(self):
        return not self.items

    def is_dominant(self):
        return all(e > 0 for _, e in self.items)

    def is_i_dominant(self, i):
        return all(e > 0 for (j, _), e in self.items if j == i)

    def nodes(self):
        return sorted({k[0] for k, _ in self.items})

    def part(self, i):
        """The factor of ``self`` involving only node ``i``."""
        return Monomial._raw(tuple(it for it in self.items if it[0][0] == i))

    def without(self, i):
        return Monomial._raw(tuple(it for it in self.items if it[0][0] != i))

    def spectral_range(self):
        if not self.items:
            return None
        ps = [k[1] for k, _ in self.items]
        return min(ps), max(ps)

    def shift(self, s):
        if s == 0:
            return self
        return Monomial._raw(tuple(((i, p + s), e) for (i, p), e in self.items))

    def relabel(self, mapping):
        """Relabel nodes through ``mapping``; nodes absent from ``mapping`` are dropped."""
        acc = {}
        for (i, p), e in self.items:
            if i in mapping:
                k = (mapping[i], p)
                acc[k] = acc.get(k, 0) + e
        return Monomial(acc)

    def degree(self):
        return sum(e for _, e in self.items)

    def fundamental_factors(self):
        """Expand a dominant monomial into a list of ``(i, p)`` with multiplicity."""
        out = []
        for (i, p), e in self.items:
            out.extend([(i, p)] * e)
        return out

    def to_text(self, prefix="Y"):
        if not self.items:
            return "1"
        parts = []
        for (i, p), e in self.items:
            parts.append(f"{prefix}[{i},{p}]" + ("" if e == 1 else f"^{e}"))
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Monomial({self.to_text()!r})"


ONE = Monomial()

_FACTOR = re.compile(r"(Yo|Y)\[(-?\d+),(-?\d+)\](?:\^(-?\d+))?")


def parse_monomial(text: str, prefix=None) -> Monomial:
    """Parse ``Y[1,0]Y[2,3]^-1`` (whitespace ignored, ``1`` is the unit).

    ``Yo[i,p]`` (orbit variables) is accepted too; mixing prefixes is an error.
    """
    s = re.sub(r"\s+", "", text)
    if s in ("", "1"):
        return ONE
    pos = 0
    acc = {}
    seen = set()
    for mt in _FACTOR.finditer(s):
        if mt.start() != pos:
            raise ParseError(f"cannot parse monomial {text!r} at offset {pos}")
        seen.add(mt.group(1))
        k = (int(mt.group(2)), int(mt.group(3)))
        e = 1 if mt.group(4) is None else int(mt.group(4))
        acc[k] = acc.get(k, 0) + e
        pos = mt.end()
    if pos != len(s):
        raise ParseError(f"cannot parse monomial {text!r} at offset {pos}")
    if len(seen) > 1 or (prefix is not None and seen != {prefix}):
        raise ParseError(f"unexpected variable names in {text!r}")
    return Monomial(acc)


def a_monomial(cartan, i, p) -> Monomial:
    """The simple-root analogue ``A[i,p]``."""
    di = cartan.di(i)
    acc = {(i, p - di): 1, (i, p + di): 1}
    for j in cartan.labels:
        if j == i:
            continue
        cji = cartan.cij(j, i)
        if cji == -1:
            shifts = (0,)
        elif cji == -2:
            shifts = (-1, 1)
        elif cji == -3:
            shifts = (-2, 0, 2)
        else:
            continue
        for s in shifts:
            acc[(j, p + s)] = acc.get((j, p + s), 0) - 1
    return Monomial(acc)


_ROOT_INV = {}


def _root_coordinates(cartan, v):
    """Express the weight of ``v`` in simple roots; ``None`` when not integral."""
    key = (cartan.family, cartan.rank, cartan.labels)
    inv = _ROOT_INV.get(key)
    if inv is None:
        from .cartan import _fraction_inverse
        # weight(A_i) is the i-th column of c, so coordinates solve  c x = w
        inv = _ROOT_INV[key] = _fraction_inverse([list(r) for r in cartan.c])
    w = [0] * cartan.rank
    for (i, _), e in v.items:
        w[cartan.index(i)] += e
    coords = {}
    for a, lab in enumerate(cartan.labels):
        x = sum((inv[a][b] * w[b] for b in range(cartan.rank)), Fraction(0))
        if x.denominator != 1:
            return None
        coords[lab] = int(x)
    return coords


def factor_generators(cartan, v: Monomial, generator=None, allowed=None):
    """Write ``v`` as a product of nonnegative powers of generators ``A[i,p]``.

    ``generator(i, p)`` defaults to :func:`a_monomial`; its unique highest
    spectral factor must be ``Y[i, p + d_i]``.  Returns ``{(i, p): x}`` or
    ``None`` when no such factorization exists (or it needs nodes outside
    ``allowed``).  The generators are algebraically independent, so the
    answer is unique; the greedy scan peels them off from the top spectral
    index downward.
    """
    if generator is None:
        generator = lambda i, p: a_monomial(cartan, i, p)  # noqa: E731
    if not v.items:
        return {}
    budget = _root_coordinates(cartan, v)
    if budget is None or any(x < 0 for x in budget.values()):
        return None
    if allowed is not None and any(x > 0 for i, x in budget.items() if i not in allowed):
        return None
    residual = dict(v.items)
    out = {}
    while residual:
        q = max(k[1] for k in residual)
        for (i, p), e in sorted(k for k in residual.items() if k[0][1] == q):
            if e < 0 or budget[i] < e:
                return None
            base = q - cartan.di(i)
            out[(i, base)] = out.get((i, base), 0) + e
            budget[i] -= e
            for k, f in generator(i, base).items:
                val = residual.get(k, 0) - e * f
                if val:
                    residual[k] = val
                else:
                    residual.pop(k, None)
    return out


def nakajima_leq(cartan, m: Monomial, m_prime: Monomial, restrict_to=None, with_factors=False):
    """``m <= m_prime``: ``m_prime / m`` is a monomial in the ``A[i,p]`` (``i`` in ``restrict_to``)."""
    fac = factor_generators(cartan, m_prime / m,
                            allowed=None if restrict_to is None else set(restrict_to))
    if with_factors:
        return fac is not None, fac
    return fac is not None


def a_degree(cartan, lower: Monomial, upper: Monomial):
    """Number of ``A^{-1}`` steps from ``upper`` down to ``lower`` (``None`` if not comparable)."""
    fac = factor_generators(cartan, upper / lower)
    if fac is None:
        return None
    return sum(fac.values())
