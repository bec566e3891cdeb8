"""Laurent polynomials in ``t^{1/2}`` with integer coefficients.

Exponents are stored in half-units: the key ``k`` stands for ``t^{k/2}``.
The ``p*`` functions work on plain ``{k: c}`` dictionaries and are what the
inner loops use; :class:`HalfTLaurent` is the immutable public wrapper.
"""
from __future__ import annotations


def padd(a, b, scale=1, shift=0):
    """Return ``a + scale * t^{shift/2} * b`` as a new dict."""
    out = dict(a)
    for k, v in b.items():
        k += shift
        w = out.get(k, 0) + scale * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def piadd(acc, b, scale=1, shift=0):
    """In-place ``acc += scale * t^{shift/2} * b``."""
    for k, v in b.items():
        k += shift
        w = acc.get(k, 0) + scale * v
        if w:
            acc[k] = w
        else:
            del acc[k]


def pmul(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = k1 + k2
            w = out.get(k, 0) + v1 * v2
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def pshift(a, shift):
    if not shift:
        return a
    return {k + shift: v for k, v in a.items()}


def pbar(a):
    return {-k: v for k, v in a.items()}


def pev1(a):
    return sum(a.values())


def pis_bar_invariant(a):
    return all(a.get(-k, 0) == v for k, v in a.items())


def ptext(a):
    if not a:
        return "0"
    parts = []
    for k in sorted(a, reverse=True):
        c = a[k]
        if k == 0:
            mono = ""
        elif k == 2:
            mono = "t"
        elif k % 2 == 0:
            mono = f"t^{k // 2}"
        else:
            mono = f"t^({k}/2)"
        if mono == "":
            term = str(abs(c))
        elif abs(c) == 1:
            term = mono
        else:
            term = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, term))
    head_sign, head = parts[0]
    s = ("-" if head_sign == "-" else "") + head
    for sign, term in parts[1:]:
        s += f" {sign} {term}"
    return s


class HalfTLaurent:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs} if coeffs else {}
        else:
            coeffs = {int(k): int(v) for k, v in dict(coeffs).items() if v}
        self.coeffs = coeffs

    @classmethod
    def t_power(cls, half_exp, coeff=1):
        return cls({half_exp: coeff})

    def __add__(self, other):
        other = _coerce(other)
        return HalfTLaurent(padd(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return HalfTLaurent(padd(self.coeffs, other.coeffs, -1))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return HalfTLaurent({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        other = _coerce(other)
        return HalfTLaurent(pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = HalfTLaurent(other)
        return isinstance(other, HalfTLaurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def shift(self, half_exp):
        return HalfTLaurent(pshift(self.coeffs, half_exp))

    def bar(self):
        return HalfTLaurent(pbar(self.coeffs))

    def ev1(self):
        return pev1(self.coeffs)

    def is_bar_invariant(self):
        return pis_bar_invariant(self.coeffs)

    def is_constant(self):
        return all(k == 0 for k in self.coeffs)

    def items(self):
        return sorted(self.coeffs.items())

    def __str__(self):
        return ptext(self.coeffs)

    def __repr__(self):
        return f"HalfTLaurent({ptext(self.coeffs)!r})"


def _coerce(x):
    if isinstance(x, HalfTLaurent):
        return x
    if isinstance(x, int):
        return HalfTLaurent(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to HalfTLaurent")


T = HalfTLaurent.t_power(2)
T_HALF = HalfTLaurent.t_power(1)
