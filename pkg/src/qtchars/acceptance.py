"""The acceptance suite, shared by ``qtchars selftest`` and the test-suite.

Each criterion returns a :class:`Result`; ``run_all`` prints one line per
criterion.  Random samples come from fixed seeds so runs are reproducible.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from math import comb

from .cartan import cartan_data, gamma_table
from .errors import CapExceeded
from .freeze import freeze, inclusion
from .kl import chi_q, chi_qt, dim_simple, e_t, ordered_factorization
from .monomial import ONE, Monomial, a_monomial
from .tfm import dominance_closure, f_classical, f_t
from .torus import PointedElement, ev_t1, gamma_pair, is_bar_invariant
from .twisted import (check_freeze_fold, check_frozen_simple, check_res_fold, check_twisted_pointed,
                      chi_q_twisted, folding_datum, is_sigma_invariant, twisted_inclusion,
                      unfold_expand)

Y = Monomial.y


@dataclass
class Result:
    number: int
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"criterion {self.number} [{self.name}]: {status} ({self.detail}; {self.seconds:.1f}s)"


def _types_up_to_rank(n):
    out = [("A", r) for r in range(1, n + 1)]
    out += [(f, r) for f in "BC" for r in range(2, n + 1)]
    out += [("D", r) for r in range(4, n + 1)]
    return out


def random_dominant(rng, labels, max_factors=3, lo=0, hi=6, min_factors=1):
    m = ONE
    for _ in range(rng.randint(min_factors, max_factors)):
        m = m * Y(rng.choice(labels), rng.randint(lo, hi))
    return m


def _delta(a, b):
    return 1 if a == b else 0


def criterion_gamma():
    """Closed forms for gamma on A-monomials through the c' series."""
    checked = 0
    bad = []
    for t in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
              ("C", 2), ("C", 3), ("C", 4), ("D", 4)]:
        cd = cartan_data(t)
        g = gamma_table(cd)
        for i in cd.labels:
            di = cd.di(i)
            for j in cd.labels:
                dc = di * cd.cij(i, j)
                for u in range(-24, 25):
                    ai, aj, yj = a_monomial(cd, i, u), a_monomial(cd, j, 0), Y(j, 0)
                    want_aa = 2 * (_delta(u, dc) - _delta(u, -dc))
                    want_ay = 2 * _delta(i, j) * (_delta(u, di) - _delta(u, -di))
                    checked += 2
                    if gamma_pair(g, ai, aj) != want_aa or gamma_pair(g, ai, yj) != want_ay:
                        bad.append((t, i, j, u))
    return not bad, f"{checked} values, {len(bad)} mismatches"


def criterion_fundamentals():
    """chi_qt = F_t = E_t on fundamentals, and t = 1 equals the classical recursion."""
    count = 0
    bad = []
    for t in _types_up_to_rank(4):
        cd = cartan_data(t)
        g = gamma_table(cd)
        for i in cd.labels:
            for p in (0, 3):
                y = Y(i, p)
                a, b, c = chi_qt(g, y), f_t(g, y), e_t(g, y)
                same = a.body == b.body == c.body and a.top == b.top == c.top == y
                classical = ev_t1(b.body) == f_classical(g, y)
                count += 1
                if not (same and classical):
                    bad.append((t, i, p))
    return not bad, f"{count} fundamentals, failures {bad}"


def criterion_rank_one_kl():
    cd = cartan_data(("A", 1))
    g = gamma_table(cd)
    m = Y(1, 0) * Y(1, 2)
    diff = e_t(g, m).body - chi_qt(g, m).body
    want = e_t(g, ONE).body.scale(1, -2)
    return diff == want, f"E_t - chi_qt = {diff.terms}"


def _check_canonical(g, m):
    y, exp = chi_qt(g, m, with_expansion=True)
    problems = []
    if not is_bar_invariant(y.body):
        problems.append("bar")
    try:
        y.validate()
    except Exception as exc:  # NotPointed
        problems.append(f"pointed: {exc}")
    for mp, q in exp.terms.items():
        if mp == m:
            if q != {0: 1}:
                problems.append("Q[m,m]")
        elif any(k >= 0 or k % 2 for k in q):
            problems.append(f"Q[{mp}] = {q}")
    for mm, c in ev_t1(y.body).terms.items():
        if c[0] <= 0:
            problems.append(f"ev at {mm}")
    return problems


def criterion_canonical(samples=50, seed=4):
    rng = random.Random(seed)
    report = []
    ok = True
    for t in [("A", 3), ("B", 3), ("C", 3), ("D", 4)]:
        cd = cartan_data(t)
        g = gamma_table(cd)
        fails = 0
        for _ in range(samples):
            m = random_dominant(rng, cd.labels)
            if _check_canonical(g, m):
                fails += 1
        ok &= fails == 0
        report.append(f"{t[0]}{t[1]}: {samples - fails}/{samples}")
    return ok, ", ".join(report)


def _tied_monomials(cd, rng, count):
    """Dominant monomials with at least three distinct nodes at one spectral index."""
    out = []
    k = min(3, cd.rank)
    while len(out) < count:
        p = rng.randint(0, 4)
        nodes = rng.sample(list(cd.labels), k)
        m = ONE
        for i in nodes:
            m = m * Y(i, p)
        if rng.random() < 0.5:
            m = m * Y(rng.choice(cd.labels), rng.randint(0, 4))
        if m not in out:
            out.append(m)
    return out


def _orderings(m, howmany):
    """Admissible ordered factorizations (non-increasing p), varying the order within ties."""
    facs = ordered_factorization(m)
    groups = [list(gr) for _, gr in itertools.groupby(facs, key=lambda ip: ip[1])]
    perms = [list(itertools.permutations(gr)) for gr in groups]
    out = []
    for combo in itertools.product(*perms):
        seq = [f for gr in combo for f in gr]
        if seq not in out:
            out.append(seq)
        if len(out) >= howmany:
            break
    return out


def criterion_well_defined(per_type=10, seed=5):
    rng = random.Random(seed)
    report = []
    ok = True
    for t in [("A", 3), ("B", 3), ("C", 3), ("D", 4)]:
        cd = cartan_data(t)
        g = gamma_table(cd)
        fails = 0
        for m in _tied_monomials(cd, rng, per_type):
            orders = _orderings(m, 3)
            vals = [e_t(g, m, factors=f).body for f in orders]
            same_e = len(orders) >= 3 and all(v == vals[0] for v in vals)
            same_f = f_t(g, m, order="lex").body == f_t(g, m, order="revlex").body
            fails += not (same_e and same_f)
        ok &= fails == 0
        report.append(f"{t[0]}{t[1]}: {per_type - fails}/{per_type}")
    return ok, ", ".join(report)


def _freeze_pointed_t1(inc, y):
    return PointedElement(y.top, ev_t1(y.body), check=False)


def criterion_freezing(per_inclusion=10, seed=6):
    rng = random.Random(seed)
    report = []
    ok = True
    for fam, n, N in [("A", 2, 4), ("B", 2, 3), ("C", 2, 4), ("D", 4, 5)]:
        inc = inclusion(fam, n, N)
        gs, gb = gamma_table(inc.small), gamma_table(inc.big)
        fails = 0
        for _ in range(per_inclusion):
            m = random_dominant(rng, inc.big.labels, max_factors=3, hi=5)
            r = m.relabel(inc.back)
            checks = [
                freeze(inc, f_t(gb, m)) == f_t(gs, r),
                freeze(inc, e_t(gb, m)) == e_t(gs, r),
                freeze(inc, chi_qt(gb, m)) == chi_qt(gs, r),
                freeze(inc, PointedElement(m, chi_q(gb, m), check=False)).body == chi_q(gs, r),
            ]
            y = chi_qt(gb, m)
            lhs = ev_t1(freeze(inc, y).body)
            rhs = freeze(inc, _freeze_pointed_t1(inc, y)).body
            checks.append(lhs == rhs)
            fails += not all(checks)
        ok &= fails == 0
        report.append(f"{fam}{n}<{fam}{N}: {per_inclusion - fails}/{per_inclusion}")
    return ok, ", ".join(report)


def criterion_dimensions():
    parts = []
    ok = True
    g = gamma_table(cartan_data(("A", 3)))
    dims = tuple(dim_simple(g, Y(i, 0)) for i in (1, 2, 3))
    want = tuple(comb(4, i) for i in (1, 2, 3))
    ok &= dims == want
    parts.append(f"A3 fundamentals {dims}")
    g = gamma_table(cartan_data(("A", 1)))
    strings = []
    for k in range(1, 6):
        m = ONE
        for s in range(k):
            m = m * Y(1, 2 * s)
        strings.append(dim_simple(g, m))
    ok &= strings == [k + 1 for k in range(1, 6)]
    parts.append(f"A1 strings {strings}")
    g = gamma_table(cartan_data(("B", 2)))
    b2 = {dim_simple(g, Y(i, 0)) for i in (1, 2)}
    ok &= b2 == {4, 5}
    parts.append(f"B2 fundamentals {sorted(b2)}")
    for t in [("A", 3), ("B", 2)]:
        g = gamma_table(cartan_data(t))
        for i in g.cartan.labels:
            ok &= chi_q(g, Y(i, 0)) == f_classical(g, Y(i, 0))
    return ok, "; ".join(parts)


def criterion_twisted(per_type=10, per_inclusion=5, seed=8):
    rng = random.Random(seed)
    report = []
    ok = True
    for fam, n in [("A", 3), ("A", 4), ("D", 4)]:
        fd = folding_datum(fam, n)
        g = gamma_table(fd.cartan)
        fails = 0
        for _ in range(per_type):
            m = random_dominant(rng, fd.cartan.labels)
            x = chi_q_twisted(fd, g, m)
            good = (is_sigma_invariant(fd, unfold_expand(fd, x))
                    and x.total() == dim_simple(g, m)
                    and check_twisted_pointed(x))
            fails += not good
        ok &= fails == 0
        report.append(f"({fam}{n},2): {per_type - fails}/{per_type}")
    for fam, n, N in [("A", 3, 5), ("D", 4, 5)]:
        tinc = twisted_inclusion(folding_datum(fam, n), folding_datum(fam, N))
        gs, gb = gamma_table(tinc.small.cartan), gamma_table(tinc.big.cartan)
        fails = 0
        for _ in range(per_inclusion):
            m = random_dominant(rng, tinc.big.cartan.labels, hi=5)
            y = PointedElement(m, chi_q(gb, m), check=False)
            good = (check_res_fold(tinc, y.body) and check_freeze_fold(tinc, y)
                    and check_frozen_simple(tinc, gs, gb, m))
            fails += not good
        ok &= fails == 0
        report.append(f"{fam}{n}<{fam}{N}: {per_inclusion - fails}/{per_inclusion}")
    return ok, ", ".join(report)


SCALE_MONOMIAL = "Y[1,1]Y[1,8]Y[2,5]Y[2,8]"


def criterion_scale():
    from .monomial import parse_monomial
    g = gamma_table(cartan_data(("C", 3)))
    m = parse_monomial(SCALE_MONOMIAL)
    t0 = time.time()
    try:
        y = chi_qt(g, m)
    except CapExceeded as exc:
        return False, f"cap exceeded: {exc}"
    closure = len(dominance_closure(g, m))
    return True, (f"C3 {SCALE_MONOMIAL}: closure {closure}, {len(y)} terms, "
                  f"{time.time() - t0:.1f}s wall")


CRITERIA = [
    (1, "gamma", criterion_gamma),
    (2, "fundamentals", criterion_fundamentals),
    (3, "rank-one-kl", criterion_rank_one_kl),
    (4, "canonical-basis", criterion_canonical),
    (5, "well-defined", criterion_well_defined),
    (6, "freezing", criterion_freezing),
    (7, "dimensions", criterion_dimensions),
    (8, "twisted", criterion_twisted),
    (9, "scale", criterion_scale),
]


def run_criterion(number) -> Result:
    for k, name, fn in CRITERIA:
        if k == number:
            t0 = time.time()
            ok, detail = fn()
            return Result(k, name, bool(ok), detail, time.time() - t0)
    raise KeyError(number)


def select(filter_text=None):
    if not filter_text:
        return [k for k, _, _ in CRITERIA]
    out = []
    for k, name, _ in CRITERIA:
        if filter_text == str(k) or filter_text in name:
            out.append(k)
    return out


def run_all(filter_text=None, echo=print):
    results = []
    for k in select(filter_text):
        r = run_criterion(k)
        echo(r.line())
        results.append(r)
    return results
