"""Command-line interface: ``qtchars <subcommand> ...``.

Exit status 0 on success, 1 on a domain error (its name is printed), 2 on a
usage error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import acceptance
from .cache import CacheKey, ResultCache
from .cartan import cartan_data, gamma_table
from .errors import Mismatch, QtCharsError
from .freeze import freeze, inclusion
from .kl import chi_q, chi_qt, e_t
from .monomial import parse_monomial
from .serialize import dumps, element_to_obj, render_text, twisted_to_obj
from .tfm import DEFAULT_CAP, f_t
from .torus import PointedElement
from .twisted import (TwistedElement, chi_q_twisted, folding_datum, is_sigma_invariant,
                      unfold_expand, utext)

log = logging.getLogger("qtchars")


@dataclass(frozen=True)
class RunConfig:
    cap: int = DEFAULT_CAP
    cache_dir: Path | None = None
    use_cache: bool = True
    fmt: str = "text"
    verbosity: int = 0
    threads: int = 1

    @classmethod
    def from_args(cls, ns):
        return cls(ns.cap, ns.cache_dir, not ns.no_cache, ns.format, ns.verbose, ns.threads)

    def cache(self):
        return ResultCache(self.cache_dir) if self.use_cache else None


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="closure size bound")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--cache-dir", type=Path, default=None,
                   help="cache directory (default: $QTCHARS_CACHE_DIR or ~/.cache/qtchars)")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def _typed(p, types="ABCD"):
    p.add_argument("--type", required=True, choices=list(types))
    p.add_argument("--rank", required=True, type=int)


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="qtchars", description="q- and (q,t)-characters of classical type")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", parents=[common], help="gamma_ij(u) and c'_ij(u)")
    _typed(p)
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--j", required=True, type=int)
    p.add_argument("--u", required=True, type=int)

    p = sub.add_parser("chi-ft", parents=[common], help="F_t(m)")
    _typed(p)
    p.add_argument("--monomial", required=True)
    p.add_argument("--t1", action="store_true", help="evaluate at t = 1")

    for name, text in [("chi-qt", "simple (q,t)-character"), ("chi-q", "simple q-character"),
                       ("dim", "dimension of the simple module")]:
        p = sub.add_parser(name, parents=[common], help=text)
        _typed(p)
        p.add_argument("--monomial", required=True)

    p = sub.add_parser("freeze", parents=[common], help="freeze a big-rank object to a smaller rank")
    p.add_argument("--from-type", required=True, choices=list("ABCD"))
    p.add_argument("--from-rank", required=True, type=int)
    p.add_argument("--to-rank", required=True, type=int)
    p.add_argument("--monomial", required=True)
    p.add_argument("--object", required=True, choices=["chiq", "chiqt", "ft", "et"])
    p.add_argument("--verify", action="store_true", help="recompute the small side and compare")

    p = sub.add_parser("fold", parents=[common], help="twisted q-character via folding")
    _typed(p, "AD")
    p.add_argument("--monomial", required=True)
    p.add_argument("--labeling", choices=["signed", "standard"], default="signed",
                   help="type A node labels (type D always uses 1..n)")
    p.add_argument("--unfold", action="store_true")
    p.add_argument("--verify-sigma", action="store_true")

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--filter", default=None, help="criterion number or name fragment")
    return parser


def _cached(cfg, key, compute):
    cache = cfg.cache()
    if cache is None:
        return compute()
    return cache.get_or_compute(key, compute)


def _ev1_obj(obj):
    out = dict(obj)
    terms = []
    for t in obj["terms"]:
        c = sum(v for _, v in t["c"]) if isinstance(t["c"], list) else t["c"]
        if c:
            terms.append({"m": t["m"], "c": c})
    out["terms"] = terms
    return out


def _emit(obj, cfg, out):
    if cfg.fmt == "json":
        out.write(dumps(obj) + "\n")
    else:
        out.write(render_text(obj) + "\n")


def _setup(ns):
    cd = cartan_data((ns.type, ns.rank))
    return cd, gamma_table(cd)


def cmd_gamma(ns, cfg, out):
    cd, g = _setup(ns)
    for lab in (ns.i, ns.j):
        if not cd.has_node(lab):
            raise Mismatch(f"node {lab} is not a node of {cd}")
    gam, cp = g.gamma_ij(ns.i, ns.j, ns.u), g.cprime(ns.i, ns.j, ns.u)
    if cfg.fmt == "json":
        out.write(dumps({"i": ns.i, "j": ns.j, "u": ns.u, "gamma": gam, "cprime": cp}) + "\n")
    else:
        out.write(f"{gam}\n{cp}\n")


def cmd_character(ns, cfg, out):
    cd, g = _setup(ns)
    m = parse_monomial(ns.monomial, "Y")
    if ns.command == "chi-ft":
        obj = _cached(cfg, CacheKey(cd.family, cd.rank, "ft", m.to_text()),
                      lambda: element_to_obj(f_t(g, m, cfg.cap)))
        if ns.t1:
            obj = _ev1_obj(obj)
    elif ns.command == "chi-qt":
        obj = _cached(cfg, CacheKey(cd.family, cd.rank, "chiqt", m.to_text()),
                      lambda: element_to_obj(chi_qt(g, m, cfg.cap)))
    else:
        obj = _cached(cfg, CacheKey(cd.family, cd.rank, "chiq", m.to_text()),
                      lambda: element_to_obj(chi_q(g, m, cfg.cap), t1=True, top=m))
        if ns.command == "dim":
            total = sum(t["c"] for t in obj["terms"])
            out.write(dumps({"dim": total}) + "\n" if cfg.fmt == "json" else f"{total}\n")
            return 0
    _emit(obj, cfg, out)
    return 0


_OBJECTS = {
    "ft": lambda g, m, cap: f_t(g, m, cap),
    "et": lambda g, m, cap: e_t(g, m, cap),
    "chiqt": lambda g, m, cap: chi_qt(g, m, cap),
    "chiq": lambda g, m, cap: PointedElement(m, chi_q(g, m, cap), check=False),
}


def cmd_freeze(ns, cfg, out):
    inc = inclusion(ns.from_type, ns.to_rank, ns.from_rank)
    gb, gs = gamma_table(inc.big), gamma_table(inc.small)
    m = parse_monomial(ns.monomial, "Y")
    make = _OBJECTS[ns.object]
    frozen = freeze(inc, make(gb, m, cfg.cap))
    t1 = ns.object == "chiq"
    obj = element_to_obj(frozen, t1=t1)
    status = 0
    if ns.verify:
        small = make(gs, m.relabel(inc.back), cfg.cap)
        same = small == frozen if not t1 else small.body == frozen.body
        obj["verified"] = same
        status = 0 if same else 1
    if cfg.fmt == "json":
        out.write(dumps(obj) + "\n")
    else:
        out.write(render_text(obj) + "\n")
        if ns.verify:
            out.write(f"verify: {'equal' if obj['verified'] else 'DIFFERENT'}\n")
    return status


def cmd_fold(ns, cfg, out):
    fd = folding_datum(ns.type, ns.rank, labeling=ns.labeling)
    g = gamma_table(fd.cartan)
    m = parse_monomial(ns.monomial, "Y")
    kind = "twisted" if ns.type == "D" or ns.labeling == "signed" else "twisted-standard"
    obj = _cached(cfg, CacheKey(ns.type, ns.rank, kind, m.to_text()),
                  lambda: twisted_to_obj(chi_q_twisted(fd, g, m, cfg.cap)))
    status = 0
    x = None
    if ns.unfold or ns.verify_sigma:
        x = TwistedElement(fd, {parse_monomial(t["m"], "Yo" if t["m"] != "1" else None): t["c"]
                                for t in obj["terms"]})
    if ns.unfold:
        ex = unfold_expand(fd, x)
        obj = dict(obj)
        obj["unfolded"] = [{"m": utext(u), "c": ex[u]} for u in sorted(ex)]
    if ns.verify_sigma:
        inv = is_sigma_invariant(fd, unfold_expand(fd, x))
        obj["sigma_invariant"] = inv
        status = 0 if inv else 1
    if cfg.fmt == "json":
        out.write(dumps(obj) + "\n")
    else:
        out.write(render_text(obj) + "\n")
        if ns.unfold:
            out.write("unfolded:\n" + "\n".join(f"{t['c']}  {t['m']}" for t in obj["unfolded"]) + "\n")
        if ns.verify_sigma:
            out.write(f"sigma-invariant: {'yes' if obj['sigma_invariant'] else 'NO'}\n")
    return status


def cmd_selftest(ns, out):
    results = acceptance.run_all(ns.filter, echo=lambda s: out.write(s + "\n"))
    if not results:
        out.write(f"no criterion matches {ns.filter!r}\n")
        return 2
    failed = [r for r in results if not r.ok]
    out.write(f"{len(results) - len(failed)}/{len(results)} criteria passed\n")
    return 1 if failed else 0


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if ns.command == "selftest":
        return cmd_selftest(ns, out)
    cfg = RunConfig.from_args(ns)
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2))
    try:
        if ns.command == "gamma":
            cmd_gamma(ns, cfg, out)
            return 0
        if ns.command == "freeze":
            return cmd_freeze(ns, cfg, out)
        if ns.command == "fold":
            return cmd_fold(ns, cfg, out)
        return cmd_character(ns, cfg, out)
    except QtCharsError as exc:
        sys.stderr.write(f"error: {exc.name}: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
