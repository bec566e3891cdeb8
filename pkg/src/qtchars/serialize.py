"""JSON and text renderings of characters.

The JSON object is the interchange value: the CLI prints it, the on-disk
cache stores it, and the text form is rendered from it.
"""
from __future__ import annotations

import json

from .cartan import cartan_data
from .laurent import ptext
from .monomial import parse_monomial
from .tfm import a_height
from .torus import PointedElement, TorusElement


def canonical_order(cartan, top, monomials):
    """A-height below ``top``, then the sorted factor tuple."""
    def key(m):
        try:
            h = a_height(cartan, top / m)
        except ValueError:
            h = 0
        return (h, m.items)
    return sorted(monomials, key=key)


def element_to_obj(y, t1=False, top=None) -> dict:
    """``PointedElement`` or ``TorusElement`` to the JSON schema."""
    if isinstance(y, PointedElement):
        top, body = y.top, y.body
    else:
        body = y
    cartan = body.cartan
    terms = []
    order = canonical_order(cartan, top, body.terms) if top is not None else sorted(body.terms)
    for m in order:
        c = body.terms[m]
        if t1:
            if set(c) - {0}:
                raise ValueError("t-dependent coefficient in a t = 1 rendering")
            cj = c.get(0, 0)
        else:
            cj = [[k, c[k]] for k in sorted(c)]
        terms.append({"m": m.to_text(), "c": cj})
    obj = {"cartan": {"family": cartan.family, "rank": cartan.rank},
           "top": None if top is None else top.to_text(), "terms": terms}
    if cartan.labels != tuple(range(1, cartan.rank + 1)):
        obj["cartan"]["labels"] = list(cartan.labels)
    return obj


def twisted_to_obj(x) -> dict:
    fd = x.datum
    cartan = fd.cartan
    order = canonical_order(cartan, x.top, x.terms) if x.top is not None else sorted(x.terms)
    obj = {"cartan": {"family": cartan.family, "rank": cartan.rank, "labels": list(cartan.labels)},
           "orbit": True,
           "top": None if x.top is None else x.top.to_text("Yo"),
           "terms": [{"m": m.to_text("Yo"), "c": x.terms[m]} for m in order]}
    return obj


def obj_to_element(obj) -> PointedElement:
    """Inverse of :func:`element_to_obj` for untwisted objects."""
    fam, rank = obj["cartan"]["family"], obj["cartan"]["rank"]
    labels = obj["cartan"].get("labels")
    cartan = cartan_data((fam, rank), labels=labels)
    terms = {}
    for t in obj["terms"]:
        m = parse_monomial(t["m"], "Y" if t["m"] != "1" else None)
        c = t["c"]
        terms[m] = {0: c} if isinstance(c, int) else {int(k): int(v) for k, v in c}
    body = TorusElement(cartan, terms)
    top = obj.get("top")
    if top is None:
        return body
    return PointedElement(parse_monomial(top), body, check=False)


def dumps(obj) -> str:
    """Byte-stable JSON text."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_text(obj) -> str:
    """One term per line, ``coefficient  monomial``; coefficients as Laurent polynomials in t."""
    lines = []
    for t in obj["terms"]:
        c = t["c"]
        if isinstance(c, int):
            cs = str(c)
        else:
            cs = ptext({k: v for k, v in c})
            if len(c) > 1:
                cs = f"({cs})"
        lines.append(f"{cs}  {t['m']}")
    return "\n".join(lines)
