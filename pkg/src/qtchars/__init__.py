"""Exact q-characters and (q,t)-characters of simple modules of quantum loop
algebras of classical type, freezing operators between ranks, and twisted
q-characters of types A and D obtained by folding."""

from .cartan import CartanData, GammaTable, LieType, cartan_data, gamma_table
from .errors import QtCharsError
from .freeze import DiagramInclusion, freeze, inclusion, res_I
from .kl import chi_q, chi_qt, dim_simple, e_t, kl_solve
from .laurent import HalfTLaurent
from .monomial import ONE, Monomial, a_monomial, nakajima_leq, parse_monomial
from .sl2core import f_it
from .tfm import dominance_closure, f_classical, f_t
from .torus import PointedElement, TorusElement, bar, ev_t1, star_product
from .twisted import chi_q_twisted, fold_phi, folding_datum, twisted_freeze, unfold_expand

__version__ = "0.1.0"
