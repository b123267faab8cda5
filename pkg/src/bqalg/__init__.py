"""Exact PBW checks, normal forms and classification of bi-quadratic algebras."""

from .field import GF, QQ, Fp, PowerClass, field_from_spec
from .freealg import NcPoly, parse_expr
from .rewrite import BqPresentation, overlap_check, pbw_consistent, reduce, reduce_in_order
from .consistency3 import Bq3, is_consistent3, residues
from .transform import MonomialAffineTransform, apply, compose, inverse, kill_ab, kill_alpha

__version__ = "0.1.0"
