"""Planar monomials over binary finite fields GF(2^r)."""

from .gf2r import (CapabilityError, DomainError, FieldCtx, UsageError, build_field)
from .planarity import (MonomialSpec, PlanarityVerdict, is_planar_monomial,
                        is_planar_quadratic, is_planar_table, linearized_bijective)
from .polyring import Poly, min_poly_over_subfield
from .search import SearchResult, search_all_degrees, search_quadratic
from .theorems import VerifierReport

__version__ = "0.1.0"
