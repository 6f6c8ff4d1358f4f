"""Spin-1/2 spherical spinors, vector-operator actions on them, and a
machine-checked catalog of their recurrence and differential relations."""

from .indices import HalfInt, InvalidIndexError, SpinorIndex, jl_to_kappa, kappa_to_j, kappa_to_l, mu_range
from .relations import catalog, eval_rhs, get_entry, rhs_coefficient
from .spectral import RadialJet, SpectralField, apply_operator_expr, field_from_spinor
from .spinors import SpinorValue, eval_spinor

__version__ = "0.1.0"

__all__ = [
    "HalfInt",
    "InvalidIndexError",
    "SpinorIndex",
    "jl_to_kappa",
    "kappa_to_j",
    "kappa_to_l",
    "mu_range",
    "catalog",
    "eval_rhs",
    "get_entry",
    "rhs_coefficient",
    "RadialJet",
    "SpectralField",
    "apply_operator_expr",
    "field_from_spinor",
    "SpinorValue",
    "eval_spinor",
]
