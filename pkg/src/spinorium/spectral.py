"""Spectral operator engine.

A field is a finite sum over keys (spin, l, m, k, p), each carrying a complex
amplitude times the radial form F^(k)(r) r^(-p). Angular operators act on
(spin, l, m); d/dr and 1/r act on (k, p). A RadialJet folds the radial forms
into plain numbers at a single radius.

All vector algebra is done in Cartesian components (axis 0, 1, 2 = x, y, z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .expr import CONSTANT_VERSORS, Atom, Cross, Dot, OperatorExpr, Product, StructuralError
from .harmonics import HarmonicIndex, direction_cosine_action, eval_ylm, ladder_action
from .indices import SpinorIndex
from .spinors import spinor_to_product_basis

__all__ = [
    "JetDepthError",
    "RadialJet",
    "SpectralField",
    "VectorField",
    "MAX_JET_DEPTH",
    "field_from_spinor",
    "apply_sigma",
    "apply_L",
    "apply_J",
    "apply_n",
    "apply_nabla",
    "d_dr",
    "inv_r",
    "apply_vector",
    "apply_scalar",
    "apply_component",
    "apply_operator_expr",
]

MAX_JET_DEPTH = 2
PRUNE = 1e-300
SQRT1_2 = 1 / math.sqrt(2)

# nonzero Levi-Civita entries eps[i][j][k] as (i, j, k, sign)
LEVI_CIVITA = [
    (0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
    (0, 2, 1, -1), (2, 1, 0, -1), (1, 0, 2, -1),
]
_AXES = {"x": 0, "y": 1, "z": 2, 0: 0, 1: 1, 2: 2}


class JetDepthError(ValueError):
    """A radial derivative beyond what the jet carries was requested."""


@dataclass(frozen=True)
class RadialJet:
    """F and its first two radial derivatives at radius r. None = unavailable."""

    r: float
    f: float
    f1: float | None = None
    f2: float | None = None

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError(f"radius must be positive, got {self.r}")

    def derivative(self, k: int) -> float:
        value = (self.f, self.f1, self.f2)[k] if k <= MAX_JET_DEPTH else None
        if value is None:
            raise JetDepthError(f"jet does not carry d^{k}F/dr^{k}")
        return value

    @classmethod
    def from_function(cls, func, r: float) -> RadialJet:
        """func(r) -> (F, F', F'')."""
        f, f1, f2 = func(r)
        return cls(r, f, f1, f2)


UNIT_JET = RadialJet(1.0, 1.0, 0.0, 0.0)


class SpectralField:
    """Immutable finite spectral sum; see module docstring for the key layout."""

    __slots__ = ("terms", "jet")

    def __init__(self, terms=None, jet: RadialJet | None = None):
        clean = {}
        for key, amp in (terms or {}).items():
            if abs(amp) >= PRUNE:
                clean[key] = complex(amp)
        self.terms: dict[tuple[int, int, int, int, int], complex] = clean
        self.jet = jet

    def __repr__(self):
        return f"SpectralField({len(self.terms)} terms)"

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: SpectralField) -> SpectralField:
        out = dict(self.terms)
        for key, amp in other.terms.items():
            out[key] = out.get(key, 0j) + amp
        return SpectralField(out, self.jet or other.jet)

    def __sub__(self, other: SpectralField) -> SpectralField:
        return self + other.scale(-1)

    def scale(self, c: complex) -> SpectralField:
        if c == 0:
            return SpectralField({}, self.jet)
        return SpectralField({k: c * a for k, a in self.terms.items()}, self.jet)

    __rmul__ = scale

    def with_jet(self, jet: RadialJet) -> SpectralField:
        return SpectralField(self.terms, jet)

    @property
    def l_max(self) -> int:
        return max((key[1] for key in self.terms), default=-1)

    def radial_order(self) -> int:
        return max((key[3] for key in self.terms), default=0)

    def coefficients(self, jet: RadialJet | None = None) -> dict[tuple[int, int, int], complex]:
        """Fold the radial forms at the jet: {(spin, l, m): amplitude}."""
        jet = jet or self.jet or UNIT_JET
        out: dict[tuple[int, int, int], complex] = {}
        for (s, l, m, k, p), amp in self.terms.items():
            val = amp * jet.derivative(k) * jet.r ** (-p)
            out[(s, l, m)] = out.get((s, l, m), 0j) + val
        return out

    def evaluate(self, theta, phi, jet: RadialJet | None = None) -> np.ndarray:
        """Pointwise values, shape (2, ...) for the up/down components."""
        theta = np.asarray(theta, dtype=float)
        phi = np.asarray(phi, dtype=float)
        out = np.zeros((2,) + np.broadcast(theta, phi).shape, dtype=complex)
        for (s, l, m), amp in self.coefficients(jet).items():
            out[s] += amp * eval_ylm(l, m, theta, phi)
        return out

    def max_abs_difference(self, other: SpectralField, jet: RadialJet | None = None) -> float:
        a = self.coefficients(jet)
        b = other.coefficients(jet)
        return max((abs(a.get(k, 0j) - b.get(k, 0j)) for k in a.keys() | b.keys()), default=0.0)


@dataclass(frozen=True)
class VectorField:
    x: SpectralField
    y: SpectralField
    z: SpectralField

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, axis: int) -> SpectralField:
        return (self.x, self.y, self.z)[axis]


def _accumulate(out: dict, key, amp: complex) -> None:
    out[key] = out.get(key, 0j) + amp


def field_from_spinor(idx: SpinorIndex, jet: RadialJet | None = None) -> SpectralField:
    """F(r) Omega_{kappa mu} in the product basis; F is the jet's radial function."""
    terms = {(spin, h.l, h.m, 0, 0): c for spin, h, c in spinor_to_product_basis(idx)}
    return SpectralField(terms, jet)


# -- primitive operators -------------------------------------------------------

_SIGMA = {
    # spin_in -> [(spin_out, factor)]
    0: {0: [(1, 1.0)], 1: [(0, 1.0)]},
    1: {0: [(1, 1j)], 1: [(0, -1j)]},
    2: {0: [(0, 1.0)], 1: [(1, -1.0)]},
}


def apply_sigma(axis, field: SpectralField) -> SpectralField:
    table = _SIGMA[_AXES[axis]]
    out: dict = {}
    for (s, l, m, k, p), amp in field.terms.items():
        for s2, c in table[s]:
            _accumulate(out, (s2, l, m, k, p), c * amp)
    return SpectralField(out, field.jet)


@lru_cache(maxsize=None)
def _l_table(axis: int, l: int, m: int) -> tuple[tuple[complex, int], ...]:
    """(coefficient, target m) pairs for L_axis Y_lm."""
    if axis == 2:
        return ((complex(m), m),) if m else ()
    h = HarmonicIndex(l, m)
    cp, tp = ladder_action(1, h)
    cm, tm = ladder_action(-1, h)
    out = []
    # L_x = (L+ + L-)/2, L_y = (L+ - L-)/(2i)
    if tp is not None and cp:
        out.append((0.5 * cp if axis == 0 else -0.5j * cp, tp.m))
    if tm is not None and cm:
        out.append((0.5 * cm if axis == 0 else 0.5j * cm, tm.m))
    return tuple(out)


def apply_L(axis, field: SpectralField) -> SpectralField:
    axis = _AXES[axis]
    out: dict = {}
    for (s, l, m, k, p), amp in field.terms.items():
        for c, m2 in _l_table(axis, l, m):
            _accumulate(out, (s, l, m2, k, p), c * amp)
    return SpectralField(out, field.jet)


def apply_J(axis, field: SpectralField) -> SpectralField:
    return apply_L(axis, field) + apply_sigma(axis, field).scale(0.5)


@lru_cache(maxsize=None)
def _n_table(axis: int, l: int, m: int) -> tuple[tuple[complex, int, int], ...]:
    """(coefficient, l', m') for n_axis Y_lm, built from the cyclic actions."""
    h = HarmonicIndex(l, m)
    # n_x = (n_{-1} - n_{+1})/sqrt2, n_y = i (n_{-1} + n_{+1})/sqrt2, n_z = n_0
    weights = {
        0: {-1: SQRT1_2, 1: -SQRT1_2},
        1: {-1: 1j * SQRT1_2, 1: 1j * SQRT1_2},
        2: {0: 1.0},
    }[axis]
    out: dict = {}
    for q, w in weights.items():
        for c, target in direction_cosine_action(q, h):
            if target is not None and c:
                _accumulate(out, (target.l, target.m), w * c)
    return tuple((c, l2, m2) for (l2, m2), c in out.items())


def apply_n(axis, field: SpectralField) -> SpectralField:
    axis = _AXES[axis]
    out: dict = {}
    for (s, l, m, k, p), amp in field.terms.items():
        for c, l2, m2 in _n_table(axis, l, m):
            _accumulate(out, (s, l2, m2, k, p), c * amp)
    return SpectralField(out, field.jet)


def d_dr(field: SpectralField) -> SpectralField:
    """d/dr of F^(k) r^(-p) = F^(k+1) r^(-p) - p F^(k) r^(-p-1)."""
    out: dict = {}
    for (s, l, m, k, p), amp in field.terms.items():
        if k + 1 > MAX_JET_DEPTH:
            raise JetDepthError(f"radial derivative order {k + 1} exceeds jet depth {MAX_JET_DEPTH}")
        _accumulate(out, (s, l, m, k + 1, p), amp)
        if p:
            _accumulate(out, (s, l, m, k, p + 1), -p * amp)
    return SpectralField(out, field.jet)


def inv_r(field: SpectralField) -> SpectralField:
    return SpectralField({(s, l, m, k, p + 1): a for (s, l, m, k, p), a in field.terms.items()}, field.jet)


def apply_nabla(axis, field: SpectralField) -> SpectralField:
    """Gradient component via nabla = n d/dr - (i/r) n x L."""
    axis = _AXES[axis]
    result = apply_n(axis, d_dr(field))
    for i, j, k, sign in LEVI_CIVITA:
        if i == axis:
            term = inv_r(apply_n(j, apply_L(k, field)))
            result = result + term.scale(-1j * sign)
    return result


# -- expression evaluation -----------------------------------------------------

_PRIMITIVES = {"n": apply_n, "sigma": apply_sigma, "L": apply_L, "J": apply_J, "nabla": apply_nabla}


def apply_component(expr: OperatorExpr, axis: int, field: SpectralField) -> SpectralField:
    """Cartesian component `axis` of a vector operator expression, applied to field."""
    if not expr.is_vector:
        raise StructuralError(f"{expr} is not a vector operator")
    if isinstance(expr, Atom):
        if expr.name in CONSTANT_VERSORS:
            return field.scale(CONSTANT_VERSORS[expr.name][axis])
        return _PRIMITIVES[expr.name](axis, field)
    if isinstance(expr, Cross):
        result = SpectralField({}, field.jet)
        inner: dict[int, SpectralField] = {}
        for i, j, k, sign in LEVI_CIVITA:
            if i != axis:
                continue
            if k not in inner:
                inner[k] = apply_component(expr.right, k, field)
            result = result + apply_component(expr.left, j, inner[k]).scale(sign)
        return result
    raise StructuralError(f"cannot take a component of {expr}")


def apply_vector(expr: OperatorExpr, field: SpectralField) -> VectorField:
    if isinstance(expr, Cross):
        inner = [apply_component(expr.right, k, field) for k in range(3)]
        comps = [SpectralField({}, field.jet) for _ in range(3)]
        for i, j, k, sign in LEVI_CIVITA:
            comps[i] = comps[i] + apply_component(expr.left, j, inner[k]).scale(sign)
        return VectorField(*comps)
    return VectorField(*(apply_component(expr, axis, field) for axis in range(3)))


def apply_scalar(expr: OperatorExpr, field: SpectralField) -> SpectralField:
    if isinstance(expr, Atom) and expr.name == "I":
        return field
    if isinstance(expr, Product):
        return apply_scalar(expr.left, apply_scalar(expr.right, field))
    if isinstance(expr, Dot):
        right = apply_vector(expr.right, field)
        result = SpectralField({}, field.jet)
        for axis in range(3):
            result = result + apply_component(expr.left, axis, right[axis])
        return result
    raise StructuralError(f"{expr} is not a scalar operator")


def apply_operator_expr(expr: OperatorExpr, field: SpectralField):
    """Scalar expressions give a SpectralField, vector ones a VectorField."""
    if expr.is_vector:
        return apply_vector(expr, field)
    return apply_scalar(expr, field)
