"""Pointwise reference engine in Cartesian coordinates.

Fields are sums of F^(k)(r) r^(-p) P(x, y, z) with P a polynomial stored as a
dense coefficient cube C[a, b, c] for x^a y^b z^c. The operators act by exact
polynomial algebra (multiplication by x_i, d/dx_i), so this engine shares no
coefficient tables with the spectral engine: the spherical harmonics are
built from the Rodrigues polynomials and everything else is the product rule.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .expr import CONSTANT_VERSORS, Atom, Cross, Dot, OperatorExpr, Product, StructuralError
from .indices import SpinorIndex
from .legendre import rodrigues_coefficients

__all__ = ["CartesianField", "solid_harmonic", "spinor_field", "apply_expr"]

_LEVI = [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1), (0, 2, 1, -1), (2, 1, 0, -1), (1, 0, 2, -1)]
_SIGMA = {
    0: {0: [(1, 1.0)], 1: [(0, 1.0)]},
    1: {0: [(1, 1j)], 1: [(0, -1j)]},
    2: {0: [(0, 1.0)], 1: [(1, -1.0)]},
}


def _polymul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i1, j1, k1), c1 in a.items():
        for (i2, j2, k2), c2 in b.items():
            key = (i1 + i2, j1 + j2, k1 + k2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def _polypow(a: dict, n: int) -> dict:
    out = {(0, 0, 0): Fraction(1)}
    for _ in range(n):
        out = _polymul(out, a)
    return out


def _divide_by_one_minus_xi2(coeffs: list[Fraction]) -> list[Fraction]:
    """Exact quotient of a polynomial in xi by (1 - xi^2); remainder must vanish."""
    # write (1 - xi^2) q = p and solve from the top degree down
    p = list(coeffs)
    n = len(p)
    if n < 3:
        raise ArithmeticError("polynomial not divisible by 1 - xi^2")
    q = [Fraction(0)] * (n - 2)
    for d in range(n - 1, 1, -1):
        q[d - 2] = -p[d]
        p[d - 2] -= q[d - 2]
        p[d] = Fraction(0)
    if any(p):
        raise ArithmeticError("polynomial not divisible by 1 - xi^2")
    return q


@lru_cache(maxsize=None)
def solid_harmonic(l: int, m: int) -> tuple[float, dict]:
    """(N_lm, S) with Y_lm = N_lm S(x, y, z) / r^l on the unit sphere.

    S has exact complex-rational coefficients, held as pairs (re, im).
    """
    am = abs(m)
    if am > l:
        raise ValueError(f"invalid harmonic index (l={l}, m={m})")
    # d^{l+m}/dxi^{l+m} (xi^2-1)^l / (2^l l!) carries a factor (1-xi^2)^{|m|} for m < 0
    q = list(rodrigues_coefficients(l, m))
    for _ in range(am if m < 0 else 0):
        q = _divide_by_one_minus_xi2(q)
    # (1-xi^2)^{|m|/2} e^{+-i|m| phi} r^{|m|} = (x +- i y)^{|m|}
    sgn_y = 1 if m >= 0 else -1
    xy = {(1, 0, 0): (Fraction(1), Fraction(0)), (0, 1, 0): (Fraction(0), Fraction(sgn_y))}
    r2 = {(2, 0, 0): Fraction(1), (0, 2, 0): Fraction(1), (0, 0, 2): Fraction(1)}
    radial_part: dict = {}
    for i, c in enumerate(q):
        if c == 0:
            continue
        rest = l - am - i
        assert rest % 2 == 0 and rest >= 0
        for key, v in _polymul({(0, 0, i): c}, _polypow(r2, rest // 2)).items():
            radial_part[key] = radial_part.get(key, 0) + v
    # complex product (x +- iy)^{|m|} * radial_part, tracked as (re, im)
    poly = {key: (v, Fraction(0)) for key, v in radial_part.items()}
    for _ in range(am):
        nxt: dict = {}
        for (a1, b1, c1), (re1, im1) in poly.items():
            for (a2, b2, c2), (re2, im2) in xy.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                re0, im0 = nxt.get(key, (Fraction(0), Fraction(0)))
                nxt[key] = (re0 + re1 * re2 - im1 * im2, im0 + re1 * im2 + im1 * re2)
        poly = nxt
    sign = -1 if m % 2 else 1  # (-)^m
    poly = {k: (sign * re, sign * im) for k, (re, im) in poly.items()}
    ratio = Fraction(math.factorial(l - m), math.factorial(l + m))
    norm = math.sqrt((2 * l + 1) / (4 * math.pi)) * math.sqrt(float(ratio))
    return norm, poly


class CartesianField:
    """Immutable map (spin, k, p) -> polynomial coefficient cube."""

    __slots__ = ("parts", "size")

    def __init__(self, parts: dict, size: int):
        self.parts = {key: c for key, c in parts.items() if np.any(c)}
        self.size = size

    def _empty(self) -> np.ndarray:
        return np.zeros((self.size,) * 3, dtype=complex)

    def __add__(self, other: CartesianField) -> CartesianField:
        out = dict(self.parts)
        for key, c in other.parts.items():
            out[key] = out[key] + c if key in out else c
        return CartesianField(out, self.size)

    def scale(self, factor: complex) -> CartesianField:
        return CartesianField({k: factor * c for k, c in self.parts.items()}, self.size)

    def _map(self, func) -> CartesianField:
        out: dict = {}
        for key, c in self.parts.items():
            for key2, c2 in func(key, c):
                out[key2] = out[key2] + c2 if key2 in out else c2
        return CartesianField(out, self.size)

    def times_coordinate(self, axis: int) -> CartesianField:
        return self._map(lambda key, c: [(key, _shift(c, axis))])

    def apply_n(self, axis: int) -> CartesianField:
        return self._map(lambda key, c: [((key[0], key[1], key[2] + 1), _shift(c, axis))])

    def partial(self, axis: int) -> CartesianField:
        def rule(key, c):
            s, k, p = key
            xc = _shift(c, axis)
            out = [((s, k + 1, p + 1), xc), ((s, k, p), _deriv(c, axis))]
            if p:
                out.append(((s, k, p + 2), -p * xc))
            return out

        return self._map(rule)

    def apply_sigma(self, axis: int) -> CartesianField:
        table = _SIGMA[axis]
        return self._map(lambda key, c: [((s2, key[1], key[2]), f * c) for s2, f in table[key[0]]])

    def apply_L(self, axis: int) -> CartesianField:
        # L_i = -i eps_ijk x_j d_k
        result = CartesianField({}, self.size)
        for i, j, k, sign in _LEVI:
            if i == axis:
                result = result + self.partial(k).times_coordinate(j).scale(-1j * sign)
        return result

    def apply_J(self, axis: int) -> CartesianField:
        return self.apply_L(axis) + self.apply_sigma(axis).scale(0.5)

    def evaluate(self, points: np.ndarray, radial_derivs) -> np.ndarray:
        """Values at points (N, 3); radial_derivs(k, r) -> F^(k)(r). Returns (2, N)."""
        x, y, z = points.T
        r = np.sqrt(x * x + y * y + z * z)
        out = np.zeros((2, len(x)), dtype=complex)
        for (s, k, p), c in self.parts.items():
            poly = np.polynomial.polynomial.polyval3d(x, y, z, c)
            out[s] += radial_derivs(k, r) * r ** (-float(p)) * poly
        return out


def _shift(c: np.ndarray, axis: int) -> np.ndarray:
    edge = [slice(None)] * 3
    edge[axis] = -1
    if np.any(c[tuple(edge)]):
        raise OverflowError("polynomial degree exceeds the cube size")
    return np.roll(c, 1, axis=axis)


def _deriv(c: np.ndarray, axis: int) -> np.ndarray:
    n = c.shape[axis]
    shape = [1, 1, 1]
    shape[axis] = n - 1
    idx = np.arange(1, n).reshape(shape)
    src = [slice(None)] * 3
    src[axis] = slice(1, None)
    out = np.zeros_like(c)
    dst = [slice(None)] * 3
    dst[axis] = slice(0, n - 1)
    out[tuple(dst)] = c[tuple(src)] * idx
    return out


def spinor_field(idx: SpinorIndex, size: int) -> CartesianField:
    """F(r) Omega_{kappa mu} straight from the defining formula."""
    kappa = idx.kappa
    mu = idx.mu.to_fraction()
    l = idx.l
    half = Fraction(1, 2)
    parts: dict = {}
    comps = (
        (0, (kappa + half - mu) / (2 * kappa + 1), mu - half, -1 if kappa > 0 else 1),
        (1, (kappa + half + mu) / (2 * kappa + 1), mu + half, 1),
    )
    for spin, radicand, m, phase in comps:
        m = int(m)
        if radicand == 0 or abs(m) > l:
            continue
        norm, poly = solid_harmonic(l, m)
        weight = phase * math.sqrt(radicand) * norm
        cube = np.zeros((size,) * 3, dtype=complex)
        for (a, b, c), (re, im) in poly.items():
            cube[a, b, c] += weight * complex(float(re), float(im))
        parts[(spin, 0, l)] = cube
    return CartesianField(parts, size)


def apply_component(expr: OperatorExpr, axis: int, fld: CartesianField) -> CartesianField:
    if isinstance(expr, Atom):
        name = expr.name
        if name in CONSTANT_VERSORS:
            return fld.scale(CONSTANT_VERSORS[name][axis])
        if name == "n":
            return fld.apply_n(axis)
        if name == "sigma":
            return fld.apply_sigma(axis)
        if name == "L":
            return fld.apply_L(axis)
        if name == "J":
            return fld.apply_J(axis)
        if name == "nabla":
            return fld.partial(axis)
    if isinstance(expr, Cross):
        result = CartesianField({}, fld.size)
        for i, j, k, sign in _LEVI:
            if i == axis:
                result = result + apply_component(expr.left, j, apply_component(expr.right, k, fld)).scale(sign)
        return result
    raise StructuralError(f"{expr} has no vector components")


def apply_expr(expr: OperatorExpr, fld: CartesianField) -> CartesianField:
    if isinstance(expr, Atom) and expr.name == "I":
        return fld
    if isinstance(expr, Product):
        return apply_expr(expr.left, apply_expr(expr.right, fld))
    if isinstance(expr, Dot):
        result = CartesianField({}, fld.size)
        for axis in range(3):
            result = result + apply_component(expr.left, axis, apply_component(expr.right, axis, fld))
        return result
    raise StructuralError(f"{expr} is not a scalar operator")
