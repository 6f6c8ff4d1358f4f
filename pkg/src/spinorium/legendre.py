"""Associated Legendre functions with the Condon-Shortley phase.

Values come from the upward recurrence in l at fixed m, seeded by the closed
form for P_m^m. The Rodrigues polynomial route is kept alongside as an exact
reference (and is what the Cartesian reference engine builds on).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

__all__ = [
    "LegendreValue",
    "assoc_legendre",
    "assoc_legendre_theta_derivative",
    "legendre_value",
    "rodrigues_coefficients",
    "assoc_legendre_rodrigues",
]


@dataclass(frozen=True)
class LegendreValue:
    value: float
    theta_derivative: float


def _reflection_factor(l: int, m: int) -> float:
    # P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    return (-1) ** m * float(Fraction(factorial(l - m), factorial(l + m)))


def _pmm_recurrence(l: int, m: int, xi):
    """P_l^m for 0 <= m <= l, elementwise over xi."""
    xi = np.asarray(xi, dtype=float)
    # (1 - xi^2)^(1/2) via a product form that stays exactly 0 at the endpoints
    s = np.sqrt(np.maximum((1.0 - xi) * (1.0 + xi), 0.0))
    pmm = np.ones_like(xi)
    for i in range(1, m + 1):
        pmm = -(2 * i - 1) * s * pmm
    if l == m:
        return pmm
    p_prev, p = pmm, (2 * m + 1) * xi * pmm
    for ll in range(m + 2, l + 1):
        p_prev, p = p, ((2 * ll - 1) * xi * p - (ll + m - 1) * p_prev) / (ll - m)
    return p


def assoc_legendre(l: int, m: int, xi):
    """P_l^(m)(xi) on [-1, 1]; zero when |m| > l.

    Accepts scalars or arrays. Negative m uses the factorial reflection.
    """
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    xi_arr = np.asarray(xi, dtype=float)
    if np.any(np.abs(xi_arr) > 1.0):
        raise ValueError("xi must lie in [-1, 1]")
    if abs(m) > l:
        out = np.zeros_like(xi_arr)
    elif m >= 0:
        out = _pmm_recurrence(l, m, xi_arr)
    else:
        out = _reflection_factor(l, -m) * _pmm_recurrence(l, -m, xi_arr)
    return out if out.ndim else float(out)


def assoc_legendre_theta_derivative(l: int, m: int, theta):
    """d/dtheta of P_l^(m)(cos theta), from neighbouring orders in m.

    Uses 2 dP_l^m/dtheta = P_l^{m+1} - (l+m)(l-m+1) P_l^{m-1}, so the poles need
    no special handling.
    """
    if abs(m) > l:
        theta_arr = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta_arr)
        return out if out.ndim else 0.0
    xi = np.cos(np.asarray(theta, dtype=float))
    up = assoc_legendre(l, m + 1, xi)
    down = assoc_legendre(l, m - 1, xi)
    return 0.5 * (up - (l + m) * (l - m + 1) * down)


def legendre_value(l: int, m: int, theta: float) -> LegendreValue:
    return LegendreValue(
        float(assoc_legendre(l, m, np.cos(theta))),
        float(assoc_legendre_theta_derivative(l, m, theta)),
    )


@lru_cache(maxsize=None)
def rodrigues_coefficients(l: int, m: int) -> tuple[Fraction, ...]:
    """Exact power-series coefficients of d^{l+m}/dxi^{l+m} (xi^2 - 1)^l / (2^l l!).

    Index i holds the coefficient of xi^i. Requires l + m >= 0.
    """
    if l + m < 0:
        raise ValueError("need l + m >= 0")
    # (xi^2 - 1)^l = sum_k C(l,k) (-1)^{l-k} xi^{2k}
    poly = [Fraction(0)] * (2 * l + 1)
    for k in range(l + 1):
        poly[2 * k] = Fraction(factorial(l), factorial(k) * factorial(l - k)) * (-1) ** (l - k)
    for _ in range(l + m):
        poly = [i * poly[i] for i in range(1, len(poly))] or [Fraction(0)]
    norm = Fraction(1, 2**l * factorial(l))
    return tuple(c * norm for c in poly)


def assoc_legendre_rodrigues(l: int, m: int, xi):
    """P_l^(m) straight from the Rodrigues-type definition (reference route).

    For negative m the (1 - xi^2)^{m/2} factor is singular at the endpoints, so
    only interior xi should be used there.
    """
    xi = np.asarray(xi, dtype=float)
    if abs(m) > l:
        return np.zeros_like(xi)
    coeffs = rodrigues_coefficients(l, m)
    out = np.empty(xi.shape)
    for pos, x in np.ndenumerate(xi):
        # exact polynomial value at the (exactly representable) float argument
        xf = Fraction(float(x))
        poly = sum(c * xf**i for i, c in enumerate(coeffs))
        one_minus = 1 - xf * xf
        if m % 2 == 0:
            out[pos] = float(one_minus ** (m // 2) * poly)
        else:
            out[pos] = -float(one_minus) ** (m / 2) * float(poly)
    return out if out.ndim else float(out)
