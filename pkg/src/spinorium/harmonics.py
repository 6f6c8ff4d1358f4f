"""Scalar spherical harmonics and their primitive actions on the (l, m) basis.

The ladder and direction-cosine coefficient families here feed the spectral
engine; both are checked against quadrature in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .legendre import assoc_legendre, assoc_legendre_theta_derivative

__all__ = [
    "HarmonicIndex",
    "Direction",
    "ylm_norm",
    "eval_ylm",
    "ylm_theta_derivative",
    "lz_action",
    "ladder_action",
    "direction_cosine_action",
    "sphere_grid",
    "random_directions",
]


@dataclass(frozen=True, order=True)
class HarmonicIndex:
    l: int
    m: int

    def __post_init__(self):
        if self.l < 0 or abs(self.m) > self.l:
            raise ValueError(f"invalid harmonic index (l={self.l}, m={self.m})")

    @staticmethod
    def is_valid(l: int, m: int) -> bool:
        return l >= 0 and abs(m) <= l


@dataclass(frozen=True)
class Direction:
    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValueError(f"phi must lie in [0, 2pi), got {self.phi}")

    @property
    def unit_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


@lru_cache(maxsize=None)
def ylm_norm(l: int, m: int) -> float:
    """sqrt((2l+1)/(4pi) (l-m)!/(l+m)!)"""
    ratio = Fraction(math.factorial(l - m), math.factorial(l + m))
    return math.sqrt((2 * l + 1) / (4 * math.pi)) * math.sqrt(float(ratio))


def eval_ylm(l: int, m: int, theta, phi):
    """Condon-Shortley Y_lm; broadcasts over theta and phi arrays."""
    if not HarmonicIndex.is_valid(l, m):
        raise ValueError(f"invalid harmonic index (l={l}, m={m})")
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    out = ylm_norm(l, m) * assoc_legendre(l, m, np.cos(theta)) * np.exp(1j * m * phi)
    return out if np.ndim(out) else complex(out)


def ylm_theta_derivative(l: int, m: int, theta, phi):
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    out = ylm_norm(l, m) * assoc_legendre_theta_derivative(l, m, theta) * np.exp(1j * m * phi)
    return out if np.ndim(out) else complex(out)


def lz_action(idx: HarmonicIndex) -> tuple[float, HarmonicIndex]:
    return float(idx.m), idx


def ladder_action(sign: int, idx: HarmonicIndex) -> tuple[float, HarmonicIndex | None]:
    """L_+ (sign=+1) or L_- (sign=-1) on Y_lm. Target is None when annihilated."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    l, m = idx.l, idx.m
    target_m = m + sign
    if abs(target_m) > l:
        return 0.0, None
    return math.sqrt(l * (l + 1) - m * target_m), HarmonicIndex(l, target_m)


def direction_cosine_action(
    q: int, idx: HarmonicIndex
) -> list[tuple[float, HarmonicIndex | None]]:
    """Expand (e_q . n) Y_lm over Y_{l+1, m+q} and Y_{l-1, m+q}.

    Always two entries, upper target first; an invalid target comes back as
    (0.0, None).
    """
    l, m = idx.l, idx.m
    if q == 0:
        up = math.sqrt((l + 1 - m) * (l + 1 + m) / ((2 * l + 1) * (2 * l + 3)))
        down_sq = (l - m) * (l + m)
    elif q == 1:
        # n_{+1} = -sin(theta) e^{i phi} / sqrt(2)
        up = math.sqrt((l + m + 1) * (l + m + 2) / (2 * (2 * l + 1) * (2 * l + 3)))
        down_sq = (l - m) * (l - m - 1)
    elif q == -1:
        up = math.sqrt((l - m + 1) * (l - m + 2) / (2 * (2 * l + 1) * (2 * l + 3)))
        down_sq = (l + m) * (l + m - 1)
    else:
        raise ValueError(f"q must be -1, 0 or +1, got {q}")

    target_m = m + q
    terms = [(up, HarmonicIndex(l + 1, target_m))]
    if l >= 1 and abs(target_m) <= l - 1:
        down = math.sqrt(down_sq / ((2 * l - 1) * (2 * l + 1)))
        if q != 0:
            down = -down / math.sqrt(2)
        terms.append((down, HarmonicIndex(l - 1, target_m)))
    else:
        terms.append((0.0, None))
    return terms


def sphere_grid(l_max: int):
    """Gauss-Legendre in cos(theta) x uniform trapezoid in phi.

    Returns (theta, phi, weights) as flattened arrays. Exact for products of
    two harmonics of degree <= l_max times one direction cosine.
    """
    n_theta = 2 * l_max + 2
    n_phi = 4 * l_max + 5
    x, w = np.polynomial.legendre.leggauss(n_theta)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    theta_g, phi_g = np.meshgrid(np.arccos(x), phi, indexing="ij")
    weights = np.outer(w, np.full(n_phi, 2 * np.pi / n_phi))
    return theta_g.ravel(), phi_g.ravel(), weights.ravel()


def random_directions(n: int, rng: np.random.Generator):
    """Uniform on the sphere: cos(theta) and phi uniform."""
    cos_t = rng.uniform(-1.0, 1.0, n)
    phi = rng.uniform(0.0, 2 * np.pi, n)
    return np.arccos(cos_t), phi
