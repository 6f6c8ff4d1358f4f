"""Spherical spinors Omega_{kappa mu} and the (Y_lm x spin) product basis."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .harmonics import HarmonicIndex, eval_ylm
from .indices import HalfInt, SpinorIndex, kappa_to_l

__all__ = [
    "UP",
    "DOWN",
    "SpinorValue",
    "CouplingCoeffs",
    "coupling_coeffs",
    "eval_spinor",
    "spinor_to_product_basis",
    "product_basis_to_spinors",
]

UP = 0
DOWN = 1


@dataclass(frozen=True)
class SpinorValue:
    up: complex
    down: complex


@dataclass(frozen=True)
class CouplingCoeffs:
    c_up: float
    c_down: float


def _radical(num: Fraction, den: int) -> float:
    ratio = num / den
    if ratio < 0:
        raise ValueError(f"negative radicand {ratio}")
    return math.sqrt(ratio)


def coupling_coeffs(idx: SpinorIndex) -> CouplingCoeffs:
    kappa = idx.kappa
    mu = idx.mu.to_fraction()
    half = Fraction(1, 2)
    up = _radical(kappa + half - mu, 2 * kappa + 1)
    down = _radical(kappa + half + mu, 2 * kappa + 1)
    # sgn(-kappa) on the upper component
    if kappa > 0:
        up = -up
    return CouplingCoeffs(up, down)


def spinor_to_product_basis(idx: SpinorIndex) -> list[tuple[int, HarmonicIndex, float]]:
    """Omega_{kappa mu} = sum of c * (spin, Y_lm); zero-weight components omitted."""
    c = coupling_coeffs(idx)
    l = idx.l
    m_up = (idx.mu - HalfInt(1)).twice // 2
    m_down = (idx.mu + HalfInt(1)).twice // 2
    out = []
    if c.c_up != 0.0 and HarmonicIndex.is_valid(l, m_up):
        out.append((UP, HarmonicIndex(l, m_up), c.c_up))
    if c.c_down != 0.0 and HarmonicIndex.is_valid(l, m_down):
        out.append((DOWN, HarmonicIndex(l, m_down), c.c_down))
    return out


def product_basis_to_spinors(spin: int, idx: HarmonicIndex) -> list[tuple[SpinorIndex, float]]:
    """Inverse of spinor_to_product_basis (the coupling matrix is orthogonal)."""
    l, m = idx.l, idx.m
    mu = HalfInt(2 * m + 1) if spin == UP else HalfInt(2 * m - 1)
    out = []
    for kappa in (l, -l - 1):
        if kappa == 0 or not SpinorIndex.is_valid(kappa, mu):
            continue
        sidx = SpinorIndex(kappa, mu)
        c = coupling_coeffs(sidx)
        weight = c.c_up if spin == UP else c.c_down
        if weight != 0.0:
            out.append((sidx, weight))
    return out


def eval_spinor(idx: SpinorIndex, theta, phi):
    """Both components of Omega_{kappa mu} at (theta, phi).

    Returns a SpinorValue for scalar angles, else a (2, ...) complex array.
    """
    l = kappa_to_l(idx.kappa)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    comps = np.zeros((2,) + np.broadcast(theta, phi).shape, dtype=complex)
    for spin, h, c in spinor_to_product_basis(idx):
        comps[spin] += c * eval_ylm(l, h.m, theta, phi)
    if comps.ndim == 1:
        return SpinorValue(complex(comps[0]), complex(comps[1]))
    return comps
