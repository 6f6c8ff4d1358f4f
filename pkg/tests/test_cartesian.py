from fractions import Fraction

import numpy as np
import pytest

from spinorium import cartesian
from spinorium.harmonics import eval_ylm
from spinorium.indices import HalfInt, SpinorIndex
from spinorium.spinors import eval_spinor


def unit_points(rng, n):
    th = np.arccos(rng.uniform(-1, 1, n))
    ph = rng.uniform(0, 2 * np.pi, n)
    pts = np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=1)
    return th, ph, pts


def test_solid_harmonics_match_ylm(rng):
    th, ph, pts = unit_points(rng, 25)
    for l in range(9):
        for m in range(-l, l + 1):
            norm, poly = cartesian.solid_harmonic(l, m)
            val = norm * sum(
                complex(float(re), float(im)) * pts[:, 0] ** a * pts[:, 1] ** b * pts[:, 2] ** c
                for (a, b, c), (re, im) in poly.items()
            )
            assert np.max(np.abs(val - eval_ylm(l, m, th, ph))) < 1e-13


def test_spinor_field_on_sphere(rng):
    th, ph, pts = unit_points(rng, 25)
    one = lambda k, r: np.ones_like(r) if k == 0 else np.zeros_like(r)  # noqa: E731
    for kappa, twice in [(-1, 1), (1, -1), (3, 5), (-4, -7)]:
        idx = SpinorIndex(kappa, HalfInt(twice))
        got = cartesian.spinor_field(idx, idx.l + 2).evaluate(pts, one)
        assert np.max(np.abs(got - eval_spinor(idx, th, ph))) < 1e-13


def test_laplacian_of_harmonic_polynomial():
    # r^l Y_lm is harmonic, so nabla^2 of it vanishes identically
    idx = SpinorIndex(3, HalfInt(1))
    fld = cartesian.spinor_field(idx, 8)
    lap = fld.partial(0).partial(0) + fld.partial(1).partial(1) + fld.partial(2).partial(2)
    pts = np.array([[0.3, -0.2, 0.9], [1.1, 0.4, -0.5]])
    power = lambda k, r: [r**3, 3 * r**2, 6 * r, 6 + 0 * r][k]  # noqa: E731
    assert np.max(np.abs(lap.evaluate(pts, power))) < 1e-12


def test_cube_overflow_is_loud():
    fld = cartesian.spinor_field(SpinorIndex(2, HalfInt(1)), 3)
    with pytest.raises(OverflowError):
        fld.apply_n(2).apply_n(2)


def test_exact_division_rejects_remainder():
    with pytest.raises(ArithmeticError):
        cartesian._divide_by_one_minus_xi2([Fraction(1), Fraction(0), Fraction(0)])
