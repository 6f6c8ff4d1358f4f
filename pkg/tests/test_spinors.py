import math

import numpy as np
import pytest
from hypothesis import given

from spinorium.harmonics import HarmonicIndex, eval_ylm, sphere_grid
from spinorium.indices import HalfInt, SpinorIndex, mu_range
from spinorium.spinors import (
    UP,
    SpinorValue,
    coupling_coeffs,
    eval_spinor,
    product_basis_to_spinors,
    spinor_to_product_basis,
)

from strategies import spinor_indices


def test_s_half():
    v = eval_spinor(SpinorIndex(-1, HalfInt(1)), 1.0, 0.0)
    assert v == SpinorValue(pytest.approx(1 / math.sqrt(4 * math.pi)), 0j)


def test_p_half_coefficients():
    c = coupling_coeffs(SpinorIndex(1, HalfInt(1)))
    assert c.c_up == pytest.approx(-math.sqrt(1 / 3))
    assert c.c_down == pytest.approx(math.sqrt(2 / 3))


def test_stretched_state_has_one_component():
    terms = spinor_to_product_basis(SpinorIndex(-2, HalfInt(3)))
    assert terms == [(UP, HarmonicIndex(1, 1), pytest.approx(1.0))]


@given(spinor_indices(20))
def test_coupling_is_unit(idx):
    c = coupling_coeffs(idx)
    assert c.c_up**2 + c.c_down**2 == pytest.approx(1.0)


@given(spinor_indices(20))
def test_product_basis_roundtrip(idx):
    rebuilt: dict = {}
    for spin, h, c in spinor_to_product_basis(idx):
        for sidx, w in product_basis_to_spinors(spin, h):
            rebuilt[sidx] = rebuilt.get(sidx, 0.0) + c * w
    assert rebuilt.pop(idx) == pytest.approx(1.0)
    assert all(abs(v) < 1e-14 for v in rebuilt.values())


@given(spinor_indices(10))
def test_pointwise_definition(idx):
    th, ph = 0.83, 4.1
    c = coupling_coeffs(idx)
    mu = idx.mu.to_fraction()
    up_m, down_m = int(mu - HalfInt(1).to_fraction()), int(mu + HalfInt(1).to_fraction())
    up = c.c_up * eval_ylm(idx.l, up_m, th, ph) if abs(up_m) <= idx.l else 0
    down = c.c_down * eval_ylm(idx.l, down_m, th, ph) if abs(down_m) <= idx.l else 0
    v = eval_spinor(idx, th, ph)
    assert v.up == pytest.approx(up, abs=1e-14)
    assert v.down == pytest.approx(down, abs=1e-14)


def test_array_evaluation_shape():
    th = np.linspace(0, math.pi, 7)
    out = eval_spinor(SpinorIndex(2, HalfInt(-1)), th, 0.3)
    assert out.shape == (2, 7)
    assert out[UP][3] == eval_spinor(SpinorIndex(2, HalfInt(-1)), th[3], 0.3).up


def test_spinor_orthonormality_small():
    theta, phi, w = sphere_grid(5)
    idx = [SpinorIndex(k, mu) for k in range(-4, 5) if k for mu in mu_range(k)]
    vals = np.array([eval_spinor(i, theta, phi) for i in idx])  # (n, 2, points)
    flat = vals.transpose(0, 2, 1).reshape(len(idx), -1)
    gram = (np.conj(flat) * np.repeat(w, 2)) @ flat.T
    assert np.max(np.abs(gram - np.eye(len(idx)))) < 1e-12

