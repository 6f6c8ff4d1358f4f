import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import spinor_indices

from spinorium import cartesian
from spinorium.expr import StructuralError, parse
from spinorium.indices import HalfInt, SpinorIndex
from spinorium.spectral import (
    JetDepthError,
    RadialJet,
    SpectralField,
    VectorField,
    apply_J,
    apply_L,
    apply_n,
    apply_nabla,
    apply_operator_expr,
    apply_component,
    apply_scalar,
    apply_sigma,
    d_dr,
    field_from_spinor,
)
from spinorium.spinors import eval_spinor
from spinorium.verify import PROFILES, operator_identity_residuals

UP0 = SpectralField({(0, 0, 0, 0, 0): 1.0})
JET = RadialJet(0.8, 0.6, -0.3, 1.7)


def coeffs(field, jet=None):
    return {k: v for k, v in field.coefficients(jet).items() if abs(v) > 1e-15}


def test_field_from_spinor_examples():
    assert coeffs(field_from_spinor(SpinorIndex(-1, HalfInt(1)))) == {(0, 0, 0): 1}
    c = coeffs(field_from_spinor(SpinorIndex(1, HalfInt(1))))
    assert c == {(0, 1, 0): pytest.approx(-math.sqrt(1 / 3)), (1, 1, 1): pytest.approx(math.sqrt(2 / 3))}
    zero = field_from_spinor(SpinorIndex(2, HalfInt(3)), RadialJet(1.0, 0.0, 0.0, 0.0))
    assert coeffs(zero) == {}


def test_sigma_matrices():
    assert coeffs(apply_sigma("z", UP0)) == {(0, 0, 0): 1}
    assert coeffs(apply_sigma("x", UP0)) == {(1, 0, 0): 1}
    assert coeffs(apply_sigma("y", UP0)) == {(1, 0, 0): 1j}


def test_L_examples():
    y11 = SpectralField({(0, 1, 1, 0, 0): 1.0})
    assert coeffs(apply_L("z", y11)) == {(0, 1, 1): 1}
    assert not apply_L("x", UP0)


def test_n_examples():
    assert coeffs(apply_n("z", UP0)) == {(0, 1, 0): pytest.approx(1 / math.sqrt(3))}
    assert coeffs(apply_n("x", UP0)) == {
        (0, 1, 1): pytest.approx(-1 / math.sqrt(6)),
        (0, 1, -1): pytest.approx(1 / math.sqrt(6)),
    }


@given(spinor_indices(8))
def test_n_dot_n_is_identity(idx):
    f = field_from_spinor(idx)
    assert apply_operator_expr(parse("(dot n n)"), f).max_abs_difference(f) < 1e-12


@given(spinor_indices(10))
def test_J_eigenvalues(idx):
    f = field_from_spinor(idx)
    assert apply_J("z", f).max_abs_difference(f.scale(float(idx.mu))) < 1e-12
    j2 = float(idx.j) * (float(idx.j) + 1)
    assert apply_operator_expr(parse("(dot J J)"), f).max_abs_difference(f.scale(j2)) < 1e-11
    assert not apply_J("x", SpectralField({}))


def test_ordering_is_observable():
    f = field_from_spinor(SpinorIndex(3, HalfInt(1)))
    a = apply_operator_expr(parse("(dot n (cross sigma L))"), f)
    b = apply_operator_expr(parse("(dot (cross sigma L) n)"), f)
    assert a.max_abs_difference(b) > 0.1
    # n.(sigma x J) = i kappa Omega_{-kappa}
    c = apply_operator_expr(parse("(dot n (cross sigma J))"), f)
    assert c.max_abs_difference(field_from_spinor(SpinorIndex(-3, HalfInt(1))).scale(3j)) < 1e-12


def test_identities_on_random_fields():
    for name, res in operator_identity_residuals(n_fields=5, seed=7).items():
        assert res < 1e-11, name


def test_gradient_of_r():
    jet = RadialJet(1.3, 1.3, 1.0, 0.0)  # F = r
    g = apply_nabla("z", UP0)
    assert coeffs(g, jet) == {(0, 1, 0): pytest.approx(1 / math.sqrt(3))}


def test_laplacian_power():
    # F = r^l is harmonic with Y_l: nabla^2 (r^l Y_lm) = 0
    idx = SpinorIndex(-3, HalfInt(1))
    l = idx.l
    r = 0.7
    jet = RadialJet(r, r**l, l * r ** (l - 1), l * (l - 1) * r ** (l - 2))
    lap = apply_operator_expr(parse("(dot nabla nabla)"), field_from_spinor(idx))
    assert max(abs(v) for v in lap.coefficients(jet).values()) < 1e-12


def test_jet_depth():
    f = field_from_spinor(SpinorIndex(1, HalfInt(1)))
    with pytest.raises(JetDepthError):
        d_dr(d_dr(d_dr(f)))
    lap = apply_operator_expr(parse("(dot nabla nabla)"), f)
    with pytest.raises(JetDepthError):
        lap.coefficients(RadialJet(1.0, 1.0, 0.5))
    assert RadialJet(1.0, 1.0, 0.5).derivative(1) == 0.5


def test_radius_positive():
    with pytest.raises(ValueError):
        RadialJet(0.0, 1.0)


def test_structural_errors():
    f = field_from_spinor(SpinorIndex(1, HalfInt(1)))
    with pytest.raises(StructuralError):
        apply_component(parse("(dot n n)"), 0, f)
    with pytest.raises(StructuralError):
        apply_scalar(parse("(cross n n)"), f)


def test_vector_result_type():
    f = field_from_spinor(SpinorIndex(-2, HalfInt(1)))
    v = apply_operator_expr(parse("(cross n sigma)"), f)
    assert isinstance(v, VectorField) and len(list(v)) == 3


def test_pure_and_pruning():
    f = field_from_spinor(SpinorIndex(2, HalfInt(1)))
    before = dict(f.terms)
    apply_operator_expr(parse("(dot L (cross n J))"), f)
    assert f.terms == before
    tiny = SpectralField({(0, 0, 0, 0, 0): 1e-200, (1, 0, 0, 0, 0): 0.0})
    assert list(tiny.terms) == [(0, 0, 0, 0, 0)]


# -- pointwise oracle: the Cartesian engine shares no tables with the spectral one


def random_combo(rng, kappa_max=4, n=3):
    out = []
    for _ in range(n):
        kappa = int(rng.choice([k for k in range(-kappa_max, kappa_max + 1) if k]))
        twice = int(rng.choice(range(-2 * abs(kappa) + 1, 2 * abs(kappa), 2)))
        out.append((SpinorIndex(kappa, HalfInt(twice)), complex(*rng.normal(size=2))))
    return out


def spectral_of(combo):
    total = SpectralField({})
    for idx, amp in combo:
        total = total + field_from_spinor(idx).scale(amp)
    return total


def cartesian_of(combo, size):
    total = cartesian.CartesianField({}, size)
    for idx, amp in combo:
        total = total + cartesian.spinor_field(idx, size).scale(amp)
    return total


@pytest.mark.parametrize("text", ["(dot e0 sigma)", "(dot e+1 n)", "(dot L L)", "(dot sigma L)", "(dot e-1 (cross n J))"])
def test_pointwise_oracle(rng, text):
    combo = random_combo(rng)
    th = np.arccos(rng.uniform(-1, 1, 100))
    ph = rng.uniform(0, 2 * np.pi, 100)
    pts = np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=1)
    one = lambda k, r: np.ones_like(r) if k == 0 else np.zeros_like(r)  # noqa: E731
    expr = parse(text)
    want = cartesian.apply_expr(expr, cartesian_of(combo, 12)).evaluate(pts, one)
    got = apply_operator_expr(expr, spectral_of(combo)).evaluate(th, ph, RadialJet(1.0, 1.0, 0.0, 0.0))
    assert np.max(np.abs(got - want)) < 1e-9


def test_gradient_finite_difference(rng):
    prof = PROFILES["gauss"]
    combo = random_combo(rng, kappa_max=3)
    field = spectral_of(combo)

    def pointwise(x):
        r = np.linalg.norm(x)
        th, ph = math.acos(x[2] / r), math.atan2(x[1], x[0])
        total = np.zeros(2, dtype=complex)
        for idx, amp in combo:
            v = eval_spinor(idx, th, ph)
            total += amp * np.array([v.up, v.down])
        return prof.derivative(0, r, 1) * total

    grads = [apply_nabla(axis, field) for axis in range(3)]
    worst = 0.0
    for _ in range(50):
        r = rng.uniform(0.4, 2.5)
        th, ph = math.acos(rng.uniform(-0.95, 0.95)), rng.uniform(0, 2 * math.pi)
        x = r * np.array([math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th)])
        jet = prof.jet(r, 1)
        h = 1e-5 * r
        for axis in range(3):
            e = np.zeros(3)
            e[axis] = h
            fd = (pointwise(x + e) - pointwise(x - e)) / (2 * h)
            got = grads[axis].evaluate(th, ph, jet)
            scale = max(np.max(np.abs(got)), 1e-3)
            worst = max(worst, np.max(np.abs(got - fd)) / scale)
    assert worst < 1e-6
