"""Sweep harness: spectral-engine LHS against catalog RHS, plus quadrature and
pointwise oracles."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import cartesian
from .expr import count_atoms, parse
from .indices import HalfInt, SpinorIndex, kappa_to_l, mu_range
from .relations import RelationEntry, catalog, eval_rhs, variant_sign
from .spectral import (
    JetDepthError,
    RadialJet,
    SpectralField,
    VectorField,
    apply_nabla,
    apply_operator_expr,
    field_from_spinor,
)
from .harmonics import HarmonicIndex, direction_cosine_action, eval_ylm, ladder_action, sphere_grid, ylm_theta_derivative
from .spinors import eval_spinor

__all__ = [
    "RadialProfile",
    "PROFILES",
    "SweepConfig",
    "VerificationResult",
    "RelationSummary",
    "default_seed",
    "verify_relation",
    "verify_all",
    "summarize",
    "orthonormality_check",
    "spinor_inner_product",
    "pointwise_crosscheck",
    "random_field",
    "operator_identity_residuals",
    "coefficient_family_residuals",
    "gradient_fd_residual",
    "MutationOutcome",
    "mutation_control",
]

DEFAULT_SEED = 20240917
ANGULAR_PROFILE = "none"


def default_seed() -> int:
    """SPINORIUM_SEED if set, else a fixed seed."""
    value = os.environ.get("SPINORIUM_SEED")
    return int(value) if value else DEFAULT_SEED


# -- radial profiles -----------------------------------------------------------


def _gauss(k: int, r, l: int):
    e = np.exp(-r)
    return ((r * r) * e, (2 * r - r * r) * e, (2 - 4 * r + r * r) * e, (-6 + 6 * r - r * r) * e)[k]


def _lorentz(k: int, r, l: int):
    u = 1 + r * r
    return (1 / u, -2 * r / u**2, (6 * r * r - 2) / u**3, 24 * r * (1 - r * r) / u**4)[k]


def _power(k: int, r, l: int):
    # d^k/dr^k r^l = l (l-1) ... (l-k+1) r^(l-k)
    falling = math.prod(range(l - k + 1, l + 1)) if k <= l else 0
    return falling * r ** (l - k) if falling else 0 * r


@dataclass(frozen=True)
class RadialProfile:
    """A radial function with analytic derivatives up to third order."""

    name: str
    formula: str
    func: Callable = field(repr=False, compare=False)

    def derivative(self, k: int, r, kappa: int):
        return self.func(k, r, kappa_to_l(kappa))

    def jet(self, r: float, kappa: int) -> RadialJet:
        f, f1, f2 = (float(self.derivative(k, r, kappa)) for k in range(3))
        return RadialJet(r, f, f1, f2)


PROFILES = {
    "gauss": RadialProfile("gauss", "r^2 exp(-r)", _gauss),
    "lorentz": RadialProfile("lorentz", "1/(1+r^2)", _lorentz),
    "power": RadialProfile("power", "r^l", _power),
}


# -- sweep ---------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    kappa_max: int = 6
    radii: tuple[float, ...] = (0.5, 1.0, 2.0)
    profiles: tuple[str, ...] = ("gauss", "lorentz", "power")
    tolerance: float = 1e-10
    relations: tuple[str, ...] | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.kappa_max < 1:
            raise ValueError("kappa_max must be >= 1")
        if not self.radii or any(not r > 0 for r in self.radii):
            raise ValueError("radii must be positive")
        unknown = [p for p in self.profiles if p not in PROFILES]
        if unknown or not self.profiles:
            raise ValueError(f"unknown radial profiles {unknown}; known: {sorted(PROFILES)}")
        if self.tolerance < 0:
            raise ValueError("tolerance must be non-negative")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def kappas(self) -> list[int]:
        return [k for k in range(-self.kappa_max, self.kappa_max + 1) if k]


@dataclass(frozen=True)
class VerificationResult:
    relation_id: str
    variant: str | None
    kappa: int
    mu: HalfInt
    radial_profile: str
    r: float
    residual: float | None  # None when inapplicable
    passed: bool
    status: str  # "pass" | "fail" | "inapplicable"

    @property
    def case_id(self) -> str:
        v = self.variant or ""
        return f"{self.relation_id}{v} kappa={self.kappa} mu={self.mu} {self.radial_profile} r={self.r:g}"


def _residual(lhs: SpectralField, entry: RelationEntry, kappa: int, mu: HalfInt, jet: RadialJet, variant) -> float:
    a = lhs.coefficients(jet)
    b = eval_rhs(entry, kappa, mu, jet, variant).coefficients()
    return max((abs(a.get(k, 0j) - b.get(k, 0j)) for k in a.keys() | b.keys()), default=0.0)


def _judge(entry, variant, kappa, mu, profile, jet, lhs, tolerance) -> VerificationResult:
    try:
        res = _residual(lhs, entry, kappa, mu, jet, variant)
    except JetDepthError:
        return VerificationResult(entry.id, variant, kappa, mu, profile, jet.r, None, False, "inapplicable")
    ok = res <= tolerance
    return VerificationResult(entry.id, variant, kappa, mu, profile, jet.r, res, ok, "pass" if ok else "fail")


def verify_relation(
    entry: RelationEntry,
    kappa: int,
    mu,
    jet: RadialJet,
    variant: str | None = None,
    tolerance: float = 1e-10,
    profile: str = ANGULAR_PROFILE,
) -> VerificationResult:
    mu = HalfInt.of(mu)
    if variant not in entry.variants:
        raise ValueError(f"relation {entry.id} has variants {entry.variants}, got {variant!r}")
    lhs = apply_operator_expr(entry.lhs(variant), field_from_spinor(SpinorIndex(kappa, mu), jet))
    return _judge(entry, variant, kappa, mu, profile, jet, lhs, tolerance)


def _jets(entry: RelationEntry, kappa: int, config: SweepConfig) -> list[tuple[str, RadialJet]]:
    if entry.kind != "second_kind":
        return [(ANGULAR_PROFILE, RadialJet(1.0, 1.0, 0.0, 0.0))]
    return [(name, PROFILES[name].jet(r, kappa)) for name in config.profiles for r in config.radii]


def _sweep_entry(entry: RelationEntry, config: SweepConfig) -> list[VerificationResult]:
    out = []
    for variant in entry.variants:
        expr = entry.lhs(variant)
        for kappa in config.kappas():
            for mu in mu_range(kappa):
                # the LHS keeps its radial content symbolic, so one application serves every jet
                lhs = apply_operator_expr(expr, field_from_spinor(SpinorIndex(kappa, mu)))
                for name, jet in _jets(entry, kappa, config):
                    out.append(_judge(entry, variant, kappa, mu, name, jet, lhs, config.tolerance))
    return out


def _select(config: SweepConfig, entries: Iterable[RelationEntry] | None) -> list[RelationEntry]:
    entries = list(entries) if entries is not None else catalog()
    if config.relations is None:
        return entries
    by_id = {e.id: e for e in entries}
    unknown = [r for r in config.relations if r not in by_id]
    if unknown:
        raise KeyError(f"unknown relation ids {unknown}")
    wanted = set(config.relations)
    return [e for e in entries if e.id in wanted]


def verify_all(config: SweepConfig = SweepConfig(), entries: Iterable[RelationEntry] | None = None) -> list[VerificationResult]:
    """Exhaustive sweep; results come back in catalog order whatever `jobs` is."""
    selected = _select(config, entries)
    if config.jobs > 1 and len(selected) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_sweep_entry, selected, [config] * len(selected)))
    else:
        chunks = [_sweep_entry(e, config) for e in selected]
    return [res for chunk in chunks for res in chunk]


@dataclass(frozen=True)
class RelationSummary:
    relation_id: str
    cases: int
    failures: int
    inapplicable: int
    max_residual: float

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.inapplicable < self.cases


def summarize(results: Iterable[VerificationResult]) -> list[RelationSummary]:
    rows: dict[str, list] = {}
    for res in results:
        row = rows.setdefault(res.relation_id, [0, 0, 0, 0.0])
        row[0] += 1
        row[1] += res.status == "fail"
        row[2] += res.status == "inapplicable"
        if res.residual is not None:
            row[3] = max(row[3], res.residual)
    return [RelationSummary(rid, *row) for rid, row in rows.items()]


# -- orthonormality ------------------------------------------------------------


def _theta_profiles(indices: list[SpinorIndex], x: np.ndarray) -> np.ndarray:
    """Omega components at phi = 0 on the Gauss nodes; shape (n, 2, n_theta), real."""
    theta = np.arccos(x)
    return np.stack([eval_spinor(idx, theta, 0.0).real for idx in indices])


def orthonormality_check(kappa_max: int) -> float:
    """Max |<Omega_a, Omega_b> - delta_ab| over all |kappa| <= kappa_max.

    Uses the Gauss-Legendre x uniform-phi product grid. The phi sum factors out:
    every component of Omega_{kappa mu} carries e^{i(mu -+ 1/2) phi}, so the
    pair integral is a theta sum times S(mu_b - mu_a), S(d) = sum_phi w e^{i d phi}.
    """
    if kappa_max < 1:
        raise ValueError("kappa_max must be >= 1")
    l_max = kappa_max
    n_theta, n_phi = 2 * l_max + 2, 4 * l_max + 5
    x, w = np.polynomial.legendre.leggauss(n_theta)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    max_d = 2 * kappa_max
    s_of_d = {d: abs(np.sum(np.exp(1j * d * phi)) * 2 * np.pi / n_phi) for d in range(-max_d, max_d + 1)}

    groups: dict[HalfInt, list[SpinorIndex]] = {}
    for kappa in (k for k in range(-kappa_max, kappa_max + 1) if k):
        for mu in mu_range(kappa):
            groups.setdefault(mu, []).append(SpinorIndex(kappa, mu))
    mus = sorted(groups, key=lambda m: m.twice)
    # weighted theta profiles flattened over (spin, node)
    prof = {mu: _theta_profiles(groups[mu], x).reshape(len(groups[mu]), -1) for mu in mus}
    wt = np.tile(w, 2)
    worst = 0.0
    for a in mus:
        pa = prof[a] * wt
        for b in mus:
            d = (b - a).twice // 2
            block = (pa @ prof[b].T) * s_of_d[d]
            if a == b:
                block = block - np.eye(len(block))
            worst = max(worst, float(np.max(np.abs(block))))
    return worst


def spinor_inner_product(a: SpinorIndex, b: SpinorIndex) -> complex:
    theta, phi, w = sphere_grid(max(a.l, b.l) + 1)
    va = eval_spinor(a, theta, phi)
    vb = eval_spinor(b, theta, phi)
    return complex(np.sum(w * np.sum(np.conj(va) * vb, axis=0)))


# -- pointwise oracle ----------------------------------------------------------


def pointwise_crosscheck(
    entry: RelationEntry,
    kappa: int,
    mu,
    n_points: int = 100,
    variant: str | None = None,
    profile: str = "gauss",
    r: float = 1.0,
    seed: int | None = None,
) -> float:
    """Max pointwise |LHS - RHS| at random directions plus both poles.

    LHS comes from the Cartesian polynomial engine, RHS from eval_spinor on the
    catalog targets, so the spectral engine takes no part.
    """
    mu = HalfInt.of(mu)
    idx = SpinorIndex(kappa, mu)
    if variant is None and entry.variants != (None,):
        variant = entry.variants[0]
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    cos_t = np.concatenate([[1.0, -1.0], rng.uniform(-1.0, 1.0, n_points)])
    phi = np.concatenate([[0.0, 0.0], rng.uniform(0.0, 2 * np.pi, n_points)])
    theta = np.arccos(cos_t)
    pts = r * np.stack([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), cos_t], axis=1)

    if entry.kind == "second_kind":
        prof = PROFILES[profile]
        radial = lambda k, rr: prof.derivative(k, rr, kappa)  # noqa: E731
        jet = prof.jet(r, kappa)
    else:
        radial = lambda k, rr: np.ones_like(rr) if k == 0 else np.zeros_like(rr)  # noqa: E731
        jet = RadialJet(r, 1.0, 0.0, 0.0)

    expr = entry.lhs(variant)
    # each atom raises the polynomial degree by at most two
    size = idx.l + 2 + 2 * sum(count_atoms(expr, a) for a in ("n", "nabla", "L", "J"))
    lhs = cartesian.apply_expr(expr, cartesian.spinor_field(idx, size)).evaluate(pts, radial)

    s = variant_sign(variant)
    rhs = np.zeros_like(lhs)
    for term in entry.terms:
        coeff = term.coefficient(kappa, mu, s)
        if coeff == 0:
            continue
        t_kappa, t_mu = term.target(kappa, mu, s)
        rhs += coeff * term.radial.apply(jet, kappa, s) * eval_spinor(SpinorIndex(t_kappa, t_mu), theta, phi)
    return float(np.max(np.abs(lhs - rhs)))


# -- engine self-checks --------------------------------------------------------


def random_field(rng: np.random.Generator, kappa_max: int = 5, n_terms: int = 4) -> SpectralField:
    """Random complex combination of spinors with |kappa| <= kappa_max."""
    total = SpectralField({})
    for _ in range(n_terms):
        kappa = int(rng.choice([k for k in range(-kappa_max, kappa_max + 1) if k]))
        mus = mu_range(kappa)
        mu = mus[int(rng.integers(len(mus)))]
        amp = complex(rng.normal(), rng.normal())
        total = total + field_from_spinor(SpinorIndex(kappa, mu)).scale(amp)
    return total


def _diff(a, b, jet: RadialJet) -> float:
    if isinstance(a, VectorField):
        return max(_diff(x, y, jet) for x, y in zip(a, b))
    return a.max_abs_difference(b, jet)


# (name, lhs, rhs expression or None for zero, scalar factor)
_IDENTITIES = [
    ("LxL = iL", "(cross L L)", "L", 1j),
    ("sigma x sigma = 2i sigma", "(cross sigma sigma)", "sigma", 2j),
    ("JxJ = iJ", "(cross J J)", "J", 1j),
    ("n x nabla = -nabla x n", "(cross n nabla)", "(cross nabla n)", -1),
    ("n.L = 0", "(dot n L)", None, 0),
    ("L.n = 0", "(dot L n)", None, 0),
    ("nabla.L = 0", "(dot nabla L)", None, 0),
    ("L.nabla = 0", "(dot L nabla)", None, 0),
    ("n.(L x n) = 2i", "(dot n (cross L n))", "I", 2j),
    ("(n x L).n = 2i", "(dot (cross n L) n)", "I", 2j),
    ("n x (L x n) = L", "(cross n (cross L n))", "L", 1),
    ("(n x L) x n = L", "(cross (cross n L) n)", "L", 1),
]


def operator_identity_residuals(n_fields: int = 20, kappa_max: int = 5, seed: int | None = None) -> dict[str, float]:
    """Max residual of each operator identity over random fields and jets."""
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    worst = {name: 0.0 for name, *_ in _IDENTITIES}
    for _ in range(n_fields):
        fld = random_field(rng, kappa_max)
        jet = RadialJet(float(rng.uniform(0.3, 3.0)), *rng.normal(size=3))
        for name, lhs_text, rhs_text, factor in _IDENTITIES:
            lhs = apply_operator_expr(parse(lhs_text), fld)
            if rhs_text is None:
                rhs = lhs.scale(0) if isinstance(lhs, SpectralField) else None
                res = lhs.max_abs_difference(rhs, jet)
            else:
                rhs = apply_operator_expr(parse(rhs_text), fld)
                if isinstance(rhs, VectorField):
                    rhs = VectorField(*(c.scale(factor) for c in rhs))
                else:
                    rhs = rhs.scale(factor)
                res = _diff(lhs, rhs, jet)
            worst[name] = max(worst[name], res)
    return worst


def coefficient_family_residuals(l_max: int = 8) -> dict[str, float]:
    """Ladder and direction-cosine tables against quadrature projections.

    L_+- Y_lm is built pointwise from theta derivatives, e^{+-i phi}(+-d_theta +
    i cot(theta) d_phi); Gauss nodes never sit on the poles.
    """
    theta, phi, w = sphere_grid(l_max + 2)
    nq = {
        0: np.cos(theta),
        1: -np.sin(theta) * np.exp(1j * phi) / math.sqrt(2),
        -1: np.sin(theta) * np.exp(-1j * phi) / math.sqrt(2),
    }
    ylm = {(l, m): eval_ylm(l, m, theta, phi) for l in range(l_max + 2) for m in range(-l, l + 1)}

    def project(values, l, m):
        if (l, m) not in ylm:
            return 0j
        return np.sum(w * np.conj(ylm[l, m]) * values)

    worst = {"ladder": 0.0, "direction_cosine": 0.0}
    for l in range(l_max + 1):
        for m in range(-l, l + 1):
            h = HarmonicIndex(l, m)
            dy = ylm_theta_derivative(l, m, theta, phi)
            cot = np.cos(theta) / np.sin(theta)
            for sign in (1, -1):
                values = np.exp(sign * 1j * phi) * (sign * dy - cot * m * ylm[l, m])
                coef, target = ladder_action(sign, h)
                # the projection onto the claimed target must match, and nothing may be left over
                err = abs(project(values, l, m + sign) - coef)
                err = max(err, abs(np.sum(w * np.abs(values) ** 2) - coef**2))
                worst["ladder"] = max(worst["ladder"], float(err))
            for q, values in nq.items():
                values = values * ylm[l, m]
                (c_up, _), (c_down, _) = direction_cosine_action(q, h)
                err = max(abs(project(values, l + 1, m + q) - c_up), abs(project(values, l - 1, m + q) - c_down))
                err = max(err, abs(np.sum(w * np.abs(values) ** 2) - c_up**2 - c_down**2))
                worst["direction_cosine"] = max(worst["direction_cosine"], float(err))
    return worst


def gradient_fd_residual(n_points: int = 50, seed: int | None = None, kappa_max: int = 3) -> float:
    """Max relative gap between apply_nabla and central differences (h = 1e-5 r)."""
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    prof = PROFILES["gauss"]
    combo = []
    for _ in range(3):
        kappa = int(rng.choice([k for k in range(-kappa_max, kappa_max + 1) if k]))
        mus = mu_range(kappa)
        combo.append((SpinorIndex(kappa, mus[int(rng.integers(len(mus)))]), complex(*rng.normal(size=2))))
    combined = SpectralField({})
    for idx, amp in combo:
        combined = combined + field_from_spinor(idx).scale(amp)
    grads = [apply_nabla(axis, combined) for axis in range(3)]

    def pointwise(x):
        r = float(np.linalg.norm(x))
        th, ph = math.acos(x[2] / r), math.atan2(x[1], x[0])
        return prof.derivative(0, r, 1) * sum(amp * eval_spinor(idx, np.array([th]), ph)[:, 0] for idx, amp in combo)

    worst = 0.0
    for _ in range(n_points):
        r = rng.uniform(0.4, 2.5)
        th, ph = math.acos(rng.uniform(-0.95, 0.95)), rng.uniform(0, 2 * math.pi)
        x = r * np.array([math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th)])
        jet = prof.jet(r, 1)
        h = 1e-5 * r
        for axis in range(3):
            step = np.zeros(3)
            step[axis] = h
            fd = (pointwise(x + step) - pointwise(x - step)) / (2 * h)
            got = grads[axis].evaluate(th, ph, jet)
            worst = max(worst, float(np.max(np.abs(got - fd))) / max(float(np.max(np.abs(got))), 1e-3))
    return worst


# -- negative control ----------------------------------------------------------


@dataclass(frozen=True)
class MutationOutcome:
    relation_id: str
    term_index: int
    max_residual: float
    failures: int
    cases: int

    def detected(self, threshold: float = 1e-3) -> bool:
        return self.failures > 0 and self.max_residual > threshold


def mutation_control(n_terms: int = 10, config: SweepConfig = SweepConfig(), seed: int | None = None) -> list[MutationOutcome]:
    """Flip the sign of randomly chosen catalog terms, one at a time, and re-sweep."""
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    slots = [(e, i) for e in catalog() for i in range(len(e.terms))]
    picks = rng.choice(len(slots), size=n_terms, replace=False)
    outcomes = []
    for p in sorted(int(x) for x in picks):
        entry, i = slots[p]
        mutant = entry.with_term(i, entry.terms[i].flipped())
        sub = SweepConfig(config.kappa_max, config.radii, config.profiles, config.tolerance, None, 1)
        results = verify_all(sub, [mutant])
        residuals = [r.residual for r in results if r.residual is not None]
        outcomes.append(
            MutationOutcome(entry.id, i, max(residuals, default=0.0), sum(not r.passed for r in results), len(results))
        )
    return outcomes
