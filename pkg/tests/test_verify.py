import math

import pytest

from spinorium.indices import HalfInt, SpinorIndex, mu_range
from spinorium.relations import catalog, get_entry
from spinorium.spectral import RadialJet
from spinorium.verify import (
    DEFAULT_SEED,
    default_seed,
    PROFILES,
    SweepConfig,
    coefficient_family_residuals,
    gradient_fd_residual,
    orthonormality_check,
    pointwise_crosscheck,
    spinor_inner_product,
    summarize,
    verify_all,
    verify_relation,
)

UNIT = RadialJet(1.0, 1.0, 0.0, 0.0)


def test_verify_relation_examples():
    res = verify_relation(get_entry("3.1.3"), 1, HalfInt(1), UNIT)
    assert res.passed and res.residual < 1e-12 and res.status == "pass"
    assert verify_relation(get_entry("3.2.5"), 2, HalfInt(-3), UNIT).residual < 1e-12
    jet = PROFILES["gauss"].jet(1.0, -2)
    assert verify_relation(get_entry("3.3.8"), -2, HalfInt(1), jet, profile="gauss").residual < 1e-10


def test_variant_required_for_paired():
    with pytest.raises(ValueError):
        verify_relation(get_entry("3.1.2"), 1, HalfInt(1), UNIT)
    assert verify_relation(get_entry("3.1.2"), 1, HalfInt(1), UNIT, variant="-").passed


def test_short_jet_is_inapplicable():
    res = verify_relation(get_entry("3.3.8"), 2, HalfInt(1), RadialJet(1.0, 1.0, 0.3))
    assert res.status == "inapplicable" and not res.passed and res.residual is None


def test_kappa_max_one_touches_every_relation():
    results = verify_all(SweepConfig(kappa_max=1))
    rows = summarize(results)
    assert [r.relation_id for r in rows] == [e.id for e in catalog()]
    assert all(r.passed and r.cases >= 1 for r in rows)
    # two mu values for each of kappa = +-1; second kind runs 9 jets
    e = get_entry("3.3.4")
    assert next(r for r in rows if r.relation_id == "3.3.4").cases == 2 * 4 * 9
    assert next(r for r in rows if r.relation_id == "3.2.1").cases == 4
    assert e.is_paired


def test_tolerance_has_meaning():
    results = verify_all(SweepConfig(kappa_max=3, tolerance=1e-16))
    assert sum(not r.passed for r in results) > 0


def test_first_kind_ignores_radial_data():
    jets = [RadialJet(1.0, 1.0, 0.0, 0.0), RadialJet(2.7, 1.0, -3.0, 11.0)]
    for e in catalog():
        if e.kind == "second_kind":
            continue
        v = e.variants[-1]
        a, b = (verify_relation(e, -3, HalfInt(-1), jet, variant=v).residual for jet in jets)
        assert a == b


def test_order_independent_of_jobs():
    config = SweepConfig(kappa_max=2, relations=("3.1.2", "3.3.3", "3.2.8"))
    serial = verify_all(config)
    parallel = verify_all(SweepConfig(kappa_max=2, relations=config.relations, jobs=2))
    assert serial == parallel
    assert [r.relation_id for r in serial][0] == "3.1.2"


def test_unknown_relation_in_config():
    with pytest.raises(KeyError):
        verify_all(SweepConfig(relations=("9.9.9",)))


@pytest.mark.parametrize(
    "kwargs",
    [{"kappa_max": 0}, {"radii": (1.0, -1.0)}, {"profiles": ("cubic",)}, {"tolerance": -1.0}, {"jobs": 0}],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SweepConfig(**kwargs)


def test_profiles_derivatives():
    for prof in PROFILES.values():
        for kappa in (-1, 3):
            r, h = 1.3, 1e-5
            for k in range(3):
                fd = (prof.derivative(k, r + h, kappa) - prof.derivative(k, r - h, kappa)) / (2 * h)
                assert prof.derivative(k + 1, r, kappa) == pytest.approx(fd, rel=1e-7, abs=1e-9)
    assert PROFILES["power"].jet(2.0, 3) == RadialJet(2.0, 8.0, 12.0, 12.0)


def test_orthonormality():
    assert orthonormality_check(6) < 1e-12
    assert orthonormality_check(1) < 1e-12
    a, b = SpinorIndex(-1, HalfInt(1)), SpinorIndex(1, HalfInt(1))
    assert abs(spinor_inner_product(a, a) - 1) < 1e-14
    assert abs(spinor_inner_product(b, SpinorIndex(-2, HalfInt(1)))) < 1e-13


def test_orthonormality_sees_a_broken_basis(monkeypatch):
    import spinorium.verify as v

    real = v.eval_spinor

    def skewed(idx, theta, phi):
        out = real(idx, theta, phi)
        return out * 1.001 if idx.kappa == 2 else out

    monkeypatch.setattr(v, "eval_spinor", skewed)
    assert orthonormality_check(3) > 1e-3


def test_pointwise_examples():
    assert pointwise_crosscheck(get_entry("3.1.1"), 1, HalfInt(1), 100) < 1e-10
    assert pointwise_crosscheck(get_entry("3.1.4"), -1, HalfInt(1), 100) < 1e-10
    assert pointwise_crosscheck(get_entry("3.3.36"), 3, HalfInt(-3), 50, profile="lorentz", r=0.6) < 1e-10
    assert pointwise_crosscheck(get_entry("3.2.29"), -2, HalfInt(3), 50, variant="-") < 1e-10


def test_pointwise_all_entries_small_kappa():
    worst = 0.0
    for e in catalog():
        for v in e.variants:
            for kappa in (-2, 1):
                for mu in mu_range(kappa):
                    worst = max(worst, pointwise_crosscheck(e, kappa, mu, 10, variant=v))
    assert worst < 1e-10


def test_pointwise_detects_mutation():
    e = get_entry("3.2.12")
    bad = e.with_term(1, e.terms[1].flipped())
    assert pointwise_crosscheck(bad, 2, HalfInt(1), 20, variant="+") > 1e-3


def test_seed_from_environment(monkeypatch):
    monkeypatch.delenv("SPINORIUM_SEED", raising=False)
    assert default_seed() == DEFAULT_SEED
    monkeypatch.setenv("SPINORIUM_SEED", "17")
    assert default_seed() == 17
    # the poles are always sampled, so the residual stays finite for any seed
    assert math.isfinite(pointwise_crosscheck(get_entry("3.2.20"), 3, HalfInt(5), 5, variant="+"))


def test_engine_oracles():
    fam = coefficient_family_residuals(8)
    assert fam["ladder"] < 1e-10 and fam["direction_cosine"] < 1e-10
    assert gradient_fd_residual(10, seed=3) < 1e-6
