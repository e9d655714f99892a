"""Time-fractional evolution: spectral diffusion solver, Hermite drift
solution, termwise fractional-derivative operators."""

import math
import warnings

import numpy as np
import pytest

import oracles
from mittleff import (
    ConvergenceError,
    DomainError,
    EnvelopeError,
    GenPowerSeries,
    GridFunction,
    MLParams,
    gaussian_profile,
    grid_second_moment,
    hermite_kdf,
    ml_derivative_apply,
    ml_e,
    ml_semigroup_sum,
    ml_series_frac_powers,
    ml_series_integer_powers,
    rl_frac_derivative,
    solve_drift_pde,
    solve_fractional_diffusion,
)

WIDE = gaussian_profile(-10.0, 10.0, 256)
NARROW = gaussian_profile(-8.0, 8.0, 256)


def test_grid_function_validation():
    with pytest.raises(DomainError):
        GridFunction(0.0, 1.0, 1, (1.0,))
    with pytest.raises(DomainError):
        GridFunction(1.0, 0.0, 4, (1.0, 1.0, 1.0, 1.0))
    with pytest.raises(DomainError):
        GridFunction(0.0, 1.0, 4, (1.0, 2.0))
    with pytest.raises(DomainError):
        GridFunction(0.0, 1.0, 2, (1.0, math.nan))


def test_grid_geometry():
    g = GridFunction(-1.0, 1.0, 4, (0.0, 0.0, 0.0, 0.0))
    assert g.dx == 0.5
    xs = g.xs()
    assert xs[0] == -1.0
    # endpoint-exclusive: the wrap point x_max never appears
    assert xs[-1] == 0.5


def test_gaussian_profile_values():
    xs = WIDE.xs()
    assert np.max(np.abs(np.asarray(WIDE.values) - np.exp(-(xs**2)))) == 0.0


def test_diffusion_time_zero_is_identity():
    out = solve_fractional_diffusion(WIDE, 0.7, 0.0)
    assert out.values == WIDE.values


@pytest.mark.parametrize("t", [0.5, 1.0])
def test_diffusion_matches_heat_flow_at_alpha_one(t):
    out = solve_fractional_diffusion(WIDE, 1.0, t)
    xs = out.xs()
    worst = max(
        abs(v - float(oracles.heat_solution(x, t)))
        for x, v in zip(xs, out.values)
    )
    assert worst < 1e-6


@pytest.mark.parametrize("alpha", [0.5, 0.8, 1.0])
def test_diffusion_conserves_mass(alpha):
    # the DC mode carries the mass and its decay factor is exactly 1
    m0 = WIDE.dx * math.fsum(WIDE.values)
    out = solve_fractional_diffusion(WIDE, alpha, 0.7)
    m1 = out.dx * math.fsum(out.values)
    assert abs(m1 - m0) < 1e-8 * m0


@pytest.mark.parametrize("alpha", [0.5, 0.8, 1.0])
@pytest.mark.parametrize("t", [0.5, 1.0])
def test_second_moment_growth(alpha, t):
    base = grid_second_moment(WIDE)
    out = solve_fractional_diffusion(WIDE, alpha, t)
    got = grid_second_moment(out) - base
    want = float(oracles.second_moment_growth(alpha, t))
    assert abs(got - want) < 1e-3


def test_two_half_steps_compose_at_alpha_one():
    one = solve_fractional_diffusion(WIDE, 1.0, 0.5)
    half = solve_fractional_diffusion(WIDE, 1.0, 0.25)
    two = solve_fractional_diffusion(half, 1.0, 0.25)
    diff = np.max(np.abs(np.asarray(one.values) - np.asarray(two.values)))
    assert diff < 1e-8


@pytest.mark.parametrize("alpha", [0.5, 1.0])
@pytest.mark.parametrize("k", [0.5, 1.0, 2.0])
def test_scalar_mode_composition(alpha, k):
    # two evolutions of a single mode agree with the compound-argument
    # sum, the scalar shadow of the solver-level composition; the
    # alpha = 0.5, k = 2 cell carries cross terms near 0.25 out to
    # order ~90, so it needs the deeper truncation (80 leaves a tail
    # of order one there)
    z = -((0.5**alpha) * k * k)
    n_max = 150 if k == 2.0 and alpha == 0.5 else 80
    p = MLParams(alpha, 1.0)
    product = ml_e(p, z).value ** 2
    summed = ml_semigroup_sum(z, z, alpha, 1.0, n_max)
    assert abs(product - summed.value) < 1e-6


@pytest.mark.parametrize("a,b,t", [(1.0, 0.5, 0.4), (2.0, 1.0, 0.2), (0.5, 0.25, 1.0)])
def test_drift_matches_closed_form_at_alpha_one(a, b, t):
    sol = solve_drift_pde(a, b, 1.0, t, NARROW)
    xs = sol.grid.xs()
    worst = max(
        abs(v - float(oracles.weyl_drift_solution(x, a, b, t)))
        for x, v in zip(xs, sol.grid.values)
    )
    assert worst < 1e-8


def test_drift_time_zero():
    sol = solve_drift_pde(1.0, 0.5, 0.8, 0.0, NARROW)
    xs = sol.grid.xs()
    assert np.allclose(sol.grid.values, np.exp(-(xs**2)), rtol=0.0, atol=0.0)
    assert sol.est_error == 0.0
    assert sol.terms_used == 1


def test_drift_refuses_divergent_series():
    with pytest.raises(ConvergenceError):
        solve_drift_pde(1.0, 0.5, 0.5, 1.0, NARROW)


def test_drift_alpha_gate():
    with pytest.raises(DomainError):
        solve_drift_pde(1.0, 0.5, 1.2, 0.4, NARROW)


def test_diffusion_experimental_gate():
    with pytest.raises(DomainError):
        solve_fractional_diffusion(WIDE, 2.5, 0.1)
    out = solve_fractional_diffusion(WIDE, 2.5, 0.1, experimental=True)
    assert all(math.isfinite(v) for v in out.values)


def test_diffusion_envelope_refusal():
    # alpha in (1, 2) has no large-argument route, so a huge time pushes
    # the first weighted mode beyond the evaluator and must refuse
    with pytest.raises(EnvelopeError):
        solve_fractional_diffusion(WIDE, 1.5, 3000.0)


def test_boundary_contamination_warning():
    with pytest.warns(UserWarning):
        solve_fractional_diffusion(gaussian_profile(-2.0, 2.0, 64), 1.0, 0.1)


def test_diffusion_quiet_on_wide_grid():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        solve_fractional_diffusion(WIDE, 1.0, 0.1)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
def test_rl_derivative_eigenrelation(alpha):
    lam = 0.7
    base = ml_series_frac_powers(lam, alpha, 40)
    d = rl_frac_derivative(base, alpha)
    # termwise: coefficient picks up one factor of lam, ladder unchanged
    assert len(d.terms) == 39
    for (dc, dp), (bc, bp) in zip(d.terms, base.terms):
        assert abs(dp - bp) < 1e-12
        assert abs(dc - lam * bc) <= 1e-12 * max(1.0, abs(lam * bc))
    # the constant leaves behind the lone x^(-alpha) piece
    assert len(d.singular) == 1
    cs, ps = d.singular[0]
    assert abs(ps + alpha) < 1e-15
    assert abs(cs - 1.0 / math.gamma(1.0 - alpha)) < 1e-14


def test_rl_derivative_integer_order_has_no_singular_part():
    base = ml_series_frac_powers(0.7, 1.0, 10)
    d = rl_frac_derivative(base, 1.0)
    assert d.singular == ()
    for (dc, _dp), (bc, _bp) in zip(d.terms, base.terms):
        assert abs(dc - 0.7 * bc) <= 1e-12 * max(1.0, abs(0.7 * bc))


def test_rl_derivative_input_checks():
    with pytest.raises(DomainError):
        rl_frac_derivative(GenPowerSeries(terms=((1.0, 0.2),)), 1.5)
    with pytest.raises(DomainError):
        rl_frac_derivative(ml_series_frac_powers(0.5, 0.5, 5), 0.0)
    with pytest.raises(DomainError):
        rl_frac_derivative(
            GenPowerSeries(terms=(), singular=((1.0, -0.5),)), 0.5
        )


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ml_derivative_eigenrelation(n):
    lam = 0.7
    base = ml_series_integer_powers(lam, n, 30)
    d = ml_derivative_apply(base, n)
    assert len(d.terms) == 29
    for (dc, dp), (bc, bp) in zip(d.terms, base.terms):
        assert abs(dp - bp) < 1e-12
        assert abs(dc - lam * bc) <= 1e-12 * max(1.0, abs(lam * bc))


def test_ml_derivative_annihilates_constants():
    d = ml_derivative_apply(GenPowerSeries(terms=((3.0, 0.0),)), 2)
    assert d.terms == ()


def test_ml_derivative_negative_landing_is_an_error():
    with pytest.raises(DomainError):
        ml_derivative_apply(GenPowerSeries(terms=((1.0, 0.5),)), 1)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
def test_hermite_kdf_matches_reference(n):
    got = hermite_kdf(n, 0.7, -0.3)
    want = float(oracles.hermite_kdf(n, 0.7, -0.3))
    assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


def test_hermite_kdf_order_cap():
    with pytest.raises(DomainError):
        hermite_kdf(61, 0.5, 0.5)


def test_gen_power_series_validation():
    with pytest.raises(DomainError):
        GenPowerSeries(terms=((1.0, -0.5),))
    with pytest.raises(DomainError):
        GenPowerSeries(terms=((1.0, 1.0), (1.0, 0.5)))
    with pytest.raises(DomainError):
        GenPowerSeries(terms=((1.0, 1.0), (2.0, 1.0)))
    with pytest.raises(DomainError):
        GenPowerSeries(terms=(), singular=((1.0, 0.5),))


def test_gen_power_series_evaluate():
    s = GenPowerSeries(terms=((2.0, 0.0), (3.0, 1.5)))
    assert s.evaluate(0.0) == 2.0
    assert abs(s.evaluate(4.0) - (2.0 + 3.0 * 8.0)) < 1e-12
    with pytest.raises(DomainError):
        s.evaluate(-1.0)
    sing = GenPowerSeries(terms=(), singular=((1.0, -0.5),))
    with pytest.raises(DomainError):
        sing.evaluate(0.0)


def test_grid_second_moment_of_gaussian():
    assert abs(grid_second_moment(WIDE) - 0.5) < 1e-10


def test_grid_second_moment_needs_positive_mass():
    g = GridFunction(-1.0, 1.0, 4, (-1.0, -1.0, -1.0, -1.0))
    with pytest.raises(DomainError):
        grid_second_moment(g)
