import math

import numpy as np
import pytest
from scipy import stats

from ggrey import oracles
from ggrey.errors import DomainError, UsageError
from ggrey.timechange import (LAPLACE_PAIRS, TimeChangeParams, density_T, density_Y,
                              density_Y_paper_literal, interior_points, laplace_pairs,
                              pde_residual_T, pde_residual_Y, sample_T, sample_Y_path)

from frozen import LTILDE_05_1_1

RHOS = [0.2, 0.5, 0.8]


@pytest.mark.parametrize("rho", [0.0, 1.0, 1.3])
def test_params_reject_rho(rho):
    with pytest.raises(DomainError):
        TimeChangeParams(rho)


# ---- densities

@pytest.mark.parametrize("rho", RHOS)
@pytest.mark.parametrize("x", [0.5, 1.0, 3.0])
def test_density_T_mass(rho, x):
    assert oracles.density_mass_T(rho, x) == pytest.approx(1.0, rel=1e-10)


@pytest.mark.parametrize("rho", RHOS)
@pytest.mark.parametrize("t", [0.3, 1.0, 2.0])
def test_density_Y_mass(rho, t):
    assert oracles.density_mass_Y(rho, t) == pytest.approx(1.0, rel=1e-10)


def test_density_values():
    rho = 0.5
    assert density_T(0.25, 1.0, rho) == pytest.approx(1 / (math.pi * math.sqrt(0.25 * 0.75)))
    assert density_Y(4.0, 2.0, rho) == pytest.approx(math.sqrt(2) / (math.pi * 4 * math.sqrt(2)))
    assert density_T(1.5, 1.0, rho) == 0.0
    assert density_Y(1.0, 2.0, rho) == 0.0
    assert density_Y(np.array([0.5, 3.0]), 1.0, rho).shape == (2,)


def test_density_Y_is_law_of_tY():
    # l(y, t) = l(y/t, 1) / t
    for y, t in ((3.0, 2.0), (5.0, 0.7)):
        assert density_Y(y, t, 0.3) == pytest.approx(density_Y(y / t, 1.0, 0.3) / t, rel=1e-14)


def test_density_domain_errors():
    with pytest.raises(DomainError):
        density_Y(2.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        density_T(0.5, 0.0, 0.5)


def test_paper_literal_density_mass_is_not_one():
    rho, t = 0.5, 2.0
    f = lambda y: density_Y_paper_literal(y, t, rho)  # noqa: E731
    mass = oracles._quad(f, t, 50.0) + oracles._quad(f, 50.0, math.inf)
    assert mass == pytest.approx(0.5, rel=1e-8)
    assert density_Y_paper_literal(3.0, 1.0, rho) == pytest.approx(density_Y(3.0, 1.0, rho))
    with pytest.raises(DomainError):
        density_Y_paper_literal(2.0, 0.5, rho)


# ---- samplers

@pytest.mark.parametrize("rho", RHOS)
def test_sample_T_ks(rho):
    x, n = 2.0, 20_000
    t = sample_T(x, rho, np.random.default_rng(1), size=n)
    d = stats.kstest(t / x, stats.beta(rho, 1 - rho).cdf).statistic
    assert d < stats.kstwo.ppf(0.999, n)


def test_sample_Y_path_shapes_and_linearity():
    rng = np.random.default_rng(2)
    times = np.array([0.0, 0.5, 1.0, 2.0])
    p = sample_Y_path(0.5, times, rng, size=6)
    assert p.shape == (6, 4)
    assert np.allclose(p[:, 3], 2 * p[:, 2])
    assert np.all(p[:, 0] == 0.0)
    assert np.all(p[:, 2] >= 1.0)
    assert sample_Y_path(0.5, times, rng).shape == (4,)
    with pytest.raises(DomainError):
        sample_Y_path(0.5, [-1.0], rng)


def test_sample_Y_laplace():
    y = sample_Y_path(0.5, [1.0], np.random.default_rng(4), size=200_000)[:, 0]
    vals = np.exp(-y)
    assert abs(vals.mean() - LTILDE_05_1_1) < 4 * vals.std() / math.sqrt(vals.size)


# ---- Laplace pairs

PAIR_ARGS = [(0.5, 1.0), (2.0, 0.7), (1.3, 3.0)]


@pytest.mark.parametrize("which", LAPLACE_PAIRS)
@pytest.mark.parametrize("rho", RHOS)
@pytest.mark.parametrize("args", PAIR_ARGS)
def test_laplace_pairs_vs_quadrature(which, rho, args):
    got = laplace_pairs(rho, which, args)
    ref = oracles.laplace_pair_quad(rho, which, args)
    assert got == pytest.approx(ref, rel=1e-9)


def test_laplace_reference_value():
    assert laplace_pairs(0.5, "l_space", (1.0, 1.0)) == pytest.approx(LTILDE_05_1_1, rel=1e-13)
    assert oracles.laplace_Y_quad(0.5, 1.0) == pytest.approx(LTILDE_05_1_1, rel=1e-10)


def test_laplace_pairs_errors():
    with pytest.raises(UsageError):
        laplace_pairs(0.5, "bogus", (1.0, 1.0))
    with pytest.raises(DomainError):
        laplace_pairs(0.5, "h_level", (0.0, 1.0))
    with pytest.raises(DomainError):
        laplace_pairs(0.5, "l_space", (-1.0, 1.0))


def test_laplace_at_zero_is_mass():
    assert laplace_pairs(0.4, "h_time", (0.0, 2.0)) == pytest.approx(1.0)
    assert laplace_pairs(0.4, "l_space", (0.0, 2.0)) == pytest.approx(1.0)


# ---- transport equations

@pytest.mark.parametrize("rho", RHOS)
def test_pde_residuals_small(rho):
    pts = interior_points()
    assert pde_residual_T(rho, pts) < 1e-6
    assert pde_residual_Y(rho, pts) < 1e-6


def test_pde_residual_second_order():
    pts = interior_points()
    r1 = pde_residual_Y(0.5, pts, step=2e-2)
    r2 = pde_residual_Y(0.5, pts, step=1e-2)
    assert r1 / r2 == pytest.approx(4.0, rel=0.1)


def test_interior_points_avoid_singular_lines():
    pts = interior_points()
    assert np.all(pts[:, 0] >= 0.2) and np.all(pts[:, 0] < pts[:, 1])


@pytest.mark.parametrize("pt", [(1e-5, 1.0), (0.5, 0.5 + 1e-5)])
def test_pde_residual_refuses_singular_set(pt):
    with pytest.raises(DomainError):
        pde_residual_T(0.5, [pt])
    with pytest.raises(DomainError):
        pde_residual_Y(0.5, [pt])
