import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from ggrey import oracles
from ggrey.errors import AccuracyError, DomainError
from ggrey.quadrature import QuadratureSpec, integrate
from ggrey.specfun import (SpecFunConfig, f_rho_unnormalized, lower_inc_gamma, meijer_g_moment,
                           prabhakar_ml, regularized_upper_gamma, rho_exponential, upper_inc_gamma)

from frozen import E_HALF_HALF_1, GAMMA_05_1, MEIJER_1_2_05

mp.mp.dps = 30


def mp_prabhakar(a, b, g, x):
    return float(mp.nsum(lambda j: mp.rf(g, j) * mp.mpf(x) ** j / (mp.factorial(j) * mp.gamma(a * j + b)),
                         [0, mp.inf]))


# ---- incomplete gamma

@pytest.mark.parametrize("rho", [0.05, 0.1, 0.3, 0.5, 0.9, 1.0, 1.7, 3.5])
@pytest.mark.parametrize("x", [1e-6, 0.01, 0.5, 1.0, 1.4, 2.0, 7.5, 30.0, 120.0])
def test_upper_gamma_vs_mpmath(rho, x):
    ref = float(mp.gammainc(rho, x))
    assert upper_inc_gamma(rho, x) == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("rho", [0.1, 0.5, 1.0, 2.5])
@pytest.mark.parametrize("x", [1e-4, 0.3, 1.0, 4.0, 25.0])
def test_lower_gamma_vs_mpmath(rho, x):
    ref = float(mp.gammainc(rho, 0, x))
    assert lower_inc_gamma(rho, x) == pytest.approx(ref, rel=1e-12)


def test_upper_gamma_reference_value():
    assert upper_inc_gamma(0.5, 1.0) == pytest.approx(GAMMA_05_1, rel=1e-14)
    assert upper_inc_gamma(0.5, 1.0) == pytest.approx(math.sqrt(math.pi) * math.erfc(1.0), rel=1e-14)


@pytest.mark.parametrize("x", [0.0, 0.2, 1.0, 5.0, 40.0])
def test_upper_gamma_rho_one_is_exponential(x):
    assert upper_inc_gamma(1.0, x) == pytest.approx(math.exp(-x), rel=1e-14)
    assert lower_inc_gamma(1.0, x) == pytest.approx(-math.expm1(-x), rel=1e-13, abs=1e-300)


@pytest.mark.parametrize("rho", [0.2, 0.5, 2.0])
def test_gamma_at_zero(rho):
    assert upper_inc_gamma(rho, 0.0) == math.gamma(rho)
    assert lower_inc_gamma(rho, 0.0) == 0.0
    assert regularized_upper_gamma(rho, 0.0) == pytest.approx(1.0)


def test_lower_gamma_recurrence():
    lhs = lower_inc_gamma(1.5, 2.0)
    rhs = 0.5 * lower_inc_gamma(0.5, 2.0) - 2.0 ** 0.5 * math.exp(-2.0)
    assert abs(lhs - rhs) < 1e-12 * lhs


@pytest.mark.parametrize("rho", np.arange(1, 10) / 10)
def test_complementarity(rho):
    for x in (0.01, 0.1, 1.0, 3.0, 10.0):
        s = upper_inc_gamma(rho, x) + lower_inc_gamma(rho, x)
        assert s == pytest.approx(math.gamma(rho), rel=1e-13)


def test_upper_gamma_strictly_decreasing():
    xs = np.linspace(0.0, 12.0, 100)
    vals = [upper_inc_gamma(0.4, x) for x in xs]
    assert np.all(np.diff(vals) < 0)


@given(rho=st.floats(0.01, 5.0), x=st.floats(0.0, 50.0), dx=st.floats(1e-3, 5.0))
@settings(max_examples=200, deadline=None)
def test_upper_gamma_monotone_property(rho, x, dx):
    assert upper_inc_gamma(rho, x + dx) <= upper_inc_gamma(rho, x)


@pytest.mark.parametrize("bad", [0.0, -0.5])
def test_gamma_rejects_nonpositive_rho(bad):
    with pytest.raises(DomainError):
        upper_inc_gamma(bad, 1.0)
    with pytest.raises(DomainError):
        lower_inc_gamma(bad, 1.0)


def test_gamma_rejects_negative_x():
    with pytest.raises(DomainError):
        upper_inc_gamma(0.5, -1.0)


def test_tight_term_cap_raises_with_partial():
    cfg = SpecFunConfig(max_terms=64)
    with pytest.raises(AccuracyError) as info:
        lower_inc_gamma(100.0, 95.0, cfg)
    assert info.value.partial is not None


@pytest.mark.parametrize("kw", [dict(series_tol=0.0), dict(max_terms=10)])
def test_specfun_config_validation(kw):
    with pytest.raises(DomainError):
        SpecFunConfig(**kw)


# ---- Prabhakar

@pytest.mark.parametrize("x", [-3.0, -0.5, 0.0, 0.7, 2.5])
def test_prabhakar_exponential(x):
    assert prabhakar_ml(1, 1, 1, x) == pytest.approx(math.exp(x), rel=1e-14)


@pytest.mark.parametrize("rho,theta", [(0.3, 0.5), (0.5, 1.0), (0.8, 4.0), (0.5, 40.0)])
def test_prabhakar_kummer_identity(rho, theta):
    assert prabhakar_ml(1, rho, rho, -theta) == pytest.approx(math.exp(-theta) / math.gamma(rho), rel=1e-13)


@pytest.mark.parametrize("a,b,g,x", [
    (0.5, 0.5, 1.0, 1.0),
    (0.7, 1.2, 0.4, -2.0),
    (1.0, -1.5, 0.5, -1.0),        # beta < 0: pole terms vanish
    (1.0, 0.5 + 1 - 3, 0.5, -2.0),  # the moment-formula case n = 3
    (0.3, 0.3, 0.3, -5.0),          # spectral fallback
    (0.2, 0.9, 1.0, -8.0),
    (1.5, 2.0, 2.0, 3.0),
])
def test_prabhakar_vs_mpmath(a, b, g, x):
    assert prabhakar_ml(a, b, g, x) == pytest.approx(mp_prabhakar(a, b, g, x), rel=1e-10, abs=1e-14)


def test_prabhakar_zero_argument_is_reciprocal_gamma():
    assert prabhakar_ml(0.7, 1.3, 2.0, 0.0) == pytest.approx(1 / math.gamma(1.3))
    assert prabhakar_ml(0.7, -2.0, 2.0, 0.0) == 0.0


def test_prabhakar_derivative_rule():
    a, b, g, lam, x, h = 1.0, 1.3, 0.7, -1.0, 0.8, 1e-5

    def f(z):
        return z ** (b - 1) * prabhakar_ml(a, b, g, lam * z ** a)

    fd = (f(x + h) - f(x - h)) / (2 * h)
    assert fd == pytest.approx(x ** (b - 2) * prabhakar_ml(a, b - 1, g, lam * x ** a), abs=1e-6)


@pytest.mark.parametrize("rho", [0.3, 0.5, 0.9])
def test_prabhakar_complete_monotonicity(rho):
    grid = np.linspace(0.05, 5.0, 80)
    vals = np.array([prabhakar_ml(rho, rho, rho, -z) for z in grid])
    assert np.all(vals >= 0)
    for k in (1, 2, 3):
        assert np.min((-1) ** k * np.diff(vals, n=k)) >= -1e-9


def test_prabhakar_rejects_bad_alpha():
    with pytest.raises(DomainError):
        prabhakar_ml(0.0, 1.0, 1.0, 0.5)


def test_prabhakar_nonconvergence_carries_partial():
    with pytest.raises(AccuracyError) as info:
        prabhakar_ml(1.0, 1.0, 1.0, 400.0, SpecFunConfig(max_terms=64))
    assert info.value.partial > 0


# ---- rho-exponential, Meijer moment, f_rho

def test_rho_exponential_values():
    assert rho_exponential(1.0, 1.7) == pytest.approx(math.exp(1.7), rel=1e-14)
    assert rho_exponential(0.5, 1.0) == pytest.approx(E_HALF_HALF_1, rel=1e-12)
    assert rho_exponential(0.5, 1.0) == pytest.approx(1 / math.sqrt(math.pi) + math.e * math.erfc(-1), rel=1e-13)


@given(rho=st.floats(0.05, 1.0), z=st.floats(1e-3, 20.0))
@settings(max_examples=100, deadline=None)
def test_rho_exponential_positive(rho, z):
    assert rho_exponential(rho, z) > 0


@pytest.mark.parametrize("z", [0.0, -1.0])
def test_rho_exponential_domain(z):
    with pytest.raises(DomainError):
        rho_exponential(0.5, z)


def test_meijer_first_moment_closed_form():
    for theta in (0.5, 1.0, 3.0):
        for rho in (0.2, 0.6):
            assert meijer_g_moment(theta, 1, rho) == pytest.approx(theta ** (rho - 1) * math.exp(-theta), rel=1e-15)
    assert meijer_g_moment(1.0, 1, 0.5) == pytest.approx(math.exp(-1))


def test_meijer_second_moment_reference():
    assert meijer_g_moment(1.0, 2, 0.5) == pytest.approx(MEIJER_1_2_05, rel=1e-13)


@pytest.mark.parametrize("theta", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("rho", [0.3, 0.5, 0.8])
def test_meijer_vs_quadrature(theta, k, rho):
    assert meijer_g_moment(theta, k, rho) == pytest.approx(oracles.mixing_moment_quad(theta, k, rho), rel=1e-9)


@pytest.mark.parametrize("args", [(0.0, 1, 0.5), (1.0, 0, 0.5), (1.0, 1.5, 0.5), (1.0, 1, 1.5)])
def test_meijer_domain(args):
    with pytest.raises(DomainError):
        meijer_g_moment(*args)


def test_f_rho_values():
    assert f_rho_unnormalized(0.5, 0.4) == 0.0
    assert f_rho_unnormalized(1.0, 0.4) == 0.0
    assert f_rho_unnormalized(2.0, 0.5) == pytest.approx(1 / (2 * math.sqrt(math.pi)))


@pytest.mark.parametrize("rho", [0.2, 0.3, 0.5, 0.8])
def test_f_rho_mass(rho):
    head = integrate(lambda y: 1 / (math.gamma(1 - rho) * y), 1.0, 2.0, endpoint_powers=(-rho, 0.0))
    tail = integrate(lambda y: f_rho_unnormalized(y, rho), 2.0, math.inf)
    assert head + tail == pytest.approx(math.gamma(rho), rel=1e-9)


# ---- quadrature layer

def test_quadrature_spec_validation():
    with pytest.raises(DomainError):
        QuadratureSpec(abs_tol=0.0)
    with pytest.raises(DomainError):
        QuadratureSpec(scheme="simpson")


def test_quadrature_endpoint_weights():
    # int_0^1 x^-0.5 (1-x)^-0.5 dx = pi
    assert integrate(lambda x: 1.0, 0.0, 1.0, endpoint_powers=(-0.5, -0.5)) == pytest.approx(math.pi, rel=1e-13)
    with pytest.raises(DomainError):
        integrate(lambda x: 1.0, 0.0, math.inf, endpoint_powers=(0.0, 0.0))


def test_quadrature_failure_raises():
    with pytest.raises(AccuracyError):
        integrate(lambda x: math.sin(1 / x) / x, 1e-12, 1.0, QuadratureSpec(max_subdivisions=5))


def test_regularized_gamma_matches_scipy():
    for rho, x in ((0.3, 0.7), (0.9, 3.0)):
        assert regularized_upper_gamma(rho, x) == pytest.approx(float(special.gammaincc(rho, x)), rel=1e-13)
