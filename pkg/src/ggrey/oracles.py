"""Independent quadrature oracles.

These go straight to scipy's QUADPACK bindings and the defining integrals, so
they share no code path with the closed forms they are used to check.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate, interpolate, special

_OPTS = dict(epsabs=1e-13, epsrel=1e-12, limit=400)


def _quad(f, a, b, **kw):
    opts = dict(_OPTS)
    opts.update(kw)
    return integrate.quad(f, a, b, **opts)[0]


def _beta_norm(rho):
    return math.gamma(rho) * math.gamma(1.0 - rho)


def upper_gamma_quad(rho, x):
    """int_x^inf e^-w w^(rho-1) dw."""
    if x == 0:
        return _quad(lambda w: math.exp(-w), 0.0, 1.0, weight="alg", wvar=(rho - 1.0, 0.0)) \
            + _quad(lambda w: math.exp(-w) * w ** (rho - 1.0), 1.0, math.inf)
    return _quad(lambda w: math.exp(-w) * w ** (rho - 1.0), x, math.inf)


def mixing_moment_quad(theta, k, rho):
    """Gamma(rho, theta) E[Y^k] = int_0^inf (1+w)^(k-1) w^-rho e^(-theta (1+w)) dw / Gamma(1-rho)."""
    def f(w):
        return (1.0 + w) ** (k - 1) * math.exp(-theta * (1.0 + w))
    head = _quad(f, 0.0, 1.0, weight="alg", wvar=(-rho, 0.0))
    tail = _quad(lambda w: f(w) * w ** -rho, 1.0, math.inf)
    return (head + tail) / math.gamma(1.0 - rho)


def f_rho_mass(rho):
    """int_1^inf dy / (Gamma(1-rho) y (y-1)^rho)."""
    head = _quad(lambda y: 1.0 / y, 1.0, 2.0, weight="alg", wvar=(-rho, 0.0))
    tail = _quad(lambda y: 1.0 / (y * (y - 1.0) ** rho), 2.0, math.inf)
    return (head + tail) / math.gamma(1.0 - rho)


def mixing_inverse_cdf_table(rho, theta, n=4001):
    """CDF of V = 1/Y from its density e^(-theta/v) v^(rho-1) (1-v)^(-rho) / (Gamma(rho, theta) Gamma(1-rho)).

    Nodes are Beta(rho, 1-rho) quantiles of a uniform grid g, so the table is
    smooth in g at both singular endpoints. Returns (g, v, cdf).
    """
    norm = float(special.gammaincc(rho, theta) * special.gamma(rho)) * math.gamma(1.0 - rho) \
        if theta > 0 else _beta_norm(rho)
    g = np.linspace(0.0, 1.0, n)
    v = special.betaincinv(rho, 1.0 - rho, g)
    pieces = np.zeros(n)
    for i in range(1, n):
        lo, hi = v[i - 1], v[i]
        if i == 1:
            pieces[i] = _quad(lambda s: math.exp(-theta / s) * (1.0 - s) ** -rho if s > 0 else 0.0,
                              lo, hi, weight="alg", wvar=(rho - 1.0, 0.0))
        elif i == n - 1:
            pieces[i] = _quad(lambda s: math.exp(-theta / s) * s ** (rho - 1.0), lo, hi,
                              weight="alg", wvar=(0.0, -rho))
        else:
            pieces[i] = _quad(lambda s: math.exp(-theta / s) * s ** (rho - 1.0) * (1.0 - s) ** -rho, lo, hi)
    return g, v, np.cumsum(pieces) / norm


def mixing_cdf(rho, theta, n=4001):
    """Callable CDF of Y on (1, inf) built from :func:`mixing_inverse_cdf_table`."""
    g, _, cdf_v = mixing_inverse_cdf_table(rho, theta, n)
    with np.errstate(divide="ignore", over="ignore"):
        # flat stretches near v = 0 make PCHIP divide by zero slopes; harmless
        spline = interpolate.PchipInterpolator(g, cdf_v)

    def cdf(y):
        y = np.asarray(y, dtype=float)
        v = 1.0 / np.maximum(y, 1.0)
        return np.clip(1.0 - spline(special.betainc(rho, 1.0 - rho, v)), 0.0, 1.0)

    return cdf


def laplace_pair_quad(rho, which, args):
    """Quadrature of the defining Laplace integral for each closed-form pair."""
    s, v = (float(a) for a in args)
    b = _beta_norm(rho)
    if which == "h_time":
        # int_0^x e^{-xi t} t^(rho-1) (x-t)^(-rho) dt / B
        return _quad(lambda t: math.exp(-s * t), 0.0, v, weight="alg", wvar=(rho - 1.0, -rho)) / b
    if which == "h_level":
        # e^{-eta t} t^(rho-1) int_0^inf e^{-eta u} u^(-rho) du / B
        head = _quad(lambda u: math.exp(-s * u), 0.0, 1.0, weight="alg", wvar=(-rho, 0.0))
        tail = _quad(lambda u: math.exp(-s * u) * u ** -rho, 1.0, math.inf)
        return v ** (rho - 1.0) * math.exp(-s * v) * (head + tail) / b
    if which == "l_space":
        # int_t^inf e^{-eta y} t^rho / (y (y-t)^rho) dy / B, with y = t + u
        head = _quad(lambda u: math.exp(-s * (v + u)) / (v + u), 0.0, 1.0, weight="alg", wvar=(-rho, 0.0))
        tail = _quad(lambda u: math.exp(-s * (v + u)) / ((v + u) * u ** rho), 1.0, math.inf)
        return v ** rho * (head + tail) / b
    if which == "l_time":
        # int_0^y e^{-xi t} t^rho / (y (y-t)^rho) dt / B
        return _quad(lambda t: math.exp(-s * t), 0.0, v, weight="alg", wvar=(rho, -rho)) / (v * b)
    raise ValueError(f"unknown pair {which!r}")


def density_mass_T(rho, x):
    return _quad(lambda t: 1.0, 0.0, x, weight="alg", wvar=(rho - 1.0, -rho)) / _beta_norm(rho)


def density_mass_Y(rho, t):
    return laplace_pair_quad(rho, "l_space", (0.0, t))


def laplace_Y_quad(rho, eta):
    """E exp(-eta Y) for the untempered mixing law, by quadrature of its density."""
    return laplace_pair_quad(rho, "l_space", (eta, 1.0))


def fourier_cos(f, xi):
    """2 int_0^inf f(x) cos(xi x) dx for an even integrable f (QUADPACK QAWF)."""
    if xi == 0:
        return 2.0 * (_quad(f, 0.0, 1.0) + _quad(f, 1.0, math.inf))
    return 2.0 * integrate.quad(f, 0.0, math.inf, weight="cos", wvar=xi, epsabs=1e-12, limlst=100)[0]


def mass_even(f):
    """2 int_0^inf f(x) dx."""
    return 2.0 * (_quad(f, 0.0, 1.0) + _quad(f, 1.0, math.inf))
