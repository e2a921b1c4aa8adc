"""One-dimensional time-changed process B(Y_rho(t^alpha)) with theta = 0.

Everything here is anchored on the characteristic function

    Phi(xi, t) = Gamma(rho, xi^2 t^alpha / 2) / Gamma(rho),

i.e. a Gaussian variance mixture with conditional variance t^alpha * Y
(``convention="canonical"``). The printed mixture density uses conditional
variance 2 t^alpha * Y; it is available as ``convention="paper_literal"`` and
corresponds to the time scaling t -> 2^(1/alpha) t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import DEFAULT_QUAD, integrate
from .specfun import lower_inc_gamma, prabhakar_ml, upper_inc_gamma

__all__ = [
    "GoverningParams", "CONVENTIONS", "char_fn_1d", "char_fn_1d_dt", "integral_eq_rhs",
    "integral_eq_residual", "memory_integral", "memory_integral_closed_form",
    "fourier_pde_residual", "fbm_ode_residual",
    "density_1d", "master_eq_residual", "two_time_char_fn", "two_time_char_fn_paper_literal",
]

CONVENTIONS = {"canonical": 1.0, "paper_literal": 2.0}
_PEAK_CUT = 60.0


@dataclass(frozen=True)
class GoverningParams:
    alpha: float
    rho: float

    def __post_init__(self):
        if not 0 < self.alpha <= 1:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not 0 < self.rho <= 1:
            raise DomainError(f"rho must lie in (0, 1], got {self.rho}")


def _q(rho, x):
    # regularized upper incomplete gamma
    if rho == 1:
        return math.exp(-x)
    return upper_inc_gamma(rho, x) / math.gamma(rho)


def _check_t(t):
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")


def char_fn_1d(params: GoverningParams, xi, t):
    _check_t(t)
    return _q(params.rho, 0.5 * xi * xi * t ** params.alpha)


def char_fn_1d_dt(params: GoverningParams, xi, t):
    """d/dt Phi = -(alpha / (t Gamma(rho))) (A t^alpha)^rho e^(-A t^alpha), A = xi^2 / 2."""
    _check_t(t)
    z = 0.5 * xi * xi * t ** params.alpha
    if z == 0:
        return 0.0
    return -params.alpha / (t * math.gamma(params.rho)) * z ** params.rho * math.exp(-z)


def integral_eq_rhs(params: GoverningParams, xi, t, quad=DEFAULT_QUAD):
    """Right-hand side of the integral equation with the e_rho kernel.

    With u = t^alpha - s^alpha and then v = u^rho the kernel singularity
    u^(rho-1) disappears and the integral becomes

        (A^rho / rho) int_0^{T^rho} e^{-A v^(1/rho)} E_{rho,rho}(A^rho v) Q(rho, A (T - v^(1/rho))) dv,

    where T = t^alpha and Q is the regularized upper incomplete gamma.
    """
    _check_t(t)
    a, rho = 0.5 * xi * xi, params.rho
    if a == 0:
        return 1.0
    big_t = t ** params.alpha
    if rho == 1:
        # E_{1,1} = exp; the kernel reduces to 1
        val = integrate(lambda v: math.exp(-a * (big_t - v)), 0.0, big_t, quad)
        return 1.0 - a * val
    inv = 1.0 / rho

    def f(v):
        u = v ** inv
        return (math.exp(-a * u) * prabhakar_ml(rho, rho, 1.0, a ** rho * v)
                * _q(rho, max(a * (big_t - u), 0.0)))

    val = integrate(f, 0.0, big_t ** rho, quad)
    return 1.0 - a ** rho / rho * val


def integral_eq_residual(params: GoverningParams, xi, t, quad=DEFAULT_QUAD):
    return abs(integral_eq_rhs(params, xi, t, quad) - char_fn_1d(params, xi, t))


def memory_integral(params: GoverningParams, xi, t, quad=DEFAULT_QUAD):
    """int_0^t z^(alpha-1) Phi(xi, z) dz = (1/alpha) int_0^{t^alpha} Q(rho, A w) dw."""
    _check_t(t)
    a, rho = 0.5 * xi * xi, params.rho
    big_t = t ** params.alpha
    val = integrate(lambda w: _q(rho, a * w), 0.0, big_t, quad)
    return val / params.alpha


def memory_integral_closed_form(params: GoverningParams, xi, t):
    """Integration by parts: W Q(rho, A W) + gamma(rho+1, A W) / (A Gamma(rho)), over alpha."""
    _check_t(t)
    a, rho = 0.5 * xi * xi, params.rho
    w = t ** params.alpha
    if a == 0:
        return w / params.alpha
    return (w * _q(rho, a * w) + lower_inc_gamma(rho + 1.0, a * w) / (a * math.gamma(rho))) / params.alpha


def fourier_pde_residual(params: GoverningParams, xi, t, quad=DEFAULT_QUAD):
    """|d_t Phi - (alpha rho / t)(Phi - 1) + (alpha/2) t^(alpha-1) xi^2 Phi
    - (alpha^2 xi^2 / 2t) int_0^t z^(alpha-1) Phi dz|."""
    al, rho = params.alpha, params.rho
    phi = char_fn_1d(params, xi, t)
    mem = memory_integral(params, xi, t, quad)
    res = (char_fn_1d_dt(params, xi, t) - al * rho / t * (phi - 1.0)
           + 0.5 * al * t ** (al - 1.0) * xi * xi * phi
           - al * al * xi * xi / (2.0 * t) * mem)
    return abs(res)


def fbm_ode_residual(alpha, xi, t, step=1e-5):
    """|du/dt + (alpha/2) t^(alpha-1) xi^2 u| for u = exp(-xi^2 t^alpha / 2), derivative by
    central differences."""
    params = GoverningParams(alpha, 1.0)
    if not t > step:
        raise DomainError("t must exceed the difference step")
    du = (char_fn_1d(params, xi, t + step) - char_fn_1d(params, xi, t - step)) / (2 * step)
    return abs(du + 0.5 * alpha * t ** (alpha - 1.0) * xi * xi * char_fn_1d(params, xi, t))


def _density_scaled(x, var_scale, rho, quad):
    # mixture of N(0, var_scale * Y) over Y = 1/V, V ~ Beta(rho, 1-rho):
    # int_0^1 sqrt(v / (2 pi s)) exp(-x^2 v / 2s) v^(rho-1) (1-v)^(-rho) dv / B(rho, 1-rho)
    if rho == 1:
        return math.exp(-x * x / (2 * var_scale)) / math.sqrt(2 * math.pi * var_scale)
    norm = math.sqrt(2 * math.pi * var_scale) * math.pi / math.sin(math.pi * rho)
    c = x * x / (2 * var_scale)
    if c <= _PEAK_CUT:
        val = integrate(lambda v: math.exp(-c * v), 0.0, 1.0, quad, endpoint_powers=(rho - 0.5, -rho))
    else:
        # mass sits in v < _PEAK_CUT / c; the rest is below e^-_PEAK_CUT relative
        val = integrate(lambda v: math.exp(-c * v) * (1.0 - v) ** -rho, 0.0, _PEAK_CUT / c, quad,
                        endpoint_powers=(rho - 0.5, 0.0))
    return val / norm


def density_1d(params: GoverningParams, x, t, convention="canonical", quad=DEFAULT_QUAD):
    """Marginal density of the time-changed process at time t.

    canonical: conditional variance t^alpha Y (Fourier inverse of ``char_fn_1d``).
    paper_literal: conditional variance 2 t^alpha Y, as printed.
    """
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown convention {convention!r}; choose from {tuple(CONVENTIONS)}")
    _check_t(t)
    scale = CONVENTIONS[convention] * t ** params.alpha
    xs = np.asarray(x, dtype=float)
    out = np.array([_density_scaled(abs(v), scale, params.rho, quad) for v in xs.ravel()])
    out = out.reshape(xs.shape)
    return out if out.ndim else float(out)


def _memory_term(params, x, t, convention, quad):
    """int_0^t z^alpha d_z f(x, z) dz = W f(x, t) - int_0^W f(x, w^(1/alpha)) dw, W = t^alpha.

    The w-integral of each Gaussian component is elementary,
    int_0^W w^(-1/2) e^(-b/w) dw = 2 sqrt(W) e^(-b/W) - 2 sqrt(pi b) erfc(sqrt(b/W)),
    which leaves one Beta-weighted integral over v = 1/Y.
    """
    c = CONVENTIONS[convention]
    big_w = t ** params.alpha
    rho = params.rho
    k = x * x / (2 * c)
    pre = 1.0 / math.sqrt(2 * math.pi * c)

    def first(v):
        return -math.sqrt(big_w) * math.exp(-k * v / big_w)

    def second(v):
        return 2.0 * math.sqrt(math.pi * k) * math.erfc(math.sqrt(k * v / big_w))

    if rho == 1:
        return pre * (first(1.0) + second(1.0))
    beta = math.pi / math.sin(math.pi * rho)
    i1 = integrate(first, 0.0, 1.0, quad, endpoint_powers=(rho - 0.5, -rho))
    i2 = integrate(second, 0.0, 1.0, quad, endpoint_powers=(rho, -rho))
    return pre * (i1 + i2) / beta


def master_eq_residual(params: GoverningParams, x, t, step=1e-3, x_step=None,
                       convention="canonical", quad=DEFAULT_QUAD):
    """|d_t f - (alpha rho / t) f - (alpha / 2t) d_xx M| at (x, t), x != 0.

    M is the memory term int_0^t z^alpha d_z f(x, z) dz. d_t and d_xx are
    central differences with steps ``step`` and ``x_step`` (default: step).
    f(x, 0) = 0 away from the origin.
    """
    if x == 0:
        raise DomainError("x = 0 carries the Dirac initial condition; pick x != 0")
    _check_t(t)
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown convention {convention!r}")
    hx = step if x_step is None else x_step
    if not (0 < step < t and hx > 0):
        raise DomainError("steps must be positive and smaller than t")
    al, rho = params.alpha, params.rho

    def f(xx, tt):
        return density_1d(params, xx, tt, convention, quad)

    ft = (f(x, t + step) - f(x, t - step)) / (2 * step)
    m_plus = _memory_term(params, x + hx, t, convention, quad)
    m_mid = _memory_term(params, x, t, convention, quad)
    m_minus = _memory_term(params, x - hx, t, convention, quad)
    mxx = (m_plus - 2 * m_mid + m_minus) / (hx * hx)
    return abs(ft - al * rho / t * f(x, t) - al / (2 * t) * mxx)


def two_time_char_fn(params: GoverningParams, xi1, xi2, t1, t2):
    """E exp(i xi1 B(Y(t1^a)) + i xi2 B(Y(t2^a))) with Y(s) = s Y, standard B, t1 <= t2:

    Q(rho, [(xi1^2 + 2 xi1 xi2) t1^a + xi2^2 t2^a] / 2).
    """
    if not 0 < t1 <= t2:
        raise DomainError("need 0 < t1 <= t2")
    a1, a2 = t1 ** params.alpha, t2 ** params.alpha
    q = 0.5 * ((xi1 * xi1 + 2 * xi1 * xi2) * a1 + xi2 * xi2 * a2)
    return _q(params.rho, q)


def two_time_char_fn_paper_literal(params: GoverningParams, xi1, xi2, t1, t2):
    """The printed two-time formula Q(rho, (xi1^2 + xi1 xi2) t1^a + (xi2^2 + xi1 xi2) t2^a)."""
    if not 0 < t1 <= t2:
        raise DomainError("need 0 < t1 <= t2")
    a1, a2 = t1 ** params.alpha, t2 ** params.alpha
    q = (xi1 * xi1 + xi1 * xi2) * a1 + (xi2 * xi2 + xi1 * xi2) * a2
    if q < 0:
        raise DomainError("printed two-time argument is negative here")
    return _q(params.rho, q)
