"""Scalar special functions: incomplete gamma, Prabhakar Mittag-Leffler,
rho-exponential, and the two Meijer-G instances that enter the process
moments and the mixing density, reduced to elementary closed forms.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass, field

from scipy.special import rgamma

from .errors import AccuracyError, DomainError
from .quadrature import DEFAULT_QUAD, QuadratureSpec, integrate

_EPS = sys.float_info.epsilon
_TINY = sys.float_info.min / _EPS


@dataclass(frozen=True)
class SpecFunConfig:
    series_tol: float = 1e-16
    max_terms: int = 4000
    quad: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self):
        if not self.series_tol > 0:
            raise DomainError("series_tol must be positive")
        if self.max_terms < 64:
            raise DomainError("max_terms must be at least 64")


DEFAULT_CONFIG = SpecFunConfig(quad=DEFAULT_QUAD)

# Below x < rho + 1 the power series converges fast; above it the Legendre
# continued fraction does. Validated against mpmath in tests/test_specfun.py.
_SERIES_CUTOFF_SHIFT = 1.0


def _check_rho(rho):
    if not rho > 0:
        raise DomainError(f"incomplete gamma needs rho > 0, got {rho}")


def _lower_series(rho, x, cfg):
    # gamma(rho, x) = x^rho e^-x sum_j x^j / (rho (rho+1) ... (rho+j))
    term = 1.0 / rho
    total = term
    ap = rho
    for _ in range(cfg.max_terms):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * cfg.series_tol:
            return total * math.exp(-x + rho * math.log(x))
    raise AccuracyError("lower incomplete gamma series did not converge",
                        partial=total * math.exp(-x + rho * math.log(x)))


def _upper_cf(rho, x, cfg):
    # modified Lentz on Gamma(rho, x) = e^-x x^rho / (x+1-rho- 1(1-rho)/(x+3-rho- ...))
    b = x + 1.0 - rho
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, cfg.max_terms):
        an = -i * (i - rho)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < max(cfg.series_tol, _EPS):
            return h * math.exp(-x + rho * math.log(x))
    raise AccuracyError("upper incomplete gamma continued fraction did not converge",
                        partial=h * math.exp(-x + rho * math.log(x)))


def upper_inc_gamma(rho, x, config: SpecFunConfig = DEFAULT_CONFIG):
    """Upper incomplete gamma function Gamma(rho, x) = int_x^inf e^-w w^(rho-1) dw."""
    _check_rho(rho)
    if x < 0:
        raise DomainError(f"incomplete gamma needs x >= 0, got {x}")
    if x == 0:
        return math.gamma(rho)
    if x < rho + _SERIES_CUTOFF_SHIFT:
        return math.gamma(rho) - _lower_series(rho, x, config)
    return _upper_cf(rho, x, config)


def lower_inc_gamma(rho, x, config: SpecFunConfig = DEFAULT_CONFIG):
    """Lower incomplete gamma function gamma(rho, x) = Gamma(rho) - Gamma(rho, x)."""
    _check_rho(rho)
    if x < 0:
        raise DomainError(f"incomplete gamma needs x >= 0, got {x}")
    if x == 0:
        return 0.0
    if x < rho + _SERIES_CUTOFF_SHIFT:
        return _lower_series(rho, x, config)
    return math.gamma(rho) - _upper_cf(rho, x, config)


def regularized_upper_gamma(rho, x, config: SpecFunConfig = DEFAULT_CONFIG):
    """Gamma(rho, x) / Gamma(rho)."""
    return upper_inc_gamma(rho, x, config) / math.gamma(rho)


def prabhakar_ml(alpha, beta, gamma, x, config: SpecFunConfig = DEFAULT_CONFIG):
    r"""Three-parameter Mittag-Leffler function

    .. math:: E^{\gamma}_{\alpha,\beta}(x) = \sum_j (\gamma)_j x^j / (j!\,\Gamma(\alpha j+\beta))

    ``beta`` may be zero or negative: terms at poles of Gamma(alpha j + beta)
    vanish through the reciprocal gamma function.

    Summation stops once five consecutive terms fall below
    ``series_tol * |sum|``; for a strictly alternating, decreasing tail a single
    such term suffices because it bounds the remainder.

    Negative arguments avoid the alternating series where it cancels badly:
    alpha = 1 goes through Kummer's transformation
    E^g_{1,b}(x) = e^x E^{b-g}_{1,b}(-x), and 0 < alpha < 1 falls back to the
    real-axis Laplace inversion of s^(alpha g - b) / (s^alpha + 1)^g.

    Raises AccuracyError if ``max_terms`` is exhausted or if cancellation
    destroys more than eight significant digits and no fallback applies.
    """
    if not alpha > 0:
        raise DomainError(f"Prabhakar function needs alpha > 0, got {alpha}")
    if x == 0:
        return float(rgamma(beta))
    if x < 0 and alpha == 1:
        return math.exp(x) * _prabhakar_series(1.0, beta, beta - gamma, -x, config)
    try:
        return _prabhakar_series(alpha, beta, gamma, x, config)
    except AccuracyError:
        if x < 0 and alpha < 1 and gamma > 0 and alpha * gamma - beta > -1:
            return _prabhakar_spectral(alpha, beta, gamma, -x, config)
        raise


def _prabhakar_spectral(alpha, beta, gamma, x, config):
    # E^g_{a,b}(-x) = t^(1-b) (1/pi) int_0^inf e^(-r t) Im F(r e^{-i pi}) dr, t = x^(1/a)
    t = x ** (1.0 / alpha)
    c = alpha * gamma - beta
    rot = cmath.exp(-1j * math.pi * alpha)
    phase = cmath.exp(-1j * math.pi * c)

    def kernel(r):
        if r == 0.0:
            return 0.0
        val = phase * r ** c * cmath.exp(-gamma * cmath.log(r ** alpha * rot + 1.0))
        return math.exp(-r * t) * val.imag

    # u = r t puts the exponential decay on a unit scale for any t
    def scaled(u):
        return kernel(u / t)

    cuts = sorted({0.0, 1.0, 40.0, *([t] if 0.0 < t < 40.0 else [])})
    total = sum(integrate(scaled, a, b, config.quad) for a, b in zip(cuts, cuts[1:]))
    total += integrate(scaled, 40.0, math.inf, config.quad)
    return t ** (-beta) * total / math.pi


def _prabhakar_series(alpha, beta, gamma, x, config):
    tol = config.series_tol
    # (gamma)_j x^j / j! kept as sign * exp(log_coef): it can exceed the float
    # range long before the gamma denominator catches up when alpha is small.
    log_coef = 0.0
    sign = 1.0
    total = 0.0
    max_abs = 0.0
    small_run = 0
    prev = None
    log_x = math.log(abs(x))
    for j in range(config.max_terms):
        arg = alpha * j + beta
        if sign == 0.0:
            # (gamma)_j vanished: gamma is a non-positive integer, series is a polynomial
            break
        log_mag = log_coef - math.lgamma(arg) if arg > 0 else log_coef
        if log_mag > 700.0:
            raise AccuracyError("Prabhakar series terms overflow", partial=total)
        if arg > 0:
            term = sign * math.exp(log_mag)
        else:
            term = sign * math.exp(log_coef) * float(rgamma(arg))
        total += term
        max_abs = max(max_abs, abs(term))
        if arg > 0:
            if abs(term) <= tol * abs(total):
                alternating = (prev is not None and prev * term < 0
                               and abs(term) <= abs(prev))
                small_run += 1
                if alternating or small_run >= 5:
                    break
            else:
                small_run = 0
        if term != 0.0:
            prev = term
        factor = (gamma + j) / (j + 1)
        if factor == 0.0:
            sign = 0.0
        else:
            sign *= math.copysign(1.0, factor) * math.copysign(1.0, x)
            log_coef += math.log(abs(factor)) + log_x
    else:
        raise AccuracyError("Prabhakar series did not converge within max_terms", partial=total)
    if max_abs * _EPS > 1e-8 * abs(total):
        raise AccuracyError("Prabhakar series lost too many digits to cancellation", partial=total)
    return total


def rho_exponential(rho, z, config: SpecFunConfig = DEFAULT_CONFIG):
    """e_rho^z = z^(rho-1) E_{rho,rho}(z^rho); equals exp(z) at rho = 1."""
    if not 0 < rho <= 1:
        raise DomainError(f"rho-exponential needs rho in (0, 1], got {rho}")
    if not z > 0:
        raise DomainError(f"rho-exponential needs z > 0, got {z}")
    return z ** (rho - 1.0) * prabhakar_ml(rho, rho, 1.0, z ** rho, config)


def meijer_g_moment(theta, k, rho):
    """Gamma(rho, theta) * E[Y^k] for the tempered mixing variable Y.

    This is the Meijer function G^{2,0}_{1,2}[theta | 1-k; 0, rho-k], evaluated
    by expanding (1+w)^(k-1) inside int_0^inf (1+w)^(k-1) w^-rho e^-theta(1+w) dw:

        e^-theta * sum_{j<k} C(k-1, j) (1-rho)_j theta^(rho-1-j)

    The Pochhammer form keeps rho = 1 well defined (result e^-theta).
    """
    if not theta > 0:
        raise DomainError(f"mixing moments need theta > 0, got {theta}")
    if int(k) != k or k < 1:
        raise DomainError(f"moment order must be a positive integer, got {k}")
    if not 0 < rho <= 1:
        raise DomainError(f"rho must lie in (0, 1], got {rho}")
    k = int(k)
    total = 0.0
    poch = 1.0
    for j in range(k):
        total += math.comb(k - 1, j) * poch * theta ** (rho - 1.0 - j)
        poch *= (1.0 - rho) + j
    return math.exp(-theta) * total


def f_rho_unnormalized(y, rho):
    """Inverse Laplace transform of Gamma(rho, .): 1_{y>1} / (Gamma(1-rho) y (y-1)^rho).

    Closed form of G^{1,0}_{1,1}[1/y | 2; 1+rho]; integrates to Gamma(rho).
    """
    if not 0 < rho < 1:
        raise DomainError(f"rho must lie in (0, 1), got {rho}")
    if y <= 1:
        return 0.0
    return 1.0 / (math.gamma(1.0 - rho) * y * (y - 1.0) ** rho)
