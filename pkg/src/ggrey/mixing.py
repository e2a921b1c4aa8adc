"""The mixing variable Y on (1, inf) with density

    l(y) = e^{-theta y} / (Gamma(rho, theta) Gamma(1-rho) y (y-1)^rho),

whose Laplace transform is Gamma(rho, theta + eta) / Gamma(rho, theta).
Both the Gamma-grey measure and the tempered Gamma-grey Brownian motion are
Gaussian variance mixtures over Y.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .specfun import meijer_g_moment, upper_inc_gamma

_BATCH_MIN = 64


def _validate(rho, theta):
    if not 0 < rho <= 1:
        raise DomainError(f"rho must lie in (0, 1], got {rho}")
    if not theta >= 0:
        raise DomainError(f"theta must be nonnegative, got {theta}")


def mixing_density(y, rho, theta):
    """Density of Y (vectorized). Zero for y <= 1."""
    _validate(rho, theta)
    if rho == 1:
        raise DomainError("Y is the point mass at 1 when rho = 1; it has no density")
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    m = y > 1
    norm = upper_inc_gamma(rho, theta) * math.gamma(1.0 - rho)
    ym = y[m]
    out[m] = np.exp(-theta * ym) / (norm * ym * (ym - 1.0) ** rho)
    return out if out.ndim else float(out)


def acceptance_rates(rho, theta):
    """Exact acceptance probabilities of the two rejection schemes.

    Returns ``(gamma_proposal, beta_proposal)``:
    theta^(1-rho) e^theta Gamma(rho, theta) for Y = 1 + Gamma(1-rho, rate theta),
    e^theta Gamma(rho, theta) / Gamma(rho) for Y = 1 / Beta(rho, 1-rho).
    """
    _validate(rho, theta)
    if rho == 1:
        return 1.0, 1.0
    up = upper_inc_gamma(rho, theta)
    log_up = math.log(up) + theta
    beta_rate = math.exp(log_up - math.lgamma(rho))
    gamma_rate = math.exp(log_up + (1.0 - rho) * math.log(theta)) if theta > 0 else 0.0
    return gamma_rate, beta_rate


def sample_mixing_Y(rho, theta, rng, size=None):
    """Exact draws of Y.

    theta = 0: Y = 1/V with V ~ Beta(rho, 1-rho).
    theta > 0: rejection from whichever proposal has the larger acceptance
    rate; Y = 1 + W with W ~ Gamma(1-rho, rate theta) accepted w.p. 1/(1+W),
    or Y from the theta = 0 law accepted w.p. exp(-theta (Y-1)).
    rho = 1 returns the constant 1.
    """
    _validate(rho, theta)
    shape = () if size is None else size
    n = int(np.prod(shape))
    if rho == 1:
        out = np.ones(n)
    elif theta == 0:
        out = 1.0 / rng.beta(rho, 1.0 - rho, size=n)
    else:
        out = _rejection(rho, theta, rng, n)
    return float(out[0]) if size is None else out.reshape(shape)


def _rejection(rho, theta, rng, n):
    gamma_rate, beta_rate = acceptance_rates(rho, theta)
    use_gamma = gamma_rate >= beta_rate
    rate = gamma_rate if use_gamma else beta_rate
    out = np.empty(n)
    filled = 0
    while filled < n:
        want = n - filled
        m = max(_BATCH_MIN, int(1.1 * want / rate) + 16)
        if use_gamma:
            w = rng.gamma(1.0 - rho, 1.0 / theta, size=m)
            keep = rng.random(m) * (1.0 + w) < 1.0
            y = 1.0 + w[keep]
        else:
            y = 1.0 / rng.beta(rho, 1.0 - rho, size=m)
            keep = rng.random(m) < np.exp(-theta * (y - 1.0))
            y = y[keep]
        take = min(want, y.size)
        out[filled:filled + take] = y[:take]
        filled += take
    return out


def mixing_moment(rho, theta, k):
    """E[Y^k] from the closed-form gamma sum."""
    _validate(rho, theta)
    if rho == 1:
        return 1.0
    if theta == 0:
        raise DomainError("Y has no finite moments without tempering (theta = 0)")
    return meijer_g_moment(theta, k, rho) / upper_inc_gamma(rho, theta)
