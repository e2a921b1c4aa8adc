"""Finite-dimensional Gamma-grey measure nu^n_{rho,theta}.

The measure is the centered law on R^n with characteristic function
Gamma(rho, theta + |xi|^2/2) / Gamma(rho, theta); equivalently sqrt(Y) Z with Z
standard normal and Y the mixing variable of :mod:`ggrey.mixing`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalError
from .mixing import mixing_moment, sample_mixing_Y
from .specfun import prabhakar_ml, upper_inc_gamma

MAX_POLY_DEGREE = 8
HANKEL_COND_LIMIT = 1e12


@dataclass(frozen=True)
class GreyParams:
    rho: float
    theta: float

    def __post_init__(self):
        if not 0 < self.rho <= 1:
            raise DomainError(f"rho must lie in (0, 1], got {self.rho}")
        if not self.theta >= 0:
            raise DomainError(f"theta must be nonnegative, got {self.theta}")

    @property
    def gaussian(self):
        return self.rho == 1

    def require_tempered(self, what):
        if self.rho < 1 and self.theta == 0:
            raise DomainError(f"{what} diverge without tempering (theta = 0, rho < 1)")


@dataclass(frozen=True)
class PolyCoeffs:
    """Monic polynomial; ``coeffs[i]`` multiplies x**i."""

    degree: int
    coeffs: tuple

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, self.coeffs)


def _gamma_ratio(rho, num_arg, den_arg):
    return upper_inc_gamma(rho, num_arg) / upper_inc_gamma(rho, den_arg)


def char_fn(params: GreyParams, xi):
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    q = 0.5 * float(xi @ xi)
    if params.gaussian:
        return math.exp(-q)
    return _gamma_ratio(params.rho, params.theta + q, params.theta)


def _double_factorial_odd(n):
    # (2n-1)!! = (2n)! / (n! 2^n)
    return math.factorial(2 * n) // (math.factorial(n) * 2 ** n)


def moment(params: GreyParams, k):
    """k-th moment of the one-dimensional measure via the Prabhakar formula."""
    if int(k) != k or k < 0:
        raise DomainError(f"moment order must be a nonnegative integer, got {k}")
    k = int(k)
    if k % 2:
        return 0.0
    if k == 0:
        return 1.0
    n = k // 2
    if params.gaussian:
        return float(_double_factorial_odd(n))
    params.require_tempered("moments")
    rho, theta = params.rho, params.theta
    e = prabhakar_ml(1.0, rho + 1.0 - n, rho, -theta)
    num = (-1) ** (n + 1) * math.factorial(2 * n) * math.gamma(rho) * theta ** (rho - n) * e
    return num / (math.factorial(n) * 2 ** n * upper_inc_gamma(rho, theta))


def moment_oracle(params: GreyParams, k):
    """Same moment through the mixture: E[x^{2n}] = (2n-1)!! E[Y^n]."""
    if int(k) != k or k < 0:
        raise DomainError(f"moment order must be a nonnegative integer, got {k}")
    k = int(k)
    if k % 2:
        return 0.0
    if k == 0:
        return 1.0
    params.require_tempered("moments")
    n = k // 2
    return _double_factorial_odd(n) * mixing_moment(params.rho, params.theta, n)


def second_moment_closed_form(params: GreyParams):
    """E[x^2] = theta^(rho-1) e^-theta / Gamma(rho, theta)."""
    if params.gaussian:
        return 1.0
    params.require_tempered("moments")
    rho, theta = params.rho, params.theta
    return theta ** (rho - 1.0) * math.exp(-theta) / upper_inc_gamma(rho, theta)


def orthogonal_poly(params: GreyParams, n):
    """Monic orthogonal polynomial of degree n under nu^1_{rho,theta}.

    Modified Gram-Schmidt on the monomials with the Hankel moment matrix as
    inner product. Degrees above MAX_POLY_DEGREE, or a Hankel matrix with
    condition number above 1e12, raise NumericalError.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {n}")
    n = int(n)
    if n > MAX_POLY_DEGREE:
        raise NumericalError(f"degree {n} exceeds {MAX_POLY_DEGREE}; Hankel system is ill-conditioned")
    if n == 0:
        return PolyCoeffs(0, (1.0,))
    params.require_tempered("moments")
    m = [moment(params, k) for k in range(2 * n + 1)]
    hankel = np.array([[m[i + j] for j in range(n + 1)] for i in range(n + 1)])
    cond = np.linalg.cond(hankel)
    if not cond <= HANKEL_COND_LIMIT:
        raise NumericalError(f"Hankel moment matrix condition number {cond:.3g} exceeds 1e12")

    def inner(a, b):
        return a @ hankel @ b

    basis = []
    for deg in range(n + 1):
        v = np.zeros(n + 1)
        v[deg] = 1.0
        for p in basis:
            v = v - inner(v, p) / inner(p, p) * p
        basis.append(v)
    coeffs = basis[-1][: n + 1]
    return PolyCoeffs(n, tuple(float(c) for c in coeffs))


def laplace_transform(params: GreyParams, phi, lam):
    """E[exp(lam <x, phi>)] = Gamma(rho, theta - lam^2 |phi|^2 / 2) / Gamma(rho, theta).

    Finite only on the ball lam^2 |phi|^2 < 2 theta when rho < 1.
    """
    if lam == 0:
        raise DomainError("lambda must be nonzero")
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    s = 0.5 * lam * lam * float(phi @ phi)
    if params.gaussian:
        return math.exp(s)
    params.require_tempered("exponential moments")
    if s >= params.theta:
        raise DomainError(
            f"lam^2 |phi|^2 = {2 * s:.6g} is outside the ball of radius 2 theta = {2 * params.theta:.6g}; "
            "the defining integral diverges"
        )
    return _gamma_ratio(params.rho, params.theta - s, params.theta)


def sample(params: GreyParams, dim, rng, size=None):
    """Draw sqrt(Y) z with z ~ N(0, I_dim). Shape (dim,) or (size, dim)."""
    if int(dim) != dim or dim < 1:
        raise DomainError(f"dim must be a positive integer, got {dim}")
    count = 1 if size is None else int(size)
    y = sample_mixing_Y(params.rho, params.theta, rng, size=count)
    z = rng.standard_normal((count, int(dim)))
    out = np.sqrt(y)[:, None] * z
    return out[0] if size is None else out
