"""Tempered Gamma-grey Brownian motion on a finite time grid.

Conditional on the mixing variable Y the process is centered Gaussian with
covariance Y * gamma_alpha(t, s), where

    gamma_alpha(t, s) = t^alpha + s^alpha - |t - s|^alpha.

Note gamma_alpha is twice the textbook fractional-Brownian covariance; the
textbook process is available through :func:`sample_fbm`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import rng as _rng
from .errors import DomainError, NumericalError
from .mixing import mixing_moment, sample_mixing_Y
from .specfun import upper_inc_gamma

__all__ = [
    "ModelParams", "TimeGrid", "PathBatch", "kernel_gamma", "cov_matrix", "cholesky_factor",
    "sample_mixing_Y", "sample_fbm", "sample_ggbm_paths", "char_fn_ndim", "increment_char_fn",
    "increment_char_fn_paper_literal",
    "analytic_covariance", "analytic_moment", "paper_literal_moment", "increment_msd",
    "holder_scaling_check",
]

METHODS = ("cholesky", "circulant")


@dataclass(frozen=True)
class ModelParams:
    alpha: float
    rho: float
    theta: float = 0.0

    def __post_init__(self):
        if not 0 < self.alpha < 2:
            raise DomainError(f"alpha must lie in (0, 2), got {self.alpha}")
        if not 0 < self.rho <= 1:
            raise DomainError(f"rho must lie in (0, 1], got {self.rho}")
        if not self.theta >= 0:
            raise DomainError(f"theta must be nonnegative, got {self.theta}")

    def require_tempered(self, what):
        if self.rho < 1 and self.theta == 0:
            raise DomainError(f"{what} are infinite without tempering (theta = 0, rho < 1)")


@dataclass(frozen=True, eq=False)
class TimeGrid:
    times: np.ndarray

    def __post_init__(self):
        t = np.array(self.times, dtype=float).ravel()
        if t.size == 0:
            raise DomainError("time grid is empty")
        if not t[0] > 0:
            raise DomainError("time grid must start strictly after 0 (t = 0 is the a.s. zero point)")
        if np.any(np.diff(t) <= 0):
            raise DomainError("time grid must be strictly increasing")
        t.setflags(write=False)
        object.__setattr__(self, "times", t)

    @classmethod
    def uniform(cls, stop, n, start=None):
        """n points ending at ``stop``; ``start`` defaults to stop/n (a t_j = j dt grid)."""
        start = stop / n if start is None else start
        return cls(np.linspace(start, stop, n))

    @classmethod
    def geometric(cls, start, stop, n):
        return cls(np.geomspace(start, stop, n))

    def __len__(self):
        return self.times.size

    @property
    def step(self):
        """Spacing dt if the grid is t_j = j dt, else None."""
        t = self.times
        dt = t[0]
        if np.allclose(t, dt * np.arange(1, t.size + 1), rtol=1e-12, atol=0):
            return float(dt)
        return None


@dataclass(frozen=True, eq=False)
class PathBatch:
    grid: TimeGrid
    values: np.ndarray
    seed: int
    params: ModelParams
    method: str = "cholesky"
    mixing: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        if self.values.ndim != 2 or self.values.shape[1] != len(self.grid):
            raise DomainError("values must have shape (n_paths, len(grid))")

    @property
    def n_paths(self):
        return self.values.shape[0]


def kernel_gamma(alpha, t, s):
    t = np.asarray(t, dtype=float)
    s = np.asarray(s, dtype=float)
    if np.any(t < 0) or np.any(s < 0):
        raise DomainError("kernel times must be nonnegative")
    out = t ** alpha + s ** alpha - np.abs(t - s) ** alpha
    return out if out.ndim else float(out)


def cov_matrix(grid: TimeGrid, alpha):
    t = grid.times
    cov = kernel_gamma(alpha, t[:, None], t[None, :])
    return 0.5 * (cov + cov.T)


def cholesky_factor(cov):
    """Lower Cholesky factor, retrying with diagonal jitter up to 1e-12 * trace."""
    try:
        return np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        pass
    trace = float(np.trace(cov))
    eye = np.eye(cov.shape[0])
    for scale in (1e-15, 1e-14, 1e-13, 1e-12):
        try:
            return np.linalg.cholesky(cov + scale * trace * eye)
        except np.linalg.LinAlgError:
            continue
    raise NumericalError("covariance matrix is indefinite beyond 1e-12 * trace jitter")


def _circulant_sqrt_eigs(n, hurst):
    """sqrt(lambda / M) for the Davies-Harte embedding of unit-step fGn, or None
    if the embedding has a negative eigenvalue."""
    k = np.arange(n + 1, dtype=float)
    h2 = 2.0 * hurst
    acov = 0.5 * (np.abs(k + 1) ** h2 - 2 * k ** h2 + np.abs(k - 1) ** h2)
    row = np.concatenate([acov, acov[-2:0:-1]])
    lam = np.fft.fft(row).real
    if lam.min() < -1e-10 * lam.max():
        return None
    return np.sqrt(np.clip(lam, 0.0, None) / row.size)


def _textbook_fbm_block(rng, m, grid, alpha, method, chol, eig_sqrt):
    n = len(grid)
    if method == "circulant":
        big = eig_sqrt.size
        xi = rng.standard_normal((m, big)) + 1j * rng.standard_normal((m, big))
        fgn = np.fft.fft(eig_sqrt * xi, axis=1).real[:, :n]
        return np.cumsum(fgn, axis=1) * grid.step ** (alpha / 2.0)
    z = rng.standard_normal((m, n))
    return z @ chol.T


def _prepare(grid, alpha, method):
    if method not in METHODS:
        raise DomainError(f"unknown path method {method!r}; choose from {METHODS}")
    if method == "circulant":
        eig = _circulant_sqrt_eigs(len(grid), alpha / 2.0) if grid.step is not None else None
        if eig is not None:
            return "circulant", None, eig
        method = "cholesky"
    chol = cholesky_factor(0.5 * cov_matrix(grid, alpha))
    return method, chol, None


def sample_fbm(grid: TimeGrid, alpha, n_paths, seed, method="cholesky", workers=None):
    """Textbook fBm with Hurst alpha/2: Cov = (t^a + s^a - |t-s|^a) / 2."""
    if not 0 < alpha < 2:
        raise DomainError(f"alpha must lie in (0, 2), got {alpha}")
    method, chol, eig = _prepare(grid, alpha, method)
    parts = _rng.map_blocks(
        lambda r, m: _textbook_fbm_block(r, m, grid, alpha, method, chol, eig),
        int(n_paths), seed, workers)
    return np.concatenate(parts, axis=0)


def sample_ggbm_paths(params: ModelParams, grid: TimeGrid, n_paths, seed, method="cholesky",
                      workers=None):
    """Paths sqrt(Y) * G with G ~ N(0, Sigma_alpha) and Y an independent mixing draw.

    ``method="circulant"`` uses Davies-Harte embedding on t_j = j dt grids and
    falls back to Cholesky elsewhere or when the embedding is not nonnegative.
    Output depends only on (seed, params, grid, n_paths, method).
    """
    if int(n_paths) != n_paths or n_paths < 1:
        raise DomainError("n_paths must be a positive integer")
    used, chol, eig = _prepare(grid, params.alpha, method)

    def block(r, m):
        y = sample_mixing_Y(params.rho, params.theta, r, size=m)
        g = _textbook_fbm_block(r, m, grid, params.alpha, used, chol, eig)
        return y, math.sqrt(2.0) * np.sqrt(y)[:, None] * g

    parts = _rng.map_blocks(block, int(n_paths), seed, workers)
    y = np.concatenate([p[0] for p in parts])
    values = np.concatenate([p[1] for p in parts], axis=0)
    return PathBatch(grid, values, int(seed), params, used, y)


def _gamma_ratio(params, q):
    if params.rho == 1:
        return math.exp(-q)
    return upper_inc_gamma(params.rho, params.theta + q) / upper_inc_gamma(params.rho, params.theta)


def char_fn_ndim(params: ModelParams, grid: TimeGrid, xi):
    xi = np.asarray(xi, dtype=float).ravel()
    if xi.size != len(grid):
        raise DomainError("xi must have one entry per grid point")
    q = 0.5 * float(xi @ cov_matrix(grid, params.alpha) @ xi)
    return _gamma_ratio(params, q)


def increment_char_fn(params: ModelParams, xi, t, s):
    """E exp(i xi (B(t) - B(s))) = Gamma(rho, theta + xi^2 |t-s|^alpha) / Gamma(rho, theta).

    Follows from the n-point characteristic function, since
    gamma(t,t) + gamma(s,s) - 2 gamma(t,s) = 2 |t-s|^alpha.
    """
    if t < 0 or s < 0:
        raise DomainError("times must be nonnegative")
    return _gamma_ratio(params, xi * xi * abs(t - s) ** params.alpha)


def increment_char_fn_paper_literal(params: ModelParams, xi, t, s):
    """The printed increment law with xi^2 |t-s|^alpha / 2: half the variance of the
    process defined by :func:`char_fn_ndim`."""
    if t < 0 or s < 0:
        raise DomainError("times must be nonnegative")
    return _gamma_ratio(params, 0.5 * xi * xi * abs(t - s) ** params.alpha)


def analytic_covariance(params: ModelParams, t, s):
    """cov(B(t), B(s)) = e^-theta theta^(rho-1) / Gamma(rho, theta) * gamma_alpha(t, s)."""
    params.require_tempered("second moments")
    return mixing_moment(params.rho, params.theta, 1) * kernel_gamma(params.alpha, t, s)


def _even_order(k):
    if int(k) != k or k < 0:
        raise DomainError(f"moment order must be a nonnegative integer, got {k}")
    return int(k)


def analytic_moment(params: ModelParams, t, k):
    """E[B(t)^k] = (2n-1)!! E[Y^n] (2 t^alpha)^n for k = 2n (0 for odd k)."""
    k = _even_order(k)
    if k % 2:
        return 0.0
    if k == 0:
        return 1.0
    params.require_tempered("moments")
    n = k // 2
    dfact = math.factorial(2 * n) // (math.factorial(n) * 2 ** n)
    return dfact * mixing_moment(params.rho, params.theta, n) * (2.0 * t ** params.alpha) ** n


def paper_literal_moment(params: ModelParams, t, k):
    """The printed moment expression 2 t^(alpha n) G^{2,0}_{1,2}[...] / Gamma(rho, theta).

    Agrees with :func:`analytic_moment` only for k = 2.
    """
    k = _even_order(k)
    if k % 2:
        return 0.0
    if k == 0:
        return 1.0
    params.require_tempered("moments")
    n = k // 2
    return 2.0 * t ** (params.alpha * n) * mixing_moment(params.rho, params.theta, n)


def increment_msd(params: ModelParams, seed, n_paths=100_000, n_steps=128, method="cholesky",
                  workers=None):
    """Empirical E|B(t+d) - B(t)|^2 on a t_j = j/n_steps grid for dyadic lags d.

    Averages over all start points and paths. Returns (lags, msd).
    """
    if n_steps < 4 or n_steps & (n_steps - 1):
        raise DomainError("n_steps must be a power of two >= 4")
    grid = TimeGrid.uniform(1.0, n_steps)
    used, chol, eig = _prepare(grid, params.alpha, method)
    lag_steps = [2 ** j for j in range(int(math.log2(n_steps)))]

    def block(r, m):
        y = sample_mixing_Y(params.rho, params.theta, r, size=m)
        g = _textbook_fbm_block(r, m, grid, params.alpha, used, chol, eig)
        b = np.concatenate([np.zeros((m, 1)), np.sqrt(2.0 * y)[:, None] * g], axis=1)
        sq = np.array([np.sum((b[:, L:] - b[:, :-L]) ** 2) for L in lag_steps])
        return sq, np.array([m * (n_steps + 1 - L) for L in lag_steps], dtype=float)

    parts = _rng.map_blocks(block, int(n_paths), seed, workers)
    sums = np.sum([p[0] for p in parts], axis=0)
    counts = np.sum([p[1] for p in parts], axis=0)
    lags = np.array(lag_steps, dtype=float) / n_steps
    return lags, sums / counts


def holder_scaling_check(params: ModelParams, seed, n_paths=100_000, n_steps=128, **kw):
    """Slope of log E|dB|^2 against log lag; the increment law predicts alpha."""
    params.require_tempered("increment moments")
    lags, msd = increment_msd(params, seed, n_paths=n_paths, n_steps=n_steps, **kw)
    slope, _ = np.polyfit(np.log(lags), np.log(msd), 1)
    return float(slope)
