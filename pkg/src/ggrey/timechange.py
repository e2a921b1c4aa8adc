"""The random-time process Y_rho (theta = 0) and its hitting time T_rho.

The n-times Laplace transform of Y_rho depends on (eta, t) only through
sum eta_k t_k, so Y_rho(t) = t * Y with a single draw Y of the untempered
mixing law, and T_rho(x) = x / Y = x * Beta(rho, 1 - rho).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UsageError
from .specfun import prabhakar_ml, upper_inc_gamma

__all__ = [
    "TimeChangeParams", "density_Y", "density_Y_paper_literal", "density_T", "sample_Y_path",
    "sample_T", "laplace_pairs", "LAPLACE_PAIRS", "pde_residual_T", "pde_residual_Y",
    "interior_points",
]

LAPLACE_PAIRS = ("h_time", "h_level", "l_space", "l_time")


@dataclass(frozen=True)
class TimeChangeParams:
    rho: float

    def __post_init__(self):
        _check_rho(self.rho)


def _check_rho(rho):
    if not 0 < rho < 1:
        raise DomainError(f"rho must lie in (0, 1) for the time-change densities, got {rho}")


def _beta_norm(rho):
    # Gamma(rho) Gamma(1 - rho) = pi / sin(pi rho)
    return math.pi / math.sin(math.pi * rho)


def density_Y(y, t, rho):
    """l_rho(y, t) = t^rho / (Gamma(rho) Gamma(1-rho) y (y-t)^rho) for y > t."""
    _check_rho(rho)
    if not t > 0:
        raise DomainError(f"t must be positive, got {t}")
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    m = y > t
    ym = y[m]
    out[m] = t ** rho / (_beta_norm(rho) * ym * (ym - t) ** rho)
    return out if out.ndim else float(out)


def density_Y_paper_literal(y, t, rho):
    """The printed form 1_{y>t} / (Gamma(rho) Gamma(1-rho) y (y-1)^rho); defined for t >= 1.

    Kept only to document that it is not a density in y for t != 1.
    """
    _check_rho(rho)
    if not t >= 1:
        raise DomainError("the printed form is real-valued only for t >= 1")
    y = np.asarray(y, dtype=float)
    out = np.zeros_like(y)
    m = y > t
    ym = y[m]
    out[m] = 1.0 / (_beta_norm(rho) * ym * (ym - 1.0) ** rho)
    return out if out.ndim else float(out)


def density_T(t, x, rho):
    """h_rho(t, x) = t^(rho-1) (x-t)^(-rho) / (Gamma(rho) Gamma(1-rho)) for 0 < t < x."""
    _check_rho(rho)
    if not x > 0:
        raise DomainError(f"level x must be positive, got {x}")
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    m = (t > 0) & (t < x)
    tm = t[m]
    out[m] = tm ** (rho - 1.0) * (x - tm) ** (-rho) / _beta_norm(rho)
    return out if out.ndim else float(out)


def sample_Y_path(rho, times, rng, size=None):
    """Paths t -> t * Y with Y = 1 / Beta(rho, 1-rho); shape (n,) or (size, n)."""
    _check_rho(rho)
    t = np.asarray(getattr(times, "times", times), dtype=float)
    if t.ndim != 1 or np.any(t < 0):
        raise DomainError("times must be a 1-d array of nonnegative values")
    count = 1 if size is None else int(size)
    y = 1.0 / rng.beta(rho, 1.0 - rho, size=count)
    out = y[:, None] * t[None, :]
    return out[0] if size is None else out


def sample_T(x, rho, rng, size=None):
    """Hitting time of level x: x * V with V ~ Beta(rho, 1-rho)."""
    _check_rho(rho)
    if not x >= 0:
        raise DomainError(f"level x must be nonnegative, got {x}")
    v = rng.beta(rho, 1.0 - rho, size=size)
    return x * v


def laplace_pairs(rho, which, args):
    """Closed-form Laplace transforms of the two densities.

    ``which`` / ``args``:
      h_time  (xi, x):  int e^{-xi t} h(t, x) dt   = E^rho_{1,1}(-xi x)
      h_level (eta, t): int e^{-eta x} h(t, x) dx  = (eta t)^(rho-1) e^(-eta t) / Gamma(rho)
      l_space (eta, t): int e^{-eta y} l(y, t) dy  = Gamma(rho, eta t) / Gamma(rho)
      l_time  (xi, y):  int e^{-xi t} l(y, t) dt   = rho E^{1+rho}_{1,2}(-y xi)
    """
    if which not in LAPLACE_PAIRS:
        raise UsageError(f"unknown Laplace pair {which!r}; choose from {LAPLACE_PAIRS}")
    _check_rho(rho)
    s, v = (float(a) for a in args)
    if s < 0 or v < 0:
        raise DomainError("Laplace-pair arguments must be nonnegative")
    if which == "h_time":
        return prabhakar_ml(1.0, 1.0, rho, -s * v)
    if which == "h_level":
        if s * v == 0:
            raise DomainError("h_level needs eta * t > 0")
        z = s * v
        return z ** (rho - 1.0) * math.exp(-z) / math.gamma(rho)
    if which == "l_space":
        return upper_inc_gamma(rho, s * v) / math.gamma(rho)
    return rho * prabhakar_ml(1.0, 2.0, 1.0 + rho, -v * s)


def interior_points(ys=(1.0, 2.0, 3.0), fractions=(0.2, 0.35, 0.5, 0.65, 0.8), t_min=0.2):
    """(t, y) pairs with t = f * y, t >= t_min: away from both singular lines."""
    pts = [(f * y, y) for y in ys for f in fractions if f * y >= t_min]
    return np.array(pts)


def _check_points(points, step):
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != 2:
        raise DomainError("points must be (t, y) pairs")
    if not step > 0:
        raise DomainError("step must be positive")
    t, y = pts[:, 0], pts[:, 1]
    if np.any(t - step <= 0) or np.any((y - step) - (t + step) <= 0):
        raise DomainError("finite-difference stencil touches the singular set t = 0 or t = y")
    return t, y


def pde_residual_T(rho, points, step=1e-4):
    """max |d_t h + d_y h - (rho-1)/t h| at (t, y) points by central differences."""
    _check_rho(rho)
    t, y = _check_points(points, step)
    res = []
    for ti, yi in zip(t, y):
        dt = (density_T(ti + step, yi, rho) - density_T(ti - step, yi, rho)) / (2 * step)
        dy = (density_T(ti, yi + step, rho) - density_T(ti, yi - step, rho)) / (2 * step)
        res.append(abs(dt + dy - (rho - 1.0) / ti * density_T(ti, yi, rho)))
    return float(max(res))


def pde_residual_Y(rho, points, step=1e-4):
    """max |d_t l + d_y l - (rho/t - 1/y) l| at (t, y) points by central differences."""
    _check_rho(rho)
    t, y = _check_points(points, step)
    res = []
    for ti, yi in zip(t, y):
        dt = (density_Y(yi, ti + step, rho) - density_Y(yi, ti - step, rho)) / (2 * step)
        dy = (density_Y(yi + step, ti, rho) - density_Y(yi - step, ti, rho)) / (2 * step)
        res.append(abs(dt + dy - (rho / ti - 1.0 / yi) * density_Y(yi, ti, rho)))
    return float(max(res))
