"""Thin adaptive-quadrature layer used by every oracle integral.

Finite intervals go to QUADPACK's QAGS (or QAWS when an algebraic endpoint
weight is given); semi-infinite ones go to QAGI, which maps [a, inf) onto
(0, 1] before subdividing.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy import integrate as _spi

from .errors import AccuracyError, DomainError

SCHEMES = ("adaptive",)


@dataclass(frozen=True)
class QuadratureSpec:
    scheme: str = "adaptive"
    abs_tol: float = 1e-13
    rel_tol: float = 1e-12
    max_subdivisions: int = 400

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise DomainError(f"unknown quadrature scheme {self.scheme!r}")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be positive")


DEFAULT_QUAD = QuadratureSpec()


def integrate(f, a, b, spec: QuadratureSpec = DEFAULT_QUAD, *, endpoint_powers=None,
              points=None, strict=True):
    """Integrate ``f`` over [a, b]; ``b`` may be ``math.inf``.

    ``endpoint_powers=(p, q)`` integrates ``f(x) (x-a)^p (b-x)^q`` with the
    algebraic factor handled analytically (requires finite a, b and p, q > -1).

    Raises AccuracyError when QUADPACK reports failure and the error estimate
    exceeds the requested tolerance by more than a factor 10 (``strict``).
    """
    kw = dict(epsabs=spec.abs_tol, epsrel=spec.rel_tol, limit=spec.max_subdivisions,
              full_output=1)
    if endpoint_powers is not None:
        if math.isinf(a) or math.isinf(b):
            raise DomainError("endpoint weights need a finite interval")
        kw.update(weight="alg", wvar=tuple(endpoint_powers))
    elif points is not None:
        kw["points"] = list(points)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        out = _spi.quad(f, a, b, **kw)
    value, err = out[0], out[1]
    if len(out) > 3 and strict:
        budget = max(spec.abs_tol, spec.rel_tol * abs(value))
        if not math.isfinite(value) or err > 10 * budget:
            raise AccuracyError(f"quadrature on [{a}, {b}] failed: {out[3]}", partial=value)
    return value
