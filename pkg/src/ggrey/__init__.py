"""Gamma-grey measures, tempered Gamma-grey Brownian motion, the associated
time-change subordinators and their governing equations."""

from .errors import AccuracyError, DomainError, GGreyError, NumericalError, UsageError
from .measure import GreyParams
from .processes import ModelParams, TimeGrid

__all__ = [
    "AccuracyError", "DomainError", "GGreyError", "NumericalError", "UsageError",
    "GreyParams", "ModelParams", "TimeGrid",
]

__version__ = "0.1.0"
