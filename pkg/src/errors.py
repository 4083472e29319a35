#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exception hierarchy shared by every module.

Library code raises these; only the CLI maps them to exit codes.
"""

from typing import Optional


class QSeriesError(ValueError):
    """Base class for all domain, guard and convergence failures."""


class ConfigError(QSeriesError):
    """An environment variable or CLI parameter could not be parsed."""


class DomainError(QSeriesError):
    """The argument lies outside the operation's domain (x = 0, the cut line, ...)."""


class SpiralError(DomainError):
    """The evaluation point is within guard distance of an excluded q-spiral."""

    def __init__(self, guard: str, anchor: complex, point: complex, distance: Optional[float] = None):
        self.guard = guard
        self.anchor = anchor
        self.point = point
        self.distance = distance
        detail = f" (relative distance {distance:.3e})" if distance is not None else ""
        super().__init__(f"spiral {guard}: x={point} lies on [{anchor};q]{detail}")


class PoleError(QSeriesError):
    """A denominator vanishes (theta zero, gamma pole, pole of g)."""


class DegeneracyError(QSeriesError):
    """Parameters hit a degenerate configuration such as alpha-beta in Z."""


class ParameterError(QSeriesError):
    """A series parameter is inadmissible (lower parameter in q^{-N})."""


class DivergenceError(QSeriesError):
    """A series was asked to be summed outside its disk of convergence."""


class ConvergenceError(QSeriesError):
    """A sum or quadrature hit its term/node cap before the stopping rule fired."""


class RegimeError(QSeriesError):
    """An asymptotic series is not in its usable regime."""
