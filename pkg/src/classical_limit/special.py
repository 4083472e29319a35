#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Classical special functions targeted by the q -> 1-0 limits: Gamma, the
confluent series 1F1 and the divergent series 2F0 under optimal truncation.
"""

import itertools
import math
import logging
from dataclasses import dataclass

import mpmath
from scipy import special

from src.config import settings
from src.errors import ConvergenceError, PoleError, RegimeError
from src.qcore import truncated_sum

logger = logging.getLogger(__name__)

REGIME_THRESHOLD = 1e-6
BASE_DPS = 17
FD_STEP = 1e-5


def _is_nonpositive_integer(x: complex) -> bool:
    x = complex(x)
    return x.imag == 0 and x.real <= 0 and x.real == math.floor(x.real)


def gamma_classical(x: complex) -> complex:
    """Gamma(x) for complex x off the poles 0, -1, -2, ..."""
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at x={x}")
    return complex(special.gamma(complex(x)))


def _hyp1f1_mp(alpha, gamma_p, z):
    """Series sum_n (alpha)_n / ((gamma_p)_n n!) z^n at the current mpmath precision."""
    def terms():
        term = mpmath.mpc(1)
        for n in itertools.count(0):
            term = term * (alpha + n) / ((gamma_p + n) * (n + 1)) * z
            yield term

    return truncated_sum(terms(), None, f"1F1({alpha};{gamma_p};{z})", start=mpmath.mpc(1),
                         eps=mpmath.mpf(2) ** (-mpmath.mp.prec))


def _working_dps(z: complex) -> int:
    """Digits lost to cancellation are about |z| / ln 10 when Re z < 0."""
    return BASE_DPS + int(math.ceil(abs(z) / math.log(10)))


def hyp1f1(alpha: complex, gamma_p: complex, z: complex) -> complex:
    """Kummer's 1F1(alpha; gamma_p; z) summed with enough guard digits for double-precision output."""
    if _is_nonpositive_integer(gamma_p):
        raise PoleError(f"1F1 lower parameter {gamma_p} is a non-positive integer")
    with mpmath.workdps(_working_dps(z)):
        value = _hyp1f1_mp(mpmath.mpc(alpha), mpmath.mpc(gamma_p), mpmath.mpc(z))
    return complex(value)


def hyp1f1_residual(alpha: complex, gamma_p: complex, z: complex, step: float = FD_STEP) -> float:
    """Relative residual of z u'' + (gamma - z) u' - alpha u for u = 1F1 by central differences."""
    if _is_nonpositive_integer(gamma_p):
        raise PoleError(f"1F1 lower parameter {gamma_p} is a non-positive integer")
    with mpmath.workdps(_working_dps(z) + 15):
        a, c, z0, h = (mpmath.mpc(v) for v in (alpha, gamma_p, z, step))
        u_minus, u0, u_plus = (_hyp1f1_mp(a, c, z0 + k * h) for k in (-1, 0, 1))
        d1 = (u_plus - u_minus) / (2 * h)
        d2 = (u_plus - 2 * u0 + u_minus) / (h * h)
        terms = (z0 * d2, (c - z0) * d1, -a * u0)
        scale = max(abs(t) for t in terms)
        return float(abs(sum(terms)) / scale) if scale else 0.0


@dataclass(frozen=True)
class AsymptoticValue:
    """Optimally truncated sum with the first omitted term as its error estimate."""
    value: complex
    error: float
    terms: int


def hyp2f0_asymptotic(alpha: complex, beta: complex, z: complex) -> AsymptoticValue:
    """2F0(alpha, beta; -; z) summed up to (not including) its smallest term.

    Raises:
        RegimeError: the smallest term is not below 1e-6, so z is outside the
            asymptotic regime.
    """
    z = complex(z)
    if z == 0:
        return AsymptoticValue(value=1 + 0j, error=0.0, terms=1)
    total = 0j
    term = 1 + 0j
    for n in range(settings.max_terms):
        following = term * (alpha + n) * (beta + n) / (n + 1) * z
        if following == 0:
            return AsymptoticValue(value=total + term, error=0.0, terms=n + 1)
        if abs(following) >= abs(term):
            if abs(term) >= REGIME_THRESHOLD:
                raise RegimeError(
                    f"2F0({alpha},{beta};-;{z}): smallest term {abs(term):.3e} "
                    f"is not below {REGIME_THRESHOLD}")
            logger.debug(f"2F0 optimal truncation after {n} terms, error {abs(term):.3e}")
            return AsymptoticValue(value=total, error=abs(term), terms=n)
        total += term
        term = following
    raise ConvergenceError(f"2F0({alpha},{beta};-;{z}): terms still decreasing after {settings.max_terms}")
