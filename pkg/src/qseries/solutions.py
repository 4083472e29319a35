#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Local solutions of the q-confluent hypergeometric equation

    (1 - abqx) u(q^2 x) - {1 - (a+b) q x} u(qx) - q x u(x) = 0

around the origin (u2, convergent) and around infinity (S_mu, i.e. v1/v2 with
x^{-alpha} replaced by theta(a mu x) / theta(mu x)).
"""

import cmath
import itertools
import logging
import math
from typing import Callable, Iterator

from src.errors import DomainError, ParameterError
from src.models import FormalSeries, QParam, SpiralSet
from src.models.report import TINY
from src.qcore import log_qpoch_inf, log_theta, theta, theta_ratio, truncated_sum
from src.qseries.continuation import phi21_continued, phi21_c0_continued

logger = logging.getLogger(__name__)


def origin_spiral(qp: QParam) -> SpiralSet:
    """[1;q]: zeros of theta(-qx), hence poles of u2."""
    return SpiralSet.of(1, guard=qp.guard, labels=["[1;q]"])


def _con2_terms(a: complex, b: complex, qp: QParam, x: complex) -> Iterator[complex]:
    """Terms c_n x^n (n >= 1) of the entire series f with u2 = f / theta(-qx)."""
    q = qp.q
    prev2, prev = 0j, 1 + 0j
    power = 1 + 0j
    for n in itertools.count(1):
        num = (-q ** (2 * n + 1) + (a + b) * q ** (n + 1)) * prev + a * b * q ** (2 * n) * prev2
        prev2, prev = prev, num / (q * (q ** n - 1))
        power *= x
        yield prev * power


def u2_solution(a: complex, b: complex, qp: QParam, x: complex) -> complex:
    """u2(x) = (abx;q)_inf / theta(-qx) * 2_phi_1(q/a, q/b; 0; q, abx).

    Where abx lies on q^{-N} the poles of 2_phi_1 cancel against zeros of
    (abx;q)_inf; there u2 is summed from its entire series instead.
    """
    if a == 0 or b == 0:
        raise ParameterError(f"u2 needs a, b != 0, got a={a}, b={b}")
    origin_spiral(qp).require_clear(qp, x)
    q = qp.q
    hit = SpiralSet.of(1, guard=qp.guard).nearest(qp, a * b * x)
    if hit.k <= 0 and hit.distance < qp.guard:
        logger.debug(f"u2 at x={x}: abx on q^-{-hit.k}, summing the entire series")
        f = truncated_sum(_con2_terms(a, b, qp, x), qp, "u2 entire series", start=1 + 0j)
        return f / theta(qp, -q * x)
    series = phi21_c0_continued(q / a, q / b, qp, a * b * x)
    log_prefactor = log_qpoch_inf(a * b * x, qp) - log_theta(qp, -q * x)
    if math.isinf(log_prefactor.real):
        return 0j
    return cmath.exp(log_prefactor) * series


def infinity_series(a: complex, b: complex, qp: QParam, x: complex) -> complex:
    """2_phi_1(a, 0; aq/b; q, q/(abx)), the series part of v1 and S_mu."""
    q = qp.q
    return phi21_continued(a, 0, a * q / b, qp, q / (a * b * x))


def v_solution(a: complex, b: complex, mu: complex, qp: QParam, x: complex) -> complex:
    """S_mu(a,b;q,x) = theta(a mu x) / theta(mu x) * 2_phi_1(a,0;aq/b;q,q/abx).

    v1 is this function; v2 is the same with a and b exchanged.
    """
    if x == 0:
        raise DomainError("S_mu is undefined at x=0")
    return theta_ratio(qp, a, mu * x) * infinity_series(a, b, qp, x)


def v1_solution(a: complex, b: complex, mu: complex, qp: QParam, x: complex) -> complex:
    return v_solution(a, b, mu, qp, x)


def v2_solution(a: complex, b: complex, mu: complex, qp: QParam, x: complex) -> complex:
    return v_solution(b, a, mu, qp, x)


def con2_series(a: complex, b: complex, qp: QParam, order: int) -> FormalSeries:
    """Power-series solution f, f(0) = 1, of

        [q^3 x (1 - abqx) sigma_q^2 + q {1 - (a+b) q x} sigma_q - q] f = 0,

    so that u2 = f / theta(-qx).
    """
    q = qp.q
    coeffs = [1 + 0j]
    for n in range(1, order + 1):
        prev2 = coeffs[n - 2] if n >= 2 else 0j
        num = (-q ** (2 * n + 1) + (a + b) * q ** (n + 1)) * coeffs[n - 1] + a * b * q ** (2 * n) * prev2
        coeffs.append(num / (q * (q ** n - 1)))
    return FormalSeries.of(coeffs)


def equation_residual(u: Callable[[complex], complex], a: complex, b: complex, qp: QParam,
                      x: complex) -> float:
    """Scaled residual of (1 - abqx) u(q^2 x) - {1 - (a+b)qx} u(qx) - qx u(x)."""
    q = qp.q
    terms = (
        (1 - a * b * q * x) * u(q * q * x),
        -(1 - (a + b) * q * x) * u(q * x),
        -q * x * u(x),
    )
    return abs(sum(terms)) / max(max(abs(t) for t in terms), TINY)
