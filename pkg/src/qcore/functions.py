#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
q-gamma, q-exponentials, the q-derivative and the spiral guard predicate.
"""

import cmath
import math
import itertools
from typing import Callable

from src.errors import DomainError, PoleError
from src.models import QParam, SpiralSet, negative_power_index
from src.qcore.products import log_qpoch_inf, qpoch_inf, truncated_sum


def q_gamma(qp: QParam, x: complex) -> complex:
    """Gamma_q(x) = ((q;q)_inf / (q^x;q)_inf) (1-q)^{1-x}, for real 0 < q < 1."""
    if not qp.is_real:
        raise DomainError(f"q_gamma needs real 0 < q < 1, got q={qp.q}")
    qx = qp.power(x)
    m = negative_power_index(qp, qx)
    if m is not None:
        raise PoleError(f"q_gamma pole: q^x = q^-{m} (x a non-positive integer)")
    log_den = log_qpoch_inf(qx, qp)
    if math.isinf(log_den.real):
        raise PoleError(f"q_gamma pole at x={x}")
    q = qp.q.real
    log_value = log_qpoch_inf(qp.q, qp) - log_den + (1 - x) * math.log(1 - q)
    return cmath.exp(log_value)


def q_exp_E(qp: QParam, z: complex) -> complex:
    """E_q(z) = (-z;q)_inf."""
    return qpoch_inf(-z, qp)


def q_exp_E_series(qp: QParam, z: complex) -> complex:
    """E_q(z) = sum q^{n(n-1)/2} z^n / (q;q)_n, the series form."""
    q = qp.q

    def terms():
        term = 1 + 0j
        for n in itertools.count(0):
            term *= q ** n * z / (1 - q ** (n + 1))
            yield term

    return truncated_sum(terms(), qp, "E_q series", start=1 + 0j)


def q_exp_e(qp: QParam, z: complex) -> complex:
    """The small q-exponential e_q(z) = 1 / (z;q)_inf = sum z^n / (q;q)_n."""
    value = qpoch_inf(z, qp)
    if value == 0:
        raise PoleError(f"e_q pole: z={z} lies on [1;q^-1]")
    return 1 / value


def q_derivative(f: Callable[[complex], complex], qp: QParam, x: complex) -> complex:
    """D_q f(x) = (f(x) - f(qx)) / ((1-q) x)."""
    if x == 0:
        raise DomainError("q-derivative is undefined at x=0")
    return (f(x) - f(qp.q * x)) / ((1 - qp.q) * x)


def spiral_guard(spirals: SpiralSet, qp: QParam, x: complex) -> bool:
    """True iff x is within the set's guard of one of its q-spirals."""
    return spirals.contains(qp, x)
