#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Jacobi theta function theta_q(x) = sum_{n in Z} q^{n(n-1)/2} x^n.

Evaluation reduces x into the annulus 1 <= |y| <= |q|^{-1/2} with
theta(x) = x^k q^{k(k-1)/2} theta(q^k x) and the inversion theta(x) = x theta(1/x),
then takes the log of the triple product (q, -y, -q/y; q)_inf there. Every
factor of the product is summed as log1p, so no cancellation occurs as q -> 1-0.
"""

import cmath
import math
import logging
from typing import Tuple

from src.errors import DomainError, PoleError
from src.models import QParam, SpiralSet
from src.qcore.products import log_qpoch_multi, qpoch_multi

logger = logging.getLogger(__name__)


def _reduce(qp: QParam, x: complex) -> Tuple[complex, complex]:
    """(log_prefactor, y) with theta(x) = exp(log_prefactor) theta(y), 1 <= |y| <= |q|^{-1/2}."""
    log_x = cmath.log(x)
    k = round(-log_x.real / math.log(qp.abs_q))
    log_prefactor = 0j
    y = x
    if k != 0:
        # theta(x) = x^k q^{k(k-1)/2} theta(q^k x)
        log_prefactor = k * log_x + (k * (k - 1) // 2) * qp.log_q
        try:
            y = x * qp.q ** k
        except OverflowError:
            y = cmath.exp(log_x + k * qp.log_q)
        if y == 0 or not math.isfinite(abs(y)):
            raise DomainError(f"theta argument x={x} cannot be reduced in double precision")
    if abs(y) < 1.0:
        log_prefactor += cmath.log(y)
        y = 1.0 / y
    return log_prefactor, y


def theta_parts(qp: QParam, x: complex) -> Tuple[complex, complex]:
    """Split theta(x) = exp(log_value) * core.

    Returns:
        (log theta(x), 1) away from the zeros, (log_prefactor, 0) on an exact zero.
    """
    if x == 0:
        raise DomainError("theta is undefined at x=0")
    log_prefactor, y = _reduce(qp, complex(x))
    log_core = log_qpoch_multi([qp.q, -y, -qp.q / y], qp)
    if math.isinf(log_core.real):
        return log_prefactor, 0j
    return log_prefactor + log_core, 1 + 0j


def theta(qp: QParam, x: complex) -> complex:
    """Jacobi theta function theta_q(x), x != 0."""
    log_value, core = theta_parts(qp, x)
    if core == 0:
        return 0j
    try:
        return cmath.exp(log_value)
    except OverflowError:
        raise DomainError(f"theta({x}) overflows double precision (log modulus {log_value.real:.4g})")


def log_theta(qp: QParam, x: complex) -> complex:
    """log theta_q(x) (any branch); raises PoleError on an exact zero."""
    log_value, core = theta_parts(qp, x)
    if core == 0:
        raise PoleError(f"theta vanishes at x={x}")
    return log_value


def theta_product(qp: QParam, x: complex) -> complex:
    """Triple-product form (q, -x, -q/x; q)_inf without argument reduction."""
    if x == 0:
        raise DomainError("theta is undefined at x=0")
    return qpoch_multi([qp.q, -x, -qp.q / x], qp)


def theta_zeros(qp: QParam) -> SpiralSet:
    """theta(x) = 0 exactly on [-1;q]."""
    return SpiralSet.of(-1, guard=qp.guard, labels=["theta zero [-1;q]"])


def theta_ratio(qp: QParam, a: complex, x: complex) -> complex:
    """theta(a x) / theta(x), formed in log space.

    Satisfies u(qx) = u(x) / a, the single-valued replacement of x^{-alpha}.
    """
    hit = theta_zeros(qp).nearest(qp, x)
    if hit.distance < qp.guard:
        raise PoleError(f"theta(x) denominator vanishes: x={x} on {hit.label} "
                        f"(relative distance {hit.distance:.3e})")
    if a == 1:
        return 1 + 0j
    log_num, core_num = theta_parts(qp, a * x)
    if core_num == 0:
        return 0j
    log_den, _ = theta_parts(qp, x)
    try:
        return cmath.exp(log_num - log_den)
    except OverflowError:
        raise DomainError(f"theta ratio at x={x} overflows double precision")
