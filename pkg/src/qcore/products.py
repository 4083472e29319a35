#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
q-shifted factorials and the shared truncation rule for infinite sums.

Infinite products are evaluated as exp(sum log(1 - a q^k)) so that values such
as (q;q)_inf ~ exp(-pi^2 / (6 (1-q))) stay finite as q -> 1-0.
"""

import cmath
import math
import logging
from typing import Iterable, Optional, Sequence

import numpy as np

from src.config import settings
from src.errors import ConvergenceError, ParameterError
from src.models import QParam

logger = logging.getLogger(__name__)

# Number of consecutive negligible terms required before a sum is truncated.
SMALL_RUN = 3

NEG_INF = complex(-math.inf, 0.0)


def truncated_sum(terms: Iterable[complex], qp: Optional[QParam], label: str = "series",
                  start: complex = 0j, eps: Optional[float] = None) -> complex:
    """Sum terms until three consecutive ones fall below eps * |partial sum|.

    Args:
        terms: iterator of summands (may be infinite); mpmath numbers work too
        qp: supplies eps and the max_terms cap; None falls back to the settings
        label: name used in the error message
        start: initial partial sum (lets bilateral sums share one total)
        eps: overrides the relative threshold (extended-precision sums)

    Returns:
        The partial sum at the stopping point.
    """
    if eps is None:
        eps = qp.eps if qp is not None else settings.eps
    max_terms = qp.max_terms if qp is not None else settings.max_terms
    total = start
    run = 0
    for count, term in enumerate(terms, 1):
        total += term
        if abs(term) <= eps * abs(total):
            run += 1
            if run >= SMALL_RUN:
                return total
        else:
            run = 0
        if count >= max_terms:
            raise ConvergenceError(f"{label}: no convergence within max_terms={max_terms}")
    return total


def qpoch_n(a: complex, qp: QParam, n: int) -> complex:
    """(a;q)_n = prod_{k<n} (1 - a q^k); 1 for n = 0."""
    if n < 0:
        raise ParameterError(f"qpoch_n needs n >= 0, got {n}")
    result = 1 + 0j
    for k in range(n):
        result *= 1 - a * qp.q ** k
    return result


def _factor_count(a: complex, qp: QParam) -> int:
    """Number of factors needed before |a q^k| < eps * (1 - |q|)."""
    if a == 0:
        return 0
    target = qp.eps * (1.0 - qp.abs_q)
    k = math.ceil((math.log(target) - math.log(abs(a))) / math.log(qp.abs_q))
    count = max(k, 0) + 1
    if count > qp.max_terms:
        raise ConvergenceError(
            f"(a;q)_inf with a={a}: needs {count} factors, max_terms={qp.max_terms}")
    return count


def log_qpoch_inf(a: complex, qp: QParam) -> complex:
    """log (a;q)_inf; real part -inf when a factor is exactly zero."""
    count = _factor_count(a, qp)
    if count == 0:
        return 0j
    terms = a * np.power(qp.q, np.arange(count))
    if np.any(terms == 1):
        return NEG_INF
    return complex(np.sum(np.log1p(-terms)))


def qpoch_inf(a: complex, qp: QParam) -> complex:
    """(a;q)_inf, exactly 0 if some factor 1 - a q^k is exactly 0."""
    log_value = log_qpoch_inf(a, qp)
    if math.isinf(log_value.real):
        return 0j
    return cmath.exp(log_value)


def log_qpoch_multi(params: Sequence[complex], qp: QParam) -> complex:
    return sum((log_qpoch_inf(a, qp) for a in params), 0j)


def qpoch_multi(params: Sequence[complex], qp: QParam) -> complex:
    """(a_1, ..., a_m; q)_inf; 1 for an empty list."""
    log_value = log_qpoch_multi(params, qp)
    if math.isinf(log_value.real):
        return 0j
    return cmath.exp(log_value)
