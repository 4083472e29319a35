#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Basic hypergeometric series r_phi_s and the formal coefficients of 2_phi_0.
"""

import itertools
import logging
import math
from typing import Optional

from src.errors import DivergenceError
from src.models import FormalSeries, HypParams, QParam, negative_power_index
from src.qcore import truncated_sum

logger = logging.getLogger(__name__)


def terminating_order(a: complex, qp: QParam) -> Optional[int]:
    """m when the upper parameter a equals q^{-m}, m >= 0 (within guard)."""
    return negative_power_index(qp, a)


def _ratio(p: HypParams, n: int, x: complex) -> complex:
    """t_{n+1} / t_n for the r_phi_s series."""
    q = p.qp.q
    qn = q ** n
    num = 1 + 0j
    for a in p.upper:
        num *= 1 - a * qn
    den = 1 - q ** (n + 1)
    for b in p.lower:
        den *= 1 - b * qn
    return num / den * (-qn) ** p.balance * x


def phi_rs(p: HypParams, x: complex) -> complex:
    """r_phi_s(a_1..a_r; b_1..b_s; q, x).

    Args:
        p: the parameter set (lower parameters already validated)
        x: evaluation point inside the region of convergence

    Returns:
        The truncated sum; exact finite sum when an upper parameter terminates it.
    """
    orders = [m for m in (terminating_order(a, p.qp) for a in p.upper) if m is not None]
    if orders:
        m = min(orders)
        total, term = 1 + 0j, 1 + 0j
        for n in range(m):
            term *= _ratio(p, n, x)
            total += term
        return total
    if p.balance < 0:
        raise DivergenceError(
            f"{p.r}phi{p.s} with r > s+1 diverges for x != 0; use resummation instead")
    if p.balance == 0 and abs(x) >= 1 and x != 0:
        raise DivergenceError(
            f"{p.r}phi{p.s} series diverges at |x|={abs(x):.6g} >= 1; use continuation")

    def terms():
        term = 1 + 0j
        for n in itertools.count(0):
            term *= _ratio(p, n, x)
            yield term

    return truncated_sum(terms(), p.qp, f"{p.r}phi{p.s}", start=1 + 0j)


def phi20_formal_coeffs(a: complex, b: complex, qp: QParam, order: int) -> FormalSeries:
    """Coefficients (a,b;q)_n / (q;q)_n * (-1)^n q^{-n(n-1)/2}, n = 0..order.

    2_phi_0(a,b;-;q,x) is divergent, so it is only ever handled as coefficients.
    """
    q = qp.q
    coeffs = [1 + 0j]
    for n in range(1, order + 1):
        qk = q ** (n - 1)
        coeffs.append(coeffs[-1] * -(1 - a * qk) * (1 - b * qk) / ((1 - q ** n) * qk))
    return FormalSeries.of(coeffs)


def u1_is_divergent_diagnostic(a: complex, b: complex, qp: QParam) -> bool:
    """Ratio test on the 2_phi_0 coefficients: True iff they grow super-geometrically."""
    if terminating_order(a, qp) is not None or terminating_order(b, qp) is not None:
        return False
    # long enough for |q|^{-n/2} to reach 4
    order = max(40, 2 * math.ceil(math.log(4.0) / -math.log(qp.abs_q)))
    q = qp.q
    ratios = []
    for n in range(order + 1):
        qn = q ** n
        ratios.append(abs((1 - a * qn) * (1 - b * qn) / ((1 - q ** (n + 1)) * qn)))
    half = ratios[order // 2]
    logger.debug(f"2phi0 ratio test: r_{order // 2}={half:.3e}, r_{order}={ratios[-1]:.3e}")
    return ratios[-1] > 1.0 and ratios[-1] > 2.0 * half
