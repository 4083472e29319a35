#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Solutions around infinity and the q-elliptic connection coefficients.

    S_mu(a,b;q,x)    = theta(a mu x)/theta(mu x) * 2_phi_1(a,0;aq/b;q,q/abx)
    C_mu^lambda(a,b) = (b;q)_inf/(b/a;q)_inf * theta(a lambda)/theta(lambda)
                       * theta(qax/lambda)/theta(qx/lambda) * theta(mu x)/theta(a mu x)
    C_mu(a,b)        = (q/a;q)_inf/(b/a,q;q)_inf * theta(-aqx)/theta(-qx)
                       * theta(mu x)/theta(a mu x)

so that 2_f_0 = C_mu^lambda(a,b) S_mu(a,b) + C_mu^lambda(b,a) S_mu(b,a) and
2_f_1 = u2 = C_mu(a,b) S_mu(a,b) + C_mu(b,a) S_mu(b,a).
"""

import logging
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from src.connection.context import (
    ConnectionContext, LAMBDA, MU, MU_OVER_A, MU_OVER_B, ORIGIN,
    THETA_A_MU, THETA_B_MU, THETA_MU,
)
from src.models import VerificationReport
from src.qcore import qpoch_inf, qpoch_multi, theta_ratio
from src.qseries import equation_residual, u2_solution, v_solution
from src.resummation import f20, require_generic_exponents

logger = logging.getLogger(__name__)

ROW1_TOLERANCE = 1e-8
ROW2_TOLERANCE = 1e-9


def chge_residual(u: Callable[[complex], complex], ctx: ConnectionContext, x: complex) -> float:
    """Scaled residual of the q-confluent equation for u at x."""
    return equation_residual(u, ctx.a, ctx.b, ctx.qp, x)


def _ordered(ctx: ConnectionContext, swap: bool) -> Tuple[complex, complex]:
    return (ctx.b, ctx.a) if swap else (ctx.a, ctx.b)


def _theta_mu_ratio(ctx: ConnectionContext, swap: bool, x: complex) -> complex:
    """theta(mu x) / theta(a mu x), the inverse of the prefactor of S_mu."""
    a, _ = _ordered(ctx, swap)
    ctx.require_clear(x, THETA_B_MU if swap else THETA_A_MU)
    return theta_ratio(ctx.qp, 1 / a, a * ctx.mu * x)


def S_mu(ctx: ConnectionContext, swap: bool, x: complex) -> complex:
    a, b = _ordered(ctx, swap)
    ctx.require_clear(x, MU, MU_OVER_B if swap else MU_OVER_A, THETA_MU)
    return v_solution(a, b, ctx.mu, ctx.qp, x)


def C_mu_lambda(ctx: ConnectionContext, swap: bool, x: complex) -> complex:
    a, b = _ordered(ctx, swap)
    qp, lam = ctx.qp, ctx.lam
    require_generic_exponents(a, b, qp)
    ctx.require_clear(x, LAMBDA)
    constant = qpoch_inf(b, qp) / qpoch_inf(b / a, qp) * theta_ratio(qp, a, lam)
    return constant * theta_ratio(qp, a, qp.q * x / lam) * _theta_mu_ratio(ctx, swap, x)


def C_mu(ctx: ConnectionContext, swap: bool, x: complex) -> complex:
    a, b = _ordered(ctx, swap)
    qp = ctx.qp
    require_generic_exponents(a, b, qp)
    ctx.require_clear(x, ORIGIN)
    constant = qpoch_inf(qp.q / a, qp) / qpoch_multi([b / a, qp.q], qp)
    return constant * theta_ratio(qp, a, -qp.q * x) * _theta_mu_ratio(ctx, swap, x)


@dataclass
class ConnectionMatrix:
    """[[C_mu^lambda(a,b), C_mu^lambda(b,a)], [C_mu(a,b), C_mu(b,a)]] at x, with both row checks."""
    x: complex
    entries: np.ndarray
    solutions: Tuple[complex, complex]
    row1: VerificationReport
    row2: VerificationReport

    @property
    def passed(self) -> bool:
        return self.row1.passed and self.row2.passed


def connection_matrix(ctx: ConnectionContext, x: complex) -> ConnectionMatrix:
    ctx.require_clear(x)
    entries = np.array([
        [C_mu_lambda(ctx, False, x), C_mu_lambda(ctx, True, x)],
        [C_mu(ctx, False, x), C_mu(ctx, True, x)],
    ], dtype=complex)
    solutions = np.array([S_mu(ctx, False, x), S_mu(ctx, True, x)], dtype=complex)
    combined = entries @ solutions
    params = {**ctx.params(), "x": x}
    row1 = VerificationReport.compare(
        "matrix", f20(ctx.a, ctx.b, ctx.lam, ctx.qp, x), combined[0], ROW1_TOLERANCE,
        params=params, notes="row 1: 2f0 = C_mu^lambda S_mu + swap")
    row2 = VerificationReport.compare(
        "matrix", u2_solution(ctx.a, ctx.b, ctx.qp, x), combined[1], ROW2_TOLERANCE,
        params=params, notes="row 2: 2f1 = C_mu S_mu + swap")
    return ConnectionMatrix(x=x, entries=entries, solutions=(complex(solutions[0]), complex(solutions[1])),
                            row1=row1, row2=row2)
