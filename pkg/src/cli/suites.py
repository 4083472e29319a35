#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Identity suites behind `verify`: each runs one identity over the parameter
set of the request (or the default suite set) and returns its reports in a
fixed order.
"""

import math
import logging
from typing import Callable, Dict, List

import numpy as np
from tqdm import tqdm

from src.cli.run_config import DEFAULT_LAMBDA, DEFAULT_MU, RunConfig
from src.config import settings
from src.connection import (
    ConnectionContext, connection_matrix, ellipticity_check, equation_residual_report,
    halton_points, verify_theorem29, verify_three_way, verify_zhang, wronskian_check,
)
from src.models import FormalSeries, QParam, VerificationReport
from src.qcore import theta, theta_product
from src.qseries import con2_series
from src.resummation import (
    borel_laplace_roundtrip_check, g_closed_form, g_taylor_coeffs, lstokes_witness,
    operational_relation_check, qborel_minus, residue_quadrature_check,
    shifted_poch_identity_check,
)

logger = logging.getLogger(__name__)

Suite = Callable[[RunConfig], List[VerificationReport]]

LEMMA27_SEED = 20240207
# off every real q-spiral, so no q of the default set makes (lambda;q)_inf vanish
LEMMA28_LAMBDA = 0.7 + 0.3j
# con2 coefficients carry q^{n(n-1)/2}; keep them above about 1e-200.
UNDERFLOW_LOG = 460.0


def _contexts(cfg: RunConfig) -> List[ConnectionContext]:
    contexts = []
    for qp in cfg.qps():
        a, b = cfg.exponent_pair(qp, defaults=True)
        contexts.append(ConnectionContext.build(
            qp.q, a=a, b=b, lam=cfg.get("lambda", DEFAULT_LAMBDA),
            mu=cfg.get("mu", DEFAULT_MU), qp=qp))
    return contexts


def _points(cfg: RunConfig, ctx: ConnectionContext, default_count: int) -> List[complex]:
    if cfg.has("x"):
        return [complex(cfg.params["x"])]
    return halton_points(cfg.get("n", default_count), ctx)


def _progress(items, desc: str):
    return tqdm(items, desc=desc, disable=not settings.progress, leave=False)


def _pointwise(check: Callable[..., VerificationReport], default_count: int,
               use_tolerance: bool = True) -> Suite:
    """Run check(ctx, x) at sampled points for every q of the request."""
    def suite(cfg: RunConfig) -> List[VerificationReport]:
        kwargs = cfg.tolerance_kwargs() if use_tolerance else {}
        reports = []
        for ctx in _contexts(cfg):
            for x in _progress(_points(cfg, ctx, default_count), f"{cfg.name} q={ctx.q.real:g}"):
                reports.append(check(ctx, x, **kwargs))
        return reports
    return suite


def _matrix(cfg: RunConfig) -> List[VerificationReport]:
    reports = []
    for ctx in _contexts(cfg):
        shifted = ctx.with_mu(0.9 * ctx.mu)
        for x in _progress(_points(cfg, ctx, 10), f"matrix q={ctx.q.real:g}"):
            matrix = connection_matrix(ctx, x)
            reports.extend([matrix.row1, matrix.row2])
            moved = connection_matrix(shifted, x)
            for row, (before, after) in enumerate(zip(matrix.entries @ np.array(matrix.solutions),
                                                      moved.entries @ np.array(moved.solutions)), 1):
                reports.append(VerificationReport.compare(
                    "matrix", before, after, cfg.tolerance or 1e-9,
                    params={**ctx.params(), "x": x, "mu2": shifted.mu},
                    notes=f"row {row} mu-invariance"))
    return reports


def _ellipticity(cfg: RunConfig) -> List[VerificationReport]:
    reports = []
    for ctx in _contexts(cfg):
        for x in _progress(_points(cfg, ctx, 10), f"ellipticity q={ctx.q.real:g}"):
            reports.append(ellipticity_check(ctx, x, swap=False, **cfg.tolerance_kwargs()))
            reports.append(ellipticity_check(ctx, x, swap=True, **cfg.tolerance_kwargs()))
            reports.append(wronskian_check(ctx, x))
    return reports


def _theta_identity(name: str, rhs: Callable[[QParam, complex], complex]) -> Suite:
    def suite(cfg: RunConfig) -> List[VerificationReport]:
        tolerance = cfg.tolerance or 1e-12
        reports = []
        for ctx in _contexts(cfg):
            for x in _points(cfg, ctx, 100):
                reports.append(VerificationReport.compare(
                    name, theta(ctx.qp, x), rhs(ctx.qp, x), tolerance,
                    params={"q": ctx.q, "x": x}))
        return reports
    return suite


def _equation_residuals(cfg: RunConfig) -> List[VerificationReport]:
    tolerances = {"u2": 1e-10, "S_ab": 1e-10, "S_ba": 1e-10, "f20": 1e-9, "f21": 1e-9}
    reports = []
    for ctx in _contexts(cfg):
        for x in _progress(_points(cfg, ctx, 10), f"residuals q={ctx.q.real:g}"):
            for name, tolerance in tolerances.items():
                reports.append(equation_residual_report(ctx, name, x, cfg.tolerance or tolerance))
    return reports


def _stokes(cfg: RunConfig) -> List[VerificationReport]:
    reports = []
    for ctx in _contexts(cfg):
        x = _points(cfg, ctx, 1)[0]
        # a second direction off the ray of lambda; lambda q^{1/2} stays on it for real q
        lam2 = cfg.get("lambda2", 1j * ctx.lam)
        reports.append(lstokes_witness(ctx.a, ctx.b, ctx.lam, lam2, ctx.qp, x))
    return reports


def _lemma2_6(cfg: RunConfig) -> List[VerificationReport]:
    kwargs = cfg.tolerance_kwargs()
    reports = []
    for qp in cfg.qps():
        q = qp.q
        e_q = [1 + 0j]
        for n in range(1, _representable_order(qp, 60) + 1):
            e_q.append(e_q[-1] * q ** (n - 1) / (1 - q ** n))
        cases = [
            (FormalSeries.of([1] * 9), 0.3),
            (FormalSeries.of([1]), 0.3),
            (FormalSeries.of(e_q), 0.2),
        ]
        for series, x in cases:
            reports.append(borel_laplace_roundtrip_check(series, qp, cfg.get("x", x), **kwargs))
    return reports


def _lemma2_7(cfg: RunConfig) -> List[VerificationReport]:
    rng = np.random.default_rng(LEMMA27_SEED)
    coeffs = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    series = FormalSeries.of(coeffs)
    upper = cfg.get("m", 4)
    reports = []
    for qp in cfg.qps():
        for m in range(upper + 1):
            for l in range(upper + 1):
                reports.append(operational_relation_check(series, m, l, qp, **cfg.tolerance_kwargs()))
    return reports


def _lemma2_8(cfg: RunConfig) -> List[VerificationReport]:
    lam = cfg.get("lambda", LEMMA28_LAMBDA)
    reports = []
    for qp in cfg.qps():
        for k in range(cfg.get("k", 5) + 1):
            reports.append(residue_quadrature_check(lam, k, qp, **cfg.tolerance_kwargs()))
            reports.append(shifted_poch_identity_check(lam, k, qp, **cfg.tolerance_kwargs()))
    return reports


def _representable_order(qp: QParam, order: int) -> int:
    """Largest n <= order whose q^{n(n-1)/2} factor stays far above the double underflow limit."""
    while order > 1 and order * (order - 1) / 2 * -math.log(qp.abs_q) > UNDERFLOW_LOG:
        order -= 1
    return order


def _g_equation(cfg: RunConfig) -> List[VerificationReport]:
    """Functional equation of g at sampled xi, then B^- of the power-series solution vs Taylor coefficients."""
    reports = []
    for ctx in _contexts(cfg):
        a, b, q = ctx.a, ctx.b, ctx.q
        order = _representable_order(ctx.qp, cfg.get("order", 40))
        radius = 0.9 * min(1 / abs(a * q), 1 / abs(b * q))
        for x in _points(cfg, ctx, 100):
            xi = x * radius / 5.0
            lhs = g_closed_form(a, b, ctx.qp, q * xi) * (1 + q * q * xi)
            rhs = (1 + a * q * xi) * (1 + b * q * xi) * g_closed_form(a, b, ctx.qp, xi)
            reports.append(VerificationReport.compare(
                "g_equation", lhs, rhs, cfg.tolerance or 1e-12,
                params={**ctx.params(), "xi": xi}, notes="functional equation"))
        borel = qborel_minus(con2_series(a, b, ctx.qp, order), ctx.qp).series
        taylor = g_taylor_coeffs(a, b, ctx.qp, order)
        for n in range(order + 1):
            reports.append(VerificationReport.compare(
                "g_equation", borel[n], taylor[n], cfg.tolerance or 1e-11,
                params={**ctx.params(), "n": n}, notes="Taylor coefficient"))
    return reports


SUITES: Dict[str, Suite] = {
    "thm2_9": _pointwise(verify_theorem29, 30),
    "three_way": _pointwise(verify_three_way, 30),
    "zhang_cz": _pointwise(verify_zhang, 20),
    "matrix": _matrix,
    "triple_product": _theta_identity("triple_product", theta_product),
    "inversion": _theta_identity("inversion", lambda qp, x: x * theta(qp, 1 / x)),
    "lemma2_6": _lemma2_6,
    "lemma2_7": _lemma2_7,
    "lemma2_8": _lemma2_8,
    "g_equation": _g_equation,
    "equation_residuals": _equation_residuals,
    "stokes": _stokes,
    "ellipticity": _ellipticity,
}
