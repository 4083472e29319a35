#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
The closed-form Borel image g(xi) of the solution around the origin and the
residue calculus that turns its q-Laplace integral into the two-term sum of
solutions around infinity.

    g(xi) = (-q^2 xi;q)_inf / ((-qa xi;q)_inf (-qb xi;q)_inf)

has simple poles at -1/(a q^{k+1}) and -1/(b q^{k+1}), k >= 0.
"""

import cmath
import logging
from typing import Optional

from src.errors import DegeneracyError, DomainError, ParameterError, PoleError
from src.models import FormalSeries, QParam, SpiralSet, VerificationReport, power_index
from src.qcore import (
    log_qpoch_inf, log_qpoch_multi, qpoch_inf, qpoch_multi, qpoch_n, theta, theta_parts, theta_ratio,
)
from src.qseries import infinity_series, origin_spiral
from src.resummation.laplace import (
    ContourSpec, circle_trapezoid, laplace_spiral, qlaplace_minus_quadrature,
)

logger = logging.getLogger(__name__)

G_RADIUS_FRACTION = 0.4
RESIDUE_RADIUS_FRACTION = 0.05


def require_generic_exponents(a: complex, b: complex, qp: QParam) -> None:
    """Raise DegeneracyError when b/a lies on q^Z, i.e. alpha - beta in Z."""
    m = power_index(qp, b / a)
    if m is not None:
        raise DegeneracyError(f"alpha - beta is an integer: b/a = q^{m}")


def g_closed_form(a: complex, b: complex, qp: QParam, xi: complex) -> complex:
    q = qp.q
    for label, c in (("a", a), ("b", b)):
        if c == 0:
            continue
        first_pole = -1 / (c * q)
        hit = SpiralSet.of(first_pole, guard=qp.guard).nearest(qp, xi) if xi != 0 else None
        if hit is not None and hit.k <= 0 and hit.distance < qp.guard:
            raise PoleError(f"g has a pole at xi={first_pole * q ** hit.k} "
                            f"(-1/({label} q^{1 - hit.k}))")
    denominator = qpoch_multi([-q * a * xi, -q * b * xi], qp)
    if denominator == 0:
        raise PoleError(f"g has a pole at xi={xi}")
    return qpoch_inf(-q * q * xi, qp) / denominator


def g_taylor_coeffs(a: complex, b: complex, qp: QParam, order: int) -> FormalSeries:
    """Taylor coefficients of g from (q^n - 1) g_n = ((a+b)q - q^{n+1}) g_{n-1} + ab q^2 g_{n-2}."""
    q = qp.q
    coeffs = [1 + 0j]
    for n in range(1, order + 1):
        prev2 = coeffs[n - 2] if n >= 2 else 0j
        coeffs.append((((a + b) * q - q ** (n + 1)) * coeffs[n - 1] + a * b * q * q * prev2)
                      / (q ** n - 1))
    return FormalSeries.of(coeffs)


def g_contour(a: complex, b: complex, qp: QParam, radius: Optional[float] = None,
              nodes: int = 64) -> ContourSpec:
    """Contour for L_q^- g enclosing no pole of g; default radius 0.4 min(r0, 1)."""
    r0 = min(1 / abs(a * qp.q), 1 / abs(b * qp.q))
    if radius is None:
        radius = G_RADIUS_FRACTION * min(r0, 1.0)
    if radius >= r0:
        raise ParameterError(f"contour radius {radius} must be below the first pole modulus {r0}")
    return ContourSpec(radius=radius, nodes=nodes)


def u2_quadrature(a: complex, b: complex, qp: QParam, x: complex,
                  contour: Optional[ContourSpec] = None) -> complex:
    """u2(x) as (L_q^- g)(x) / theta(-qx)."""
    origin_spiral(qp).require_clear(qp, x)
    contour = contour or g_contour(a, b, qp)
    integral = qlaplace_minus_quadrature(lambda xi: g_closed_form(a, b, qp, xi), contour, qp, x)
    return integral / theta(qp, -qp.q * x)


def residue_at_spiral_pole(lam: complex, k: int, qp: QParam) -> complex:
    """Residue of 1/((xi/lambda;q)_inf xi) at xi = lambda q^{-k}; independent of lambda."""
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}")
    q = qp.q
    sign = -1 if k % 2 == 0 else 1
    return sign * q ** (k * (k + 1) // 2) / (qpoch_n(q, qp, k) * qpoch_inf(q, qp))


def residue_quadrature_check(lam: complex, k: int, qp: QParam,
                             tolerance: float = 1e-9) -> VerificationReport:
    """Closed-form residue against a small-circle contour integral around lambda q^{-k}."""
    center = lam * qp.q ** (-k)
    radius = min(RESIDUE_RADIUS_FRACTION, 0.5 * (1 - qp.abs_q)) * abs(center)

    def integrand(xi: complex) -> complex:
        return 1 / (qpoch_inf(xi / lam, qp) * xi)

    numeric = circle_trapezoid(integrand, center, radius, qp)
    return VerificationReport.compare(
        "lemma2_8", residue_at_spiral_pole(lam, k, qp), numeric, tolerance,
        params={"q": qp.q, "lambda": lam, "k": k}, notes="residue vs contour quadrature")


def shifted_poch_identity_check(lam: complex, k: int, qp: QParam,
                                tolerance: float = 1e-12) -> VerificationReport:
    """1/(lambda q^{-k};q)_inf = (-lambda)^{-k} q^{k(k+1)/2} / ((lambda;q)_inf (q/lambda;q)_k)."""
    m = power_index(qp, lam)
    if m is not None:
        raise DegeneracyError(f"lambda = q^{m} makes (lambda q^-k;q)_inf vanish")
    q = qp.q
    lhs = 1 / qpoch_inf(lam * q ** (-k), qp)
    rhs = (-lam) ** (-k) * q ** (k * (k + 1) // 2) / (qpoch_inf(lam, qp) * qpoch_n(q / lam, qp, k))
    return VerificationReport.compare(
        "lemma2_8", lhs, rhs, tolerance,
        params={"q": q, "lambda": lam, "k": k}, notes="shifted q-shifted factorial")


def _residue_term(a: complex, b: complex, qp: QParam, x: complex, log_scale: complex) -> complex:
    q = qp.q
    log_num, core = theta_parts(qp, -a * q * x)
    if core == 0:
        return 0j
    log_den, _ = theta_parts(qp, -q * x)
    log_weight = log_qpoch_inf(q / a, qp) - log_qpoch_multi([b / a, q], qp)
    try:
        weight = cmath.exp(log_scale + log_weight + log_num - log_den)
    except OverflowError:
        raise DomainError(f"residue term at x={x} overflows double precision")
    return weight * infinity_series(a, b, qp, x)


def f21_residue_sum(a: complex, b: complex, qp: QParam, x: complex,
                    log_scale: complex = 0j) -> complex:
    """Sum of the residues of g(xi) theta(x/xi)/xi outside the contour, divided by theta(-qx).

    Equals u2(x) wherever both sides are defined. The weights
    (q/a;q)_inf / (b/a, q;q)_inf and the theta ratios are combined in log space
    together with log_scale, so exp(log_scale) u2(x) stays finite when the
    factors alone over- or underflow (q close to 1).
    """
    origin_spiral(qp).require_clear(qp, x)
    require_generic_exponents(a, b, qp)
    return _residue_term(a, b, qp, x, log_scale) + _residue_term(b, a, qp, x, log_scale)


def zhang_rhs(a: complex, b: complex, lam: complex, qp: QParam, x: complex) -> complex:
    """Closed form of f20 in terms of the solutions around infinity:

        (b;q)_inf/(b/a;q)_inf * theta(a lambda)/theta(lambda)
            * theta(qax/lambda)/theta(qx/lambda) * 2_phi_1(a,0;aq/b;q,q/abx)  + (a <-> b)
    """
    laplace_spiral(lam, qp).require_clear(qp, x)
    require_generic_exponents(a, b, qp)
    q = qp.q

    def term(a: complex, b: complex) -> complex:
        weight = qpoch_inf(b, qp) / qpoch_inf(b / a, qp)
        return (weight * theta_ratio(qp, a, lam) * theta_ratio(qp, a, q * x / lam)
                * infinity_series(a, b, qp, x))

    return term(a, b) + term(b, a)
