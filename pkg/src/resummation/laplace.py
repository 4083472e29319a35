#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
q-Laplace transformations.

First kind, a discrete sum over the lattice lambda q^Z:

    (L_{q,lambda}^+ phi)(x) = sum_n phi(lambda q^n) / theta(lambda q^n / x)

Second kind, a contour integral over |xi| = r evaluated with the trapezoidal rule:

    (L_q^- g)(x) = 1/(2 pi i) int_{|xi|=r} g(xi) theta(x / xi) dxi / xi
"""

import cmath
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from src.config import settings
from src.errors import ConvergenceError, DomainError, ParameterError
from src.models import FormalSeries, QParam, SpiralSet, VerificationReport
from src.models.report import TINY
from src.qcore import log_theta, theta, truncated_sum
from src.qseries import Phi21Lattice, equation_residual
from src.resummation.borel import qborel_minus

logger = logging.getLogger(__name__)

MIN_NODES = 64
QUAD_SAFETY = 10.0
# mean |integrand| over |result| beyond which the q-Laplace quadrature is rejected
MAX_CONDITION = 1e4


@dataclass(frozen=True)
class ContourSpec:
    """Circle |xi| = radius sampled at `nodes` equispaced points."""
    radius: float
    nodes: int = MIN_NODES

    def __post_init__(self):
        if not self.radius > 0:
            raise ParameterError(f"contour radius must be positive, got {self.radius}")
        if self.nodes < MIN_NODES:
            raise ParameterError(f"contour needs at least {MIN_NODES} nodes, got {self.nodes}")


def laplace_spiral(lam: complex, qp: QParam) -> SpiralSet:
    """[-lambda;q]: where theta(lambda q^n / x) vanishes for some n."""
    return SpiralSet.of(-lam, guard=qp.guard, labels=["[-lambda;q]"])


def lattice_sum(values_at: Callable[[int], complex], lam: complex, qp: QParam,
                x: complex) -> complex:
    """sum_n values_at(n) / theta(lambda q^n / x), summed outward from the peak.

    The weights 1/theta(lambda q^n / x) peak near |lambda q^n| = |x|, so the sum
    starts at that n and is truncated independently in both directions.
    """
    if x == 0:
        raise DomainError("the q-Laplace sum is undefined at x=0")
    if lam == 0:
        raise ParameterError("lambda must be non-zero")
    laplace_spiral(lam, qp).require_clear(qp, x)
    q = qp.q
    n0 = round(0.5 + math.log(abs(x / lam)) / math.log(qp.abs_q))

    def term(n: int) -> complex:
        weight = cmath.exp(-log_theta(qp, lam * q ** n / x))
        if weight == 0:
            return 0j
        return values_at(n) * weight

    total = term(n0)
    total = truncated_sum((term(n) for n in itertools.count(n0 + 1)), qp,
                          "q-Laplace sum (n > n0)", start=total)
    total = truncated_sum((term(n) for n in itertools.count(n0 - 1, -1)), qp,
                          "q-Laplace sum (n < n0)", start=total)
    return total


def qlaplace_plus(phi: Callable[[complex], complex], lam: complex, qp: QParam,
                  x: complex) -> complex:
    """(L_{q,lambda}^+ phi)(x) for phi defined on the lattice lambda q^Z."""
    q = qp.q
    return lattice_sum(lambda n: phi(lam * q ** n), lam, qp, x)


def f20(a: complex, b: complex, lam: complex, qp: QParam, x: complex) -> complex:
    """Resummation of 2_phi_0(a,b;-;q,x) in the direction lambda.

    L_{q,lambda}^+ applied to the Borel image 2_phi_1(a,b;0;q,-xi); solves the
    q-confluent equation and is asymptotic to 2_phi_0 near 0.
    """
    lattice = Phi21Lattice(a, b, 0, qp, base=-lam)
    return lattice_sum(lattice.at, lam, qp, x)


def circle_trapezoid(f: Callable[[complex], complex], center: complex, radius: float,
                     qp: QParam, nodes: int = MIN_NODES,
                     max_nodes: Optional[int] = None,
                     max_condition: Optional[float] = None) -> complex:
    """(1/2 pi i) times the integral of f(xi) dxi around the circle |xi - center| = radius.

    Node counts double (reusing the previous nodes) until two successive
    estimates agree to 10 eps relative to the integrand scale.

    Raises:
        ConvergenceError: the node cap is reached, or the mean modulus of the
            integrand exceeds max_condition times the result, so that
            cancellation has eaten the digits the estimate claims.
    """
    max_nodes = max_nodes or settings.quad_max_nodes
    if nodes < MIN_NODES:
        raise ParameterError(f"quadrature needs at least {MIN_NODES} nodes, got {nodes}")
    if nodes > max_nodes:
        raise ConvergenceError(f"contour quadrature needs {nodes} nodes, cap is {max_nodes}")

    def weighted(angles: np.ndarray):
        points = center + radius * np.exp(1j * angles)
        values = np.array([f(complex(p)) for p in points], dtype=complex) * (points - center)
        return values.sum(), np.abs(values).sum()

    n = nodes
    total, scale = weighted(2 * np.pi * np.arange(n) / n)
    estimate = total / n
    while True:
        if 2 * n > max_nodes:
            raise ConvergenceError(
                f"contour quadrature: no agreement within {max_nodes} nodes "
                f"(last estimate {estimate})")
        extra, extra_scale = weighted(2 * np.pi * (np.arange(n) + 0.5) / n)
        n *= 2
        total += extra
        scale += extra_scale
        refined = total / n
        tolerance = QUAD_SAFETY * qp.eps * max(abs(refined), scale / n)
        if abs(refined - estimate) <= tolerance:
            break
        estimate = refined
    condition = (scale / n) / max(abs(refined), TINY)
    if max_condition is not None and condition > max_condition:
        raise ConvergenceError(
            f"contour quadrature: integrand modulus is {condition:.3e} times the result, "
            f"above the limit {max_condition:.1e}")
    logger.debug(f"contour quadrature converged with {n} nodes, condition {condition:.3e}")
    return complex(refined)


def theta_kernel_nodes(qp: QParam, x: complex, radius: float, nodes: int = MIN_NODES) -> int:
    """Power of two resolving the Fourier modes of theta(x / xi) on |xi| = radius.

    The modes peak near n0 = log(|x| / radius) / log(1/|q|) and decay like
    |q|^{(n - n0)^2 / 2}, so the band grows with |x| and with 1 / (1 - |q|).
    """
    log_q = -math.log(qp.abs_q)
    peak = abs(math.log(abs(x) / radius)) / log_q
    width = math.sqrt(-2 * math.log(qp.eps) / log_q)
    needed = 2 * math.ceil(peak + width) + 16
    return max(nodes, 1 << (needed - 1).bit_length())


def qlaplace_minus_quadrature(g: Callable[[complex], complex], contour: ContourSpec,
                              qp: QParam, x: complex) -> complex:
    """(L_q^- g)(x) as the mean of g(xi_j) theta(x / xi_j) over the circle."""
    if x == 0:
        raise DomainError("the q-Laplace integral is undefined at x=0")
    nodes = theta_kernel_nodes(qp, x, contour.radius, contour.nodes)
    return circle_trapezoid(lambda xi: g(xi) * theta(qp, x / xi) / xi, 0j,
                            contour.radius, qp, nodes=nodes, max_condition=MAX_CONDITION)


def default_roundtrip_radius(g: FormalSeries) -> float:
    """Half the smallest root-test radius of the Borel image, capped at 1/2."""
    radius = 1.0
    for n in range(1, len(g)):
        if g[n] != 0:
            radius = min(radius, abs(g[n]) ** (-1.0 / n))
    return 0.5 * radius


def borel_laplace_roundtrip_check(f: FormalSeries, qp: QParam, x: complex,
                                  contour: Optional[ContourSpec] = None,
                                  tolerance: float = 1e-10) -> VerificationReport:
    """L_q^- B_q^- f = f for a series whose Borel image converges on the contour.

    f is treated as the polynomial given by its retained coefficients.
    """
    g = qborel_minus(f, qp).series
    contour = contour or ContourSpec(radius=default_roundtrip_radius(g))
    rhs = qlaplace_minus_quadrature(g.evaluate, contour, qp, x)
    return VerificationReport.compare(
        "lemma2_6", f.evaluate(x), rhs, tolerance,
        params={"q": qp.q, "x": x, "order": f.order, "radius": contour.radius})


def lstokes_witness(a: complex, b: complex, lam: complex, lam2: complex, qp: QParam,
                    x: complex, min_gap: float = 1e-6,
                    residual_tolerance: float = 1e-9) -> VerificationReport:
    """f20 for two directions lambda, lambda': both solve the equation, yet differ.

    Passes when the relative gap exceeds min_gap while both residuals stay below
    residual_tolerance.
    """
    lhs = f20(a, b, lam, qp, x)
    rhs = f20(a, b, lam2, qp, x)
    residuals = [equation_residual(lambda t, l=l: f20(a, b, l, qp, t), a, b, qp, x)
                 for l in (lam, lam2)]
    report = VerificationReport.compare(
        "stokes", lhs, rhs, min_gap,
        params={"q": qp.q, "a": a, "b": b, "lambda": lam, "lambda2": lam2, "x": x},
        notes=f"residuals {residuals[0]:.3e}, {residuals[1]:.3e}")
    report.passed = bool(report.rel_diff > min_gap
                         and max(residuals) <= residual_tolerance)
    logger.info(f"q-Stokes witness at x={x}: gap {report.rel_diff:.3e}")
    return report
