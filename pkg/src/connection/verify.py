#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Point-level verification of the connection formulas.
"""

import itertools
import logging
from typing import Optional

import numpy as np

from src.connection.coefficients import C_mu, C_mu_lambda, S_mu, chge_residual
from src.connection.context import ConnectionContext, LAMBDA, ORIGIN
from src.models import VerificationReport
from src.models.report import TINY, relative_difference
from src.qseries import u2_solution
from src.resummation import ContourSpec, f20, f21_residue_sum, u2_quadrature, zhang_rhs

logger = logging.getLogger(__name__)


def verify_zhang(ctx: ConnectionContext, x: complex, tolerance: float = 1e-8) -> VerificationReport:
    """f20 through the Borel-Laplace pipeline against the theta-weighted closed form."""
    ctx.require_clear(x, LAMBDA)
    lhs = f20(ctx.a, ctx.b, ctx.lam, ctx.qp, x)
    rhs = zhang_rhs(ctx.a, ctx.b, ctx.lam, ctx.qp, x)
    return VerificationReport.compare("zhang_cz", lhs, rhs, tolerance,
                                      params={**ctx.params(), "x": x})


def verify_theorem29(ctx: ConnectionContext, x: complex,
                     tolerance: float = 1e-9) -> VerificationReport:
    """u2 in closed form against the sum of residues of its Borel image."""
    ctx.require_clear(x, ORIGIN)
    lhs = u2_solution(ctx.a, ctx.b, ctx.qp, x)
    rhs = f21_residue_sum(ctx.a, ctx.b, ctx.qp, x)
    return VerificationReport.compare("thm2_9", lhs, rhs, tolerance,
                                      params={**ctx.params(), "x": x})


def verify_three_way(ctx: ConnectionContext, x: complex, contour: Optional[ContourSpec] = None,
                     tolerance: float = 1e-9) -> VerificationReport:
    """u2 series form, residue sum and contour quadrature; reports the worst pair."""
    ctx.require_clear(x, ORIGIN)
    paths = {
        "series": u2_solution(ctx.a, ctx.b, ctx.qp, x),
        "residues": f21_residue_sum(ctx.a, ctx.b, ctx.qp, x),
        "quadrature": u2_quadrature(ctx.a, ctx.b, ctx.qp, x, contour),
    }
    worst = max(itertools.combinations(paths, 2),
                key=lambda pair: relative_difference(paths[pair[0]], paths[pair[1]]))
    notes = ", ".join(f"{name}={value:.15g}" for name, value in paths.items())
    return VerificationReport.compare(
        "three_way", paths[worst[0]], paths[worst[1]], tolerance,
        params={**ctx.params(), "x": x}, notes=f"worst pair {worst[0]}/{worst[1]}; {notes}")


def wronskian_check(ctx: ConnectionContext, x: complex,
                    threshold: float = 1e-8) -> VerificationReport:
    """Condition-scaled Casorati determinant of S_mu(a,b) and S_mu(b,a).

    Passes when |det| / (|row 1| |row 2|) exceeds threshold, i.e. the two
    solutions around infinity are numerically independent.
    """
    q = ctx.q
    casorati = np.array([
        [S_mu(ctx, False, x), S_mu(ctx, True, x)],
        [S_mu(ctx, False, q * x), S_mu(ctx, True, q * x)],
    ], dtype=complex)
    det = complex(np.linalg.det(casorati))
    scale = float(np.prod(np.linalg.norm(casorati, axis=1)))
    scaled = abs(det) / max(scale, TINY)
    return VerificationReport(
        identity="wronskian", params={**ctx.params(), "x": x}, lhs=det, rhs=complex(scale),
        abs_diff=abs(det), rel_diff=scaled, tolerance=threshold, passed=scaled > threshold,
        notes="rel_diff is |det| / (|row 1| |row 2|); pass means above tolerance")


def ellipticity_check(ctx: ConnectionContext, x: complex, swap: bool = False,
                      tolerance: float = 1e-10) -> VerificationReport:
    """C_mu^lambda and C_mu at x and qx; the report carries the larger deviation."""
    q = ctx.q
    reports = [
        VerificationReport.compare(
            "ellipticity", coefficient(ctx, swap, q * x), coefficient(ctx, swap, x), tolerance,
            params={**ctx.params(), "x": x, "swap": swap}, notes=coefficient.__name__)
        for coefficient in (C_mu_lambda, C_mu)
    ]
    return max(reports, key=lambda report: report.rel_diff)


def equation_residual_report(ctx: ConnectionContext, name: str, x: complex,
                             tolerance: float = 1e-9) -> VerificationReport:
    """Residual of one named solution (u2, f20, S_ab, S_ba) as a report against zero."""
    solutions = {
        "u2": lambda t: u2_solution(ctx.a, ctx.b, ctx.qp, t),
        "f20": lambda t: f20(ctx.a, ctx.b, ctx.lam, ctx.qp, t),
        "f21": lambda t: f21_residue_sum(ctx.a, ctx.b, ctx.qp, t),
        "S_ab": lambda t: S_mu(ctx, False, t),
        "S_ba": lambda t: S_mu(ctx, True, t),
    }
    residual = chge_residual(solutions[name], ctx, x)
    return VerificationReport(
        identity="equation_residuals", params={**ctx.params(), "x": x, "solution": name},
        lhs=complex(residual), rhs=0j, abs_diff=residual, rel_diff=residual,
        tolerance=tolerance, passed=residual <= tolerance, notes=name)
