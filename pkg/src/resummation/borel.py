#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
q-Borel transformations of the first (B_q^+) and second (B_q^-) kind.

Both act on coefficients only:
    B_q^+ : a_n -> a_n q^{n(n-1)/2}
    B_q^- : a_n -> a_n q^{-n(n-1)/2}
"""

import logging
from dataclasses import dataclass
from typing import Callable, Literal, Optional

from src.models import FormalSeries, QParam, VerificationReport
from src.models.report import TINY
from src.qseries import phi20_formal_coeffs, phi21_c0_continued

logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class BorelImage:
    """Transformed coefficients, optionally with a closed form of the image."""
    kind: Literal["first", "second"]
    series: FormalSeries
    closed_form: Optional[Callable[[complex], complex]] = None

    def __call__(self, xi: complex) -> complex:
        if self.closed_form is not None:
            return self.closed_form(xi)
        return self.series.evaluate(xi)


def qborel_plus(f: FormalSeries, qp: QParam) -> BorelImage:
    q = qp.q
    return BorelImage("first", f.map_index(lambda n: q ** (n * (n - 1) // 2)))


def qborel_plus_inverse(image: BorelImage, qp: QParam) -> FormalSeries:
    """Undo B_q^+ on coefficients."""
    q = qp.q
    return image.series.map_index(lambda n: q ** (-(n * (n - 1) // 2)))


def qborel_minus(f: FormalSeries, qp: QParam) -> BorelImage:
    q = qp.q
    return BorelImage("second", f.map_index(lambda n: q ** (-(n * (n - 1) // 2))))


def phi20_borel_image(a: complex, b: complex, qp: QParam, order: int = 32) -> BorelImage:
    """B_q^+ 2_phi_0(a,b;-;q,x) = 2_phi_1(a,b;0;q,-xi), with the continued closed form."""
    image = qborel_plus(phi20_formal_coeffs(a, b, qp, order), qp)
    return BorelImage("first", image.series,
                      closed_form=lambda xi: phi21_c0_continued(a, b, qp, -xi))


def operational_relation_check(f: FormalSeries, m: int, l: int, qp: QParam,
                               tolerance: float = 1e-14) -> VerificationReport:
    """B_q^-(x^m sigma_q^l f) against q^{-m(m-1)/2} xi^m sigma_q^{l-m} B_q^- f, coefficientwise."""
    q = qp.q
    lhs = qborel_minus(f.sigma(qp, l).shift(m), qp).series
    rhs = qborel_minus(f, qp).series.sigma(qp, l - m).shift(m).scale(q ** (-(m * (m - 1) // 2)))
    worst, worst_index = 0.0, 0
    for n, (u, v) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        deviation = abs(u - v) / max(abs(u), abs(v), TINY)
        if deviation > worst:
            worst, worst_index = deviation, n
    logger.debug(f"operational relation m={m} l={l}: max deviation {worst:.3e} at n={worst_index}")
    return VerificationReport.compare(
        "lemma2_7", lhs[worst_index], rhs[worst_index], tolerance,
        params={"q": qp.q, "m": m, "l": l, "order": f.order},
        notes=f"coefficientwise; worst index n={worst_index}")
