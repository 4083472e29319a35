#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
q -> 1-0 limit scans.

Each scan evaluates a q-side quantity along an increasing sequence of real q
and compares it with its classical limit; a ScanTable passes when the relative
differences decrease strictly and the last one is below the terminal tolerance.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Tuple

from src.classical_limit.special import gamma_classical, hyp1f1, hyp2f0_asymptotic
from src.errors import DegeneracyError, DomainError, ParameterError
from src.config import settings
from src.models import QParam, ScanTable, VerificationReport
from src.qcore import log_qpoch_inf, q_exp_E, q_gamma, theta_ratio
from src.resummation import f20, f21_residue_sum

logger = logging.getLogger(__name__)

DEFAULT_Q_SEQUENCE = (0.5, 0.9, 0.95, 0.99)
# the q-side of the asymptotic formula approaches its limit like |1/z|^2 (1-q), so it
# needs q much closer to 1 than the other scans
ASYMPTOTIC_Q_SEQUENCE = (0.99, 0.999, 0.9999)
ASYMPTOTIC_Z = 0.07j
SCAN_TOLERANCE = 0.05


@dataclass(frozen=True)
class LimitScanConfig:
    """Exponents alpha, beta (a = q^alpha, b = q^beta), the point z and the q sweep.

    z is used by the Zhang scan and by the asymptotic sub-table of the
    connection-formula scan; z_convergent is the point of its convergent sub-table,
    which runs over q_sequence while the asymptotic one runs over asymptotic_q_sequence.
    """
    alpha: complex = 0.3
    beta: complex = 0.7
    z: complex = 2.0
    lam: complex = 1.0
    q_sequence: Tuple[float, ...] = field(default=DEFAULT_Q_SEQUENCE)
    w_normalization: bool = True
    tolerance: float = SCAN_TOLERANCE
    z_convergent: complex = 0.5 + 1j
    asymptotic_q_sequence: Tuple[float, ...] = field(default=ASYMPTOTIC_Q_SEQUENCE)

    def __post_init__(self):
        object.__setattr__(self, "q_sequence", _validated(self.q_sequence, "q_sequence"))
        object.__setattr__(self, "asymptotic_q_sequence",
                           _validated(self.asymptotic_q_sequence, "asymptotic_q_sequence"))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "z_convergent", complex(self.z_convergent))
        require_cut_plane(self.z)

    @classmethod
    def for_asymptotics(cls, **overrides) -> "LimitScanConfig":
        """Defaults of the connection-formula scan.

        z = 0.07i keeps the smallest 2F0 term near 1e-7 while |1/z|^2 (1-q) falls to
        0.02 at the end of the asymptotic sweep.
        """
        return cls(**{"z": ASYMPTOTIC_Z, **overrides})

    def params(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "z": self.z, "lambda": self.lam,
                "q_sequence": list(self.q_sequence)}


def _validated(qs, name: str) -> Tuple[float, ...]:
    qs = tuple(float(q) for q in qs)
    if not qs or any(not 0 < q < 1 for q in qs):
        raise ParameterError(f"{name} must lie in (0,1), got {qs}")
    if any(later <= earlier for earlier, later in zip(qs, qs[1:])):
        raise ParameterError(f"{name} must be strictly increasing, got {qs}")
    return qs


def limit_qparam(q: float) -> QParam:
    """QParam for a scan point, with the factor cap raised to cover (a;q)_inf as q -> 1-0."""
    return QParam(q=q, eps=settings.eps, guard=settings.guard,
                  max_terms=max(settings.max_terms, math.ceil(60 / (1 - q))))


def require_cut_plane(z: complex) -> None:
    z = complex(z)
    if z.imag == 0 and z.real <= 0:
        raise DomainError(f"z={z} lies on the cut (-inf, 0]")


def require_off_positive_axis(z: complex) -> None:
    """(-z)^s and theta(-qz/(1-q)) are undefined for z on [0, inf)."""
    z = complex(z)
    if z.imag == 0 and z.real >= 0:
        raise DomainError(f"z={z} lies on [0, inf), where (-z)^(-alpha) is cut")


def require_generic_alpha_beta(alpha: complex, beta: complex, guard: float = 1e-9) -> None:
    gap = complex(alpha) - complex(beta)
    if abs(gap.imag) < guard and abs(gap.real - round(gap.real)) < guard:
        raise DegeneracyError(f"alpha - beta = {gap} is an integer")


def log_w_normalization(alpha: complex, beta: complex, qp: QParam) -> complex:
    return log_qpoch_inf(qp.q, qp) + (1 - alpha - beta) * cmath.log(1 - qp.q)


def w_normalization(alpha: complex, beta: complex, qp: QParam) -> complex:
    """w(alpha, beta; q) = (q;q)_inf (1-q)^{1-alpha-beta}; underflows to 0 as q -> 1-0."""
    return cmath.exp(log_w_normalization(alpha, beta, qp))


def theta_ratio_limit_scan(gamma_exp: complex, u: complex, cfg: LimitScanConfig) -> ScanTable:
    """theta(q^gamma u/(1-q)) / theta(u/(1-q)) (1-q)^{-gamma} against u^{-gamma}."""
    require_cut_plane(u)
    table = ScanTable("theta_ratio", {"gamma": gamma_exp, "u": u}, tolerance=cfg.tolerance)
    target = complex(u) ** (-gamma_exp)
    for q in cfg.q_sequence:
        qp = limit_qparam(q)
        lhs = theta_ratio(qp, qp.power(gamma_exp), u / (1 - q)) * (1 - q) ** (-gamma_exp)
        table.add(q, lhs, target)
    return table


def gamma_q_limit_scan(x: complex, cfg: LimitScanConfig) -> ScanTable:
    table = ScanTable("gamma_q", {"x": x}, tolerance=cfg.tolerance)
    target = gamma_classical(x)
    for q in cfg.q_sequence:
        table.add(q, q_gamma(limit_qparam(q), x), target)
    return table


def exp_q_limit_scan(z: complex, cfg: LimitScanConfig) -> ScanTable:
    """E_q(z(1-q)) against e^z."""
    table = ScanTable("E_q", {"z": z}, tolerance=cfg.tolerance)
    target = cmath.exp(z)
    for q in cfg.q_sequence:
        table.add(q, q_exp_E(limit_qparam(q), z * (1 - q)), target)
    return table


def zhang_classical(alpha: complex, beta: complex, z: complex) -> complex:
    """Gamma(beta-alpha)/Gamma(beta) z^-alpha 1F1(alpha; alpha-beta+1; 1/z) + (alpha <-> beta)."""
    require_generic_alpha_beta(alpha, beta)

    def term(alpha: complex, beta: complex) -> complex:
        return (gamma_classical(beta - alpha) / gamma_classical(beta) * z ** (-alpha)
                * hyp1f1(alpha, alpha - beta + 1, 1 / z))

    return term(alpha, beta) + term(beta, alpha)


def connection_classical(alpha: complex, beta: complex, z: complex) -> complex:
    """Gamma(beta-alpha)/Gamma(1-alpha) (-z)^-alpha 1F1(alpha; alpha+1-beta; 1/z) + (alpha <-> beta)."""
    require_generic_alpha_beta(alpha, beta)
    require_off_positive_axis(z)

    def term(alpha: complex, beta: complex) -> complex:
        return (gamma_classical(beta - alpha) / gamma_classical(1 - alpha) * (-z) ** (-alpha)
                * hyp1f1(alpha, alpha + 1 - beta, 1 / z))

    return term(alpha, beta) + term(beta, alpha)


def asymptotic_classical(alpha: complex, beta: complex, z: complex):
    """e^{1/z} (-z)^{1-alpha-beta} 2F0(1-alpha, 1-beta; -; z), optimally truncated.

    Returns:
        (value, absolute error estimate)
    """
    require_off_positive_axis(z)
    series = hyp2f0_asymptotic(1 - alpha, 1 - beta, z)
    prefactor = cmath.exp(1 / z) * (-z) ** (1 - alpha - beta)
    return prefactor * series.value, abs(prefactor) * series.error


def limit_scan_zhang(cfg: LimitScanConfig) -> ScanTable:
    """f20(q^alpha, q^beta; lambda, q, z/(1-q)) against its classical limit."""
    require_generic_alpha_beta(cfg.alpha, cfg.beta)
    target = zhang_classical(cfg.alpha, cfg.beta, cfg.z)
    table = ScanTable("zhang", cfg.params(), tolerance=cfg.tolerance)
    for q in cfg.q_sequence:
        qp = limit_qparam(q)
        lhs = f20(qp.power(cfg.alpha), qp.power(cfg.beta), cfg.lam, qp, cfg.z / (1 - q))
        table.add(q, lhs, target)
        logger.debug(f"zhang scan q={q}: {lhs} vs {target}")
    return table


@dataclass
class ConnectionLimitScan:
    """The two sub-tables of the q -> 1-0 connection-formula scan and their classical consistency.

    convergent: w 2f1 (residue form) against the Gamma-weighted 1F1 sum at z_convergent.
    asymptotic: w u2 against e^{1/z} (-z)^{1-alpha-beta} 2F0 at z.
    consistency: the two classical right-hand sides at z.
    """
    convergent: ScanTable
    asymptotic: ScanTable
    consistency: VerificationReport

    @property
    def tables(self) -> Tuple[ScanTable, ScanTable]:
        return self.convergent, self.asymptotic

    @property
    def passed(self) -> bool:
        return self.convergent.passed and self.asymptotic.passed and self.consistency.passed


def _scaled_u2(alpha: complex, beta: complex, q: float, z: complex, target: complex,
               normalize: bool) -> Tuple[complex, complex]:
    """(w u2(z/(1-q)), target), or (u2, target / w) when normalize is off.

    u2 is taken in its residue form with w folded into the log-space weights:
    the product form needs 2_phi_1 at |abz/(1-q)|, far outside its disk, while
    the residue form only needs 2_phi_1 at (1-q)/z.
    """
    qp = limit_qparam(q)
    a, b = qp.power(alpha), qp.power(beta)
    x = z / (1 - q)
    log_w = log_w_normalization(alpha, beta, qp)
    if normalize:
        return f21_residue_sum(a, b, qp, x, log_scale=log_w), target
    w = cmath.exp(log_w)
    if w == 0:
        raise DomainError(f"w underflows at q={q}; run the scan with w normalisation")
    return f21_residue_sum(a, b, qp, x), target / w


def limit_scan_thm33(cfg: LimitScanConfig) -> ConnectionLimitScan:
    require_generic_alpha_beta(cfg.alpha, cfg.beta)
    require_off_positive_axis(cfg.z)
    require_off_positive_axis(cfg.z_convergent)
    alpha, beta = cfg.alpha, cfg.beta

    convergent_target = connection_classical(alpha, beta, cfg.z_convergent)
    convergent = ScanTable("thm33_convergent", {**cfg.params(), "z": cfg.z_convergent},
                           tolerance=cfg.tolerance)
    for q in cfg.q_sequence:
        convergent.add(q, *_scaled_u2(alpha, beta, q, cfg.z_convergent, convergent_target,
                                      cfg.w_normalization))

    asymptotic_target, error = asymptotic_classical(alpha, beta, cfg.z)
    asymptotic = ScanTable(
        "thm33_asymptotic", {**cfg.params(), "q_sequence": list(cfg.asymptotic_q_sequence)},
        tolerance=cfg.tolerance, notes=f"2F0 truncation error {error:.3e}")
    for q in cfg.asymptotic_q_sequence:
        asymptotic.add(q, *_scaled_u2(alpha, beta, q, cfg.z, asymptotic_target,
                                      cfg.w_normalization))
        logger.debug(f"thm33 asymptotic q={q}: diff {asymptotic.diffs[-1]:.3e}")

    connection_value = connection_classical(alpha, beta, cfg.z)
    tolerance = max(1e-6, 10 * error / max(abs(asymptotic_target), 1e-300))
    consistency = VerificationReport.compare(
        "thm33_classical", asymptotic_target, connection_value, tolerance,
        params={"alpha": alpha, "beta": beta, "z": cfg.z},
        notes="asymptotic 2F0 side vs Gamma-weighted 1F1 side")
    return ConnectionLimitScan(convergent=convergent, asymptotic=asymptotic, consistency=consistency)
