#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Truncated formal power series and basic hypergeometric parameter sets.
"""

from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from src.errors import ParameterError
from src.models.qparam import QParam, negative_power_index


@dataclass(frozen=True)
class FormalSeries:
    """Coefficients a_0..a_N of sum a_n x^n, immutable after construction."""
    coeffs: Tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if not self.coeffs:
            raise ParameterError("a formal series needs at least the constant coefficient")

    @classmethod
    def of(cls, coeffs: Sequence[complex]) -> "FormalSeries":
        return cls(coeffs=tuple(coeffs))

    @property
    def order(self) -> int:
        """Truncation order N."""
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> complex:
        return self.coeffs[n]

    def map_index(self, factor: Callable[[int], complex]) -> "FormalSeries":
        """Multiply coefficient n by factor(n)."""
        return FormalSeries(tuple(c * factor(n) for n, c in enumerate(self.coeffs)))

    def sigma(self, qp: QParam, power: int = 1) -> "FormalSeries":
        """sigma_q^power: f(x) -> f(q^power x), i.e. a_n -> q^(n*power) a_n."""
        return self.map_index(lambda n: qp.q ** (n * power))

    def shift(self, m: int) -> "FormalSeries":
        """Multiply by the monomial x^m (m >= 0)."""
        if m < 0:
            raise ParameterError(f"monomial degree must be non-negative, got {m}")
        return FormalSeries((0j,) * m + self.coeffs)

    def scale(self, c: complex) -> "FormalSeries":
        return FormalSeries(tuple(c * a for a in self.coeffs))

    def evaluate(self, x: complex) -> complex:
        """Value of the retained polynomial at x."""
        return complex(P.polyval(x, self.as_array()))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)


@dataclass(frozen=True)
class HypParams:
    """Upper parameters a_1..a_r, lower parameters b_1..b_s and the base q."""
    upper: Tuple[complex, ...]
    lower: Tuple[complex, ...]
    qp: QParam

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(complex(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(complex(b) for b in self.lower))
        for b in self.lower:
            m = negative_power_index(self.qp, b)
            if m is not None:
                raise ParameterError(
                    f"lower parameter {b} equals q^-{m}: (b;q)_n vanishes for n > {m}")

    @property
    def r(self) -> int:
        return len(self.upper)

    @property
    def s(self) -> int:
        return len(self.lower)

    @property
    def balance(self) -> int:
        """The exponent 1+s-r of the [(-1)^n q^{n(n-1)/2}] factor."""
        return 1 + self.s - self.r
