"""Basic hypergeometric series, their continuation and the local solutions."""

import pytest

from src.errors import DivergenceError, DomainError, ParameterError, SpiralError
from src.models import FormalSeries, HypParams, QParam
from src.models.report import relative_difference
from src.qcore import qpoch_inf, qpoch_multi, qpoch_n, theta
from src.qseries import (
    con2_series, equation_residual, infinity_series, phi20_formal_coeffs, phi21_c0_continued,
    phi21_continued, phi_rs, terminating_order, u1_is_divergent_diagnostic, u2_solution,
    v1_solution, v2_solution,
)

POINTS = [0.35, 0.6, 2.6 + 0.4j, -1.7 + 2.2j, 3.7, 0.9j]


def test_lower_parameter_on_negative_powers_rejected():
    qp = QParam(0.5)
    with pytest.raises(ParameterError):
        HypParams(upper=(0.2, 0.3), lower=(4.0,), qp=qp)


def test_q_binomial_theorem():
    qp = QParam(0.5)
    p = HypParams(upper=(0.3,), lower=(), qp=qp)
    x = 0.4 - 0.2j
    assert relative_difference(phi_rs(p, x), qpoch_inf(0.3 * x, qp) / qpoch_inf(x, qp)) < 1e-13


def test_q_gauss_sum():
    qp = QParam(0.5)
    a, b, c = 0.2, 0.3, 0.05
    p = HypParams(upper=(a, b), lower=(c,), qp=qp)
    expected = qpoch_multi([c / a, c / b], qp) / qpoch_multi([c, c / (a * b)], qp)
    assert relative_difference(phi_rs(p, c / (a * b)), expected) < 1e-12


def test_terminating_series_is_a_finite_sum():
    qp = QParam(0.5)
    a, b, c, x = 0.5 ** -2, 0.3, 0.2, 7.0
    expected = sum(
        qpoch_n(a, qp, n) * qpoch_n(b, qp, n) / (qpoch_n(c, qp, n) * qpoch_n(qp.q, qp, n)) * x ** n
        for n in range(3))
    assert terminating_order(a, qp) == 2
    assert phi_rs(HypParams(upper=(a, b), lower=(c,), qp=qp), x) == pytest.approx(expected, rel=1e-13)


def test_divergent_regions_are_refused():
    qp = QParam(0.5)
    with pytest.raises(DivergenceError):
        phi_rs(HypParams(upper=(0.2, 0.3), lower=(0.4,), qp=qp), 1.5)
    with pytest.raises(DivergenceError):
        phi_rs(HypParams(upper=(0.2, 0.3), lower=(), qp=qp), 0.01)


@pytest.mark.parametrize("y", [2.7 + 0.3j, -5.0, 40.0j, 0.9])
def test_continuation_of_q_binomial(y):
    """2phi1(a,0;0;q,y) = (ay;q)_inf / (y;q)_inf is known in closed form off [1;q]."""
    qp = QParam(0.5)
    a = 0.3 + 0.1j
    expected = qpoch_inf(a * y, qp) / qpoch_inf(y, qp)
    assert relative_difference(phi21_c0_continued(a, 0, qp, y), expected) < 1e-10


@pytest.mark.parametrize("y", [3.3 - 1j, -12.0])
def test_continuation_with_nonzero_lower_parameter(y):
    """2phi1(a,c;c;q,y) collapses to the q-binomial series."""
    qp = QParam(0.6)
    a, c = 0.45, 0.4
    expected = qpoch_inf(a * y, qp) / qpoch_inf(y, qp)
    assert relative_difference(phi21_continued(a, c, c, qp, y), expected) < 1e-10


def test_continuation_is_path_independent():
    qp = QParam(0.5)
    y = -6.1 + 2.0j
    base = phi21_c0_continued(0.8, 0.6, qp, y)
    assert relative_difference(base, phi21_c0_continued(0.8, 0.6, qp, y, extra_steps=4)) < 1e-11


def test_continuation_refuses_pole_spiral():
    qp = QParam(0.5)
    with pytest.raises(SpiralError):
        phi21_c0_continued(0.8, 0.6, qp, 4.0)


def test_formal_coefficients_of_divergent_series():
    qp = QParam(0.5)
    a, b = 0.8, 0.6
    coeffs = phi20_formal_coeffs(a, b, qp, 5)
    n = 3
    expected = (qpoch_n(a, qp, n) * qpoch_n(b, qp, n) / qpoch_n(qp.q, qp, n)
                * (-1) ** n * qp.q ** (-(n * (n - 1) // 2)))
    assert coeffs[n] == pytest.approx(expected, rel=1e-13)
    assert u1_is_divergent_diagnostic(a, b, qp)
    assert not u1_is_divergent_diagnostic(0.5 ** -3, b, qp)


def test_u2_solves_the_equation(qp):
    a, b = qp.power(0.3), qp.power(0.7)
    for x in POINTS:
        residual = equation_residual(lambda t: u2_solution(a, b, qp, t), a, b, qp, x)
        assert residual < 1e-10, x


def test_solutions_at_infinity_solve_the_equation(qp):
    a, b = qp.power(0.3), qp.power(0.7)
    mu = 1.3
    for x in POINTS:
        for solution in (v1_solution, v2_solution):
            residual = equation_residual(lambda t: solution(a, b, mu, qp, t), a, b, qp, x)
            assert residual < 1e-10, (solution.__name__, x)


def test_v2_is_v1_with_exchanged_exponents():
    qp = QParam(0.5)
    a, b = qp.power(0.3), qp.power(0.7)
    assert v2_solution(a, b, 1.3, qp, 2.2j) == v1_solution(b, a, 1.3, qp, 2.2j)


def test_u2_rejects_origin_spiral():
    qp = QParam(0.5)
    a, b = qp.power(0.3), qp.power(0.7)
    with pytest.raises(SpiralError, match=r"\[1;q\]"):
        u2_solution(a, b, qp, 0.25)


def test_v_solution_undefined_at_zero():
    qp = QParam(0.5)
    with pytest.raises(DomainError):
        v1_solution(0.8, 0.6, 1.3, qp, 0)


def test_con2_series_gives_u2_times_theta():
    qp = QParam(0.5)
    a, b = qp.power(0.3), qp.power(0.7)
    f = con2_series(a, b, qp, 60)
    for x in (0.35, 2.6 + 0.4j):
        assert relative_difference(f.evaluate(x) / theta(qp, -qp.q * x), u2_solution(a, b, qp, x)) < 1e-10


def test_infinity_series_is_near_one_for_large_x():
    qp = QParam(0.5)
    a, b = qp.power(0.3), qp.power(0.7)
    assert infinity_series(a, b, qp, 1e8) == pytest.approx(1, abs=1e-7)


def test_formal_series_helpers():
    f = FormalSeries.of([1, 2, 3])
    assert f.order == 2
    assert f.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert f.evaluate(2) == 17
    with pytest.raises(ParameterError):
        f.shift(-1)
