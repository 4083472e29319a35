"""q-shifted factorials, theta, q-Gamma and the q-exponentials."""

import cmath
import itertools
import math

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.errors import ConvergenceError, DomainError, ParameterError, PoleError, SpiralError
from src.models import QParam, SpiralSet, negative_power_index, power_index
from src.models.report import relative_difference
from src.qcore import (
    log_qpoch_inf, log_theta, q_derivative, q_exp_E, q_exp_E_series, q_exp_e, q_gamma,
    qpoch_inf, qpoch_multi, qpoch_n, spiral_guard, theta, theta_product, theta_ratio, theta_zeros,
    truncated_sum,
)

qs = st.sampled_from([0.3, 0.5, 0.7, 0.8])
moduli = st.floats(min_value=0.05, max_value=20.0)
arguments = st.floats(min_value=-math.pi, max_value=math.pi)


def clear_of_zeros(qp, x, gap=1e-3):
    return not theta_zeros(qp).nearest(qp, x).distance < gap


def theta_oracle(q, x, dps=40):
    with mpmath.workdps(dps):
        q, x = mpmath.mpf(q), mpmath.mpc(x)
        return complex(mpmath.qp(q, q) * mpmath.qp(-x, q) * mpmath.qp(-q / x, q))


def test_qparam_rejects_bad_base():
    with pytest.raises(ParameterError):
        QParam(1.0)
    with pytest.raises(ParameterError):
        QParam(0)
    with pytest.raises(ParameterError):
        QParam(0.5, eps=0)


def test_qparam_power_and_exponent():
    qp = QParam(0.5)
    assert qp.power(2) == pytest.approx(0.25)
    assert qp.exponent_of(0.125).real == pytest.approx(3.0)
    assert qp.is_real
    assert not QParam(0.5j).is_real


def test_power_indices():
    qp = QParam(0.5)
    assert power_index(qp, 0.5 ** 4) == 4
    assert power_index(qp, 0.3) is None
    assert negative_power_index(qp, 4.0) == 2
    assert negative_power_index(qp, 0.25) is None


def test_qpoch_n_small_cases():
    qp = QParam(0.5)
    assert qpoch_n(0.3, qp, 0) == 1
    assert qpoch_n(0.3, qp, 2) == pytest.approx((1 - 0.3) * (1 - 0.15))
    assert qpoch_n(4.0, qp, 3) == 0


@given(a=st.floats(min_value=-0.95, max_value=0.95), q=st.floats(min_value=0.1, max_value=0.9))
@settings(max_examples=60, deadline=None)
def test_qpoch_inf_matches_mpmath(a, q):
    qp = QParam(q)
    expected = complex(mpmath.qp(a, q))
    assert relative_difference(qpoch_inf(a, qp), expected) < 1e-12


def test_qpoch_inf_near_q_one_stays_finite():
    qp = QParam(0.99)
    t = -math.log(0.99)
    # log (q;q)_inf = -pi^2/(6t) + log(2 pi / t)/2 + t/24 up to O(exp(-4 pi^2 / t))
    expected = -math.pi ** 2 / (6 * t) + 0.5 * math.log(2 * math.pi / t) + t / 24
    assert log_qpoch_inf(qp.q, qp).real == pytest.approx(expected, rel=1e-11)


def test_qpoch_multi_is_a_product():
    qp = QParam(0.5)
    assert qpoch_multi([0.2, -0.4j], qp) == pytest.approx(qpoch_inf(0.2, qp) * qpoch_inf(-0.4j, qp))
    assert qpoch_multi([], qp) == 1


@given(q=qs, r=moduli, phi=arguments)
@settings(max_examples=100, deadline=None)
def test_theta_triple_product(q, r, phi):
    qp = QParam(q)
    x = cmath.rect(r, phi)
    assume(clear_of_zeros(qp, x))
    assert relative_difference(theta(qp, x), theta_product(qp, x)) < 1e-12


@given(q=qs, r=moduli, phi=arguments)
@settings(max_examples=100, deadline=None)
def test_theta_inversion(q, r, phi):
    qp = QParam(q)
    x = cmath.rect(r, phi)
    assume(clear_of_zeros(qp, x))
    assert relative_difference(theta(qp, x), x * theta(qp, 1 / x)) < 1e-12


@given(q=qs, r=moduli, phi=arguments)
@settings(max_examples=50, deadline=None)
def test_theta_quasi_periodicity(q, r, phi):
    qp = QParam(q)
    x = cmath.rect(r, phi)
    assume(clear_of_zeros(qp, x))
    assert relative_difference(x * theta(qp, q * x), theta(qp, x)) < 1e-12


def test_theta_far_from_unit_circle():
    qp = QParam(0.5)
    x = 1e6 + 3e5j
    assert relative_difference(cmath.exp(log_theta(qp, x)), theta(qp, x)) < 1e-12
    assert relative_difference(theta(qp, x), theta_product(qp, x)) < 1e-10


@given(r=st.floats(min_value=0.8, max_value=1.0), phi=arguments)
@settings(max_examples=150, deadline=None)
def test_theta_matches_high_precision_product_on_annulus(r, phi):
    qp = QParam(0.8)
    x = cmath.rect(r, phi)
    assume(clear_of_zeros(qp, x))
    assert relative_difference(theta(qp, x), theta_oracle(0.8, x)) < 1e-12


@pytest.mark.parametrize("q", [0.95, 0.99])
def test_theta_near_q_one(q):
    qp = QParam(q)
    x = cmath.exp(2j)
    expected = theta_oracle(q, x, dps=60)
    assert relative_difference(theta(qp, x), expected) < 1e-10
    assert relative_difference(cmath.exp(log_theta(qp, x)), expected) < 1e-10


def test_theta_overflow_is_a_domain_error():
    with pytest.raises(DomainError):
        theta(QParam(0.5), 1e300)


def test_theta_undefined_at_zero():
    with pytest.raises(DomainError):
        theta(QParam(0.5), 0)


def test_theta_ratio_pole_on_minus_one_spiral():
    qp = QParam(0.5)
    with pytest.raises(PoleError):
        theta_ratio(qp, 0.7, -0.25)


@pytest.mark.parametrize("x", [0.7, 3.1 + 2j, -0.6j])
def test_theta_ratio_scales_like_power(x):
    qp = QParam(0.5)
    a = qp.power(0.3)
    assert theta_ratio(qp, a, qp.q * x) == pytest.approx(theta_ratio(qp, a, x) / a, rel=1e-12)
    assert theta_ratio(qp, 1, x) == 1


def test_q_gamma_against_mpmath():
    for q in (0.3, 0.5, 0.9):
        for x in (0.5, 1.5, 3.2):
            expected = complex(mpmath.qgamma(x, q))
            assert relative_difference(q_gamma(QParam(q), x), expected) < 1e-11


def test_q_gamma_functional_equation():
    qp = QParam(0.6)
    x = 1.37
    q_int = (1 - 0.6 ** x) / (1 - 0.6)
    assert q_gamma(qp, x + 1) == pytest.approx(q_int * q_gamma(qp, x), rel=1e-12)
    assert q_gamma(qp, 1) == pytest.approx(1.0, rel=1e-14)


@pytest.mark.parametrize("x", [0, -2])
def test_q_gamma_poles(x):
    with pytest.raises(PoleError):
        q_gamma(QParam(0.5), x)


def test_q_gamma_needs_real_q():
    with pytest.raises(DomainError):
        q_gamma(QParam(0.5j), 1.5)


@pytest.mark.parametrize("z", [0.7, -0.3 + 0.4j, 5.0])
def test_q_exp_product_equals_series(z):
    qp = QParam(0.5)
    assert relative_difference(q_exp_E(qp, z), q_exp_E_series(qp, z)) < 1e-12


def test_small_and_big_q_exponentials_are_reciprocal():
    qp = QParam(0.4)
    z = 0.3 - 0.2j
    assert q_exp_e(qp, z) * q_exp_E(qp, -z) == pytest.approx(1, rel=1e-13)


def test_q_derivative_of_square():
    qp = QParam(0.5)
    assert q_derivative(lambda t: t * t, qp, 2.0) == pytest.approx((1 + 0.5) * 2.0)


def test_truncated_sum_stops_and_caps():
    total = truncated_sum((0.5 ** n for n in itertools.count(1)), QParam(0.5), start=1)
    assert total == pytest.approx(2.0, rel=1e-13)
    with pytest.raises(ConvergenceError):
        truncated_sum((1.0 for _ in itertools.count()), QParam(0.5, max_terms=20))


def test_spiral_set_guard():
    qp = QParam(0.5)
    spirals = SpiralSet.of(1, guard=1e-6, labels=["[1;q]"])
    hit = spirals.nearest(qp, 0.125)
    assert hit.k == 3 and hit.distance < 1e-15
    assert spirals.contains(qp, 8.0 * (1 + 1e-9))
    assert not spirals.contains(qp, 3.0)
    with pytest.raises(SpiralError, match=r"\[1;q\]"):
        spirals.require_clear(qp, 4.0)


@pytest.mark.parametrize("lam", [1.1, -0.4 + 0.7j])
def test_spiral_guard_boundary(lam):
    qp = QParam(0.5)
    guard = 1e-6
    spirals = SpiralSet.of(lam, guard=guard)
    assert spiral_guard(spirals, qp, lam)
    assert spiral_guard(spirals, qp, lam * qp.q ** -7)
    assert spiral_guard(spirals, qp, lam * qp.q ** 5 * (1 + 0.5 * guard))
    assert not spiral_guard(spirals, qp, lam * (1 + 10 * guard))
    assert not spiral_guard(spirals, qp, lam * qp.q ** -3 * (1 - 10 * guard))
    with pytest.raises(DomainError):
        spiral_guard(spirals, qp, 0)


def test_qpoch_n_rejects_negative_order():
    with pytest.raises(ParameterError):
        qpoch_n(0.3, QParam(0.5), -1)
