"""q-Borel and q-Laplace transformations, the Borel image g and its residues."""

import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import ConvergenceError, DegeneracyError, DomainError, ParameterError, PoleError, SpiralError
from src.models import FormalSeries, QParam
from src.models.report import relative_difference
from src.qcore import q_exp_E, qpoch_inf, qpoch_n
from src.qseries import con2_series, equation_residual, u2_solution
from src.resummation import (
    ContourSpec, borel_laplace_roundtrip_check, circle_trapezoid, f20, f21_residue_sum,
    g_closed_form, g_contour, g_taylor_coeffs, lattice_sum, lstokes_witness,
    operational_relation_check, phi20_borel_image, qborel_minus, qborel_plus,
    qborel_plus_inverse, qlaplace_minus_quadrature, qlaplace_plus, residue_at_spiral_pole,
    residue_quadrature_check, shifted_poch_identity_check, u2_quadrature, zhang_rhs,
)
from src.resummation.laplace import theta_kernel_nodes

LAMBDA = 1.1


def test_borel_maps_scale_coefficients(half):
    f = FormalSeries.of([1, 1, 1, 1])
    assert qborel_plus(f, half).series[2] == pytest.approx(0.5)
    assert qborel_minus(f, half).series[2] == pytest.approx(2.0)
    assert qborel_minus(f, half).series[3] == pytest.approx(8.0)
    assert qborel_plus(FormalSeries.of([1]), half).series.coeffs == (1,)


def test_borel_plus_inverse_recovers_input(half):
    f = FormalSeries.of([0.3, -1.2, 4.0 + 1j, 7.5, -0.01])
    back = qborel_plus_inverse(qborel_plus(f, half), half)
    assert all(relative_difference(u, v) < 1e-15 for u, v in zip(back.coeffs, f.coeffs))


def test_phi20_borel_image_is_convergent(half, ab):
    a, b = ab
    image = phi20_borel_image(a, b, half, order=30)
    for n in range(31):
        expected = qpoch_n(a, half, n) * qpoch_n(b, half, n) / qpoch_n(half.q, half, n) * (-1) ** n
        assert image.series[n] == pytest.approx(expected, rel=1e-12)
    assert relative_difference(image(0.2), image.series.evaluate(0.2)) < 1e-12


def test_operational_relation_hand_case(half):
    report = operational_relation_check(FormalSeries.of([1, 1, 1]), 1, 0, half)
    assert report.passed
    assert report.identity == "lemma2_7"


@given(q=st.sampled_from([0.3, 0.5, 0.7]), m=st.integers(0, 4), l=st.integers(0, 4),
       coeffs=st.lists(st.floats(min_value=-3, max_value=3).filter(lambda c: abs(c) > 1e-3),
                       min_size=8, max_size=12))
@settings(max_examples=60, deadline=None)
def test_operational_relation_random_series(q, m, l, coeffs):
    assert operational_relation_check(FormalSeries.of(coeffs), m, l, QParam(q)).passed


def test_g_at_origin(half, ab):
    assert g_closed_form(*ab, half, 0) == pytest.approx(1)


@given(r=st.floats(min_value=0.05, max_value=3.0), phi=st.floats(min_value=-2.5, max_value=2.5))
@settings(max_examples=100, deadline=None)
def test_g_functional_equation(r, phi):
    qp = QParam(0.5)
    a, b = qp.power(0.3), qp.power(0.7)
    q, xi = qp.q, cmath.rect(r, phi)
    lhs = g_closed_form(a, b, qp, q * xi) * (1 + q * q * xi)
    rhs = (1 + a * q * xi) * (1 + b * q * xi) * g_closed_form(a, b, qp, xi)
    assert relative_difference(lhs, rhs) < 1e-12


def test_g_first_pole(half, ab):
    a, b = ab
    with pytest.raises(PoleError):
        g_closed_form(a, b, half, -1 / (a * half.q))


def test_g_taylor_coefficients_match_closed_form(half, ab):
    taylor = g_taylor_coeffs(*ab, half, 60)
    assert relative_difference(taylor.evaluate(0.3 - 0.2j), g_closed_form(*ab, half, 0.3 - 0.2j)) < 1e-12


def test_borel_image_of_origin_solution_is_g(half, ab):
    taylor = g_taylor_coeffs(*ab, half, 40)
    image = qborel_minus(con2_series(*ab, half, 40), half).series
    for n in range(41):
        assert relative_difference(image[n], taylor[n]) < 1e-10, n


@pytest.mark.parametrize("x", [0.4, 2.6 + 0.4j, -0.3j])
def test_qlaplace_plus_of_constant_and_identity(half, x):
    assert qlaplace_plus(lambda xi: 1, LAMBDA, half, x) == pytest.approx(1, rel=1e-12)
    assert qlaplace_plus(lambda xi: xi, LAMBDA, half, x) == pytest.approx(x, rel=1e-12)


def test_qlaplace_plus_rejects_laplace_spiral(half):
    with pytest.raises(SpiralError, match="lambda"):
        qlaplace_plus(lambda xi: 1, LAMBDA, half, -LAMBDA * half.q ** 2)
    with pytest.raises(DomainError):
        lattice_sum(lambda n: 1, LAMBDA, half, 0)


def test_f20_solves_the_equation(half, ab):
    a, b = ab
    residual = equation_residual(lambda t: f20(a, b, LAMBDA, half, t), a, b, half, 0.4)
    assert residual < 1e-9


@pytest.mark.parametrize("x", [0.4, 0.8])
def test_f20_matches_connection_to_infinity(half, ab, x):
    a, b = ab
    assert relative_difference(f20(a, b, LAMBDA, half, x), zhang_rhs(a, b, LAMBDA, half, x)) < 1e-8


def test_f20_depends_on_direction(half, ab):
    report = lstokes_witness(*ab, LAMBDA, 1j * LAMBDA, half, 0.4)
    assert report.passed
    assert report.identity == "stokes"


def test_qlaplace_minus_of_constant(half):
    contour = ContourSpec(radius=0.5)
    assert qlaplace_minus_quadrature(lambda xi: 1, contour, half, 0.7) == pytest.approx(1, rel=1e-13)


def test_u2_quadrature_matches_residue_sum(half, ab):
    x = 0.6
    assert relative_difference(u2_quadrature(*ab, half, x), f21_residue_sum(*ab, half, x)) < 1e-9


def test_roundtrip_constant(half):
    report = borel_laplace_roundtrip_check(FormalSeries.of([1]), half, 0.3)
    assert report.passed
    assert report.rel_diff < 1e-14


def test_roundtrip_truncated_geometric_series(half):
    report = borel_laplace_roundtrip_check(FormalSeries.of([1] * 9), half, 0.3)
    assert report.passed, report.rel_diff


def test_roundtrip_q_exponential(half):
    q = half.q
    f = FormalSeries.of([q ** (n * (n - 1) // 2) / qpoch_n(q, half, n) for n in range(41)])
    report = borel_laplace_roundtrip_check(f, half, 0.2)
    assert report.passed, report.rel_diff
    assert relative_difference(report.rhs, q_exp_E(half, 0.2)) < 1e-10


def test_residue_closed_form_small_k(half):
    poch = qpoch_inf(half.q, half)
    assert residue_at_spiral_pole(0.7, 0, half) == pytest.approx(-1 / poch)
    assert residue_at_spiral_pole(0.7, 1, half) == pytest.approx(0.5 / (0.5 * poch))
    with pytest.raises(ParameterError):
        residue_at_spiral_pole(0.7, -1, half)


@pytest.mark.parametrize("k", range(4))
def test_residue_matches_contour_integral(half, k):
    report = residue_quadrature_check(0.7, k, half, tolerance=1e-10)
    assert report.passed, report.rel_diff


def test_shifted_poch_identity(half):
    assert shifted_poch_identity_check(0.7, 0, half).rel_diff < 1e-15
    assert shifted_poch_identity_check(0.7, 2, half).passed
    with pytest.raises(DegeneracyError):
        shifted_poch_identity_check(half.q ** 2, 1, half)


def test_residue_sum_is_u2(half, ab):
    assert relative_difference(f21_residue_sum(*ab, half, 0.35), u2_solution(*ab, half, 0.35)) < 1e-10
    with pytest.raises(SpiralError):
        f21_residue_sum(*ab, half, 2.0)


def test_residue_sum_needs_generic_exponents(half):
    with pytest.raises(DegeneracyError):
        f21_residue_sum(half.power(0.3), half.power(1.3), half, 0.35)


def test_contour_validation(half, ab):
    with pytest.raises(ParameterError):
        ContourSpec(radius=0)
    with pytest.raises(ParameterError):
        ContourSpec(radius=0.5, nodes=32)
    with pytest.raises(ParameterError):
        g_contour(*ab, half, radius=3.0)
    assert g_contour(*ab, half).radius == pytest.approx(0.4)


def test_quadrature_gives_up_near_a_pole(half):
    with pytest.raises(ConvergenceError):
        circle_trapezoid(lambda xi: 1 / (xi - 0.99), 0j, 1.0, half, max_nodes=128)


def test_quadrature_rejects_cancelled_integrals(half):
    def f(xi):
        # modulus ~1e3 on the unit circle, exact mean 1e-3
        return 1e3 / xi ** 2 + 1e-3 / xi

    assert circle_trapezoid(f, 0j, 1.0, half) == pytest.approx(1e-3, rel=1e-8)
    with pytest.raises(ConvergenceError, match="integrand modulus"):
        circle_trapezoid(f, 0j, 1.0, half, max_condition=1e4)


def test_theta_kernel_nodes_grow_with_x_and_q():
    small = theta_kernel_nodes(QParam(0.5), 0.6, 0.4)
    far = theta_kernel_nodes(QParam(0.5), 5 + 10j, 0.4)
    close_to_one = theta_kernel_nodes(QParam(0.9), 5 + 10j, 0.4)
    assert small <= far < close_to_one
    assert close_to_one & (close_to_one - 1) == 0
    assert theta_kernel_nodes(QParam(0.5), 0.6, 0.4, nodes=4096) == 4096


def test_u2_where_abx_is_a_negative_power_of_q(half):
    a, b = half.power(0.3), half.power(0.45)
    x = 1 / (a * b * half.q)
    value = u2_solution(a, b, half, x)
    assert cmath.isfinite(value)
    assert relative_difference(value, f21_residue_sum(a, b, half, x)) < 1e-9
    assert equation_residual(lambda t: u2_solution(a, b, half, t), a, b, half, x) < 1e-10


def test_u2_rejects_zero_exponent_base(half):
    with pytest.raises(ParameterError):
        u2_solution(0, 0.5, half, 0.3)
