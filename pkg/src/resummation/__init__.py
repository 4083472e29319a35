from .borel import (
    BorelImage, qborel_plus, qborel_plus_inverse, qborel_minus, phi20_borel_image,
    operational_relation_check,
)
from .laplace import (
    ContourSpec, laplace_spiral, lattice_sum, qlaplace_plus, f20, circle_trapezoid,
    qlaplace_minus_quadrature, borel_laplace_roundtrip_check, lstokes_witness,
)
from .residues import (
    require_generic_exponents, g_closed_form, g_taylor_coeffs, g_contour, u2_quadrature,
    residue_at_spiral_pole, residue_quadrature_check, shifted_poch_identity_check,
    f21_residue_sum, zhang_rhs,
)

__all__ = [
    'BorelImage', 'qborel_plus', 'qborel_plus_inverse', 'qborel_minus', 'phi20_borel_image',
    'operational_relation_check',
    'ContourSpec', 'laplace_spiral', 'lattice_sum', 'qlaplace_plus', 'f20', 'circle_trapezoid',
    'qlaplace_minus_quadrature', 'borel_laplace_roundtrip_check', 'lstokes_witness',
    'require_generic_exponents', 'g_closed_form', 'g_taylor_coeffs', 'g_contour', 'u2_quadrature',
    'residue_at_spiral_pole', 'residue_quadrature_check', 'shifted_poch_identity_check',
    'f21_residue_sum', 'zhang_rhs',
]
