from .basic import phi_rs, phi20_formal_coeffs, u1_is_divergent_diagnostic, terminating_order
from .continuation import Phi21Lattice, phi21_continued, phi21_c0_continued
from .solutions import (
    u2_solution, v_solution, v1_solution, v2_solution, infinity_series, con2_series,
    equation_residual,
    origin_spiral,
)

__all__ = [
    'phi_rs', 'phi20_formal_coeffs', 'u1_is_divergent_diagnostic', 'terminating_order',
    'Phi21Lattice', 'phi21_continued', 'phi21_c0_continued',
    'u2_solution', 'v_solution', 'v1_solution', 'v2_solution', 'infinity_series',
    'con2_series', 'origin_spiral', 'equation_residual',
]
