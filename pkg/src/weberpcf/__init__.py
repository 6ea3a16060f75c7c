"""Parabolic cylinder functions U, V, E+-, E, E*, W for complex parameter and argument.

Values come from Laplace integral representations, continued in the
parameter by Hadamard finite parts and normalised by the entire ``1/Gamma``.
"""

from .asymptotics import AsymptoticSum, asym_E, asym_U, asym_V, optimal_truncation
from .config import DEFAULT_CONFIG, EvalConfig, EvalResult
from .errors import (
    DomainError,
    FinitePartPoleError,
    GammaPoleError,
    NonconvergentRayError,
    PCFError,
    QuadratureError,
    SeriesTruncationError,
    SingularRayError,
    StencilError,
)
from .finite_part import (
    TaylorSeries,
    finite_part_segment,
    gamma_normalized_fp,
    moment_coefficient,
)
from .complex_gamma import gamma, log_gamma, pochhammer, recip_gamma
from .kernels import BACKEND
from .contour_quadrature import IntegrandSpec, PowerFactor, RayPath, laplace_ray, segment_singular
from .verify import SuiteReport, ode_residual, run_suite, wronskian
from .weber_e import (
    ClassicalPhases,
    E_minus,
    E_plus,
    classical_E,
    classical_Estar,
    classical_phases,
    connection_matrix_E,
    u_e_link,
    v_minus,
    v_plus,
    whittaker_W,
)
from .weber_uv import ConnectionCoefficients, U, V, connection_matrix_uv, u_minus, u_plus

__version__ = "0.1.0"

__all__ = [
    "AsymptoticSum", "asym_E", "asym_U", "asym_V", "optimal_truncation",
    "DEFAULT_CONFIG", "EvalConfig", "EvalResult",
    "DomainError", "FinitePartPoleError", "GammaPoleError", "NonconvergentRayError",
    "PCFError", "QuadratureError", "SeriesTruncationError", "SingularRayError", "StencilError",
    "TaylorSeries", "finite_part_segment", "gamma_normalized_fp", "moment_coefficient",
    "gamma", "log_gamma", "pochhammer", "recip_gamma",
    "BACKEND",
    "IntegrandSpec", "PowerFactor", "RayPath", "laplace_ray", "segment_singular",
    "SuiteReport", "ode_residual", "run_suite", "wronskian",
    "ClassicalPhases", "E_minus", "E_plus", "classical_E", "classical_Estar", "classical_phases",
    "connection_matrix_E", "u_e_link", "v_minus", "v_plus", "whittaker_W",
    "ConnectionCoefficients", "U", "V", "connection_matrix_uv", "u_minus", "u_plus",
]
