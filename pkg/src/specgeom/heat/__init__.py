"""Heat kernels, corner integrals, box spectra and heat-trace expansions."""

from specgeom.heat.boxes import (
    BoundaryCondition,
    BoxSpec,
    BracketingReport,
    EigenLine,
    HeatTraceSum,
    PartitionError,
    SubBox,
    box_eigenvalues,
    bracketing_check,
    counting_function,
    heat_trace_eigensum,
    weyl_constant,
    weyl_ratio,
)
from specgeom.heat.corner import (
    AngleDomainError,
    auxiliary_bound_integral,
    carslaw_integral,
    corner_coefficient,
    corner_coefficient_closed_form,
    dominated_bound_check,
)
from specgeom.heat.expansion import (
    HeatExpansion,
    NonConvexError,
    a0_predictor,
    corner_sum_regular_ngon,
    polygon_heat_expansion,
)
from specgeom.heat.kernels import free_kernel, halfspace_kernel, sector_kernel_diag, sector_kernel_terms
from specgeom.heat.quadrature import QuadratureConfig, QuadratureError

__all__ = [
    "AngleDomainError",
    "BoundaryCondition",
    "BoxSpec",
    "BracketingReport",
    "EigenLine",
    "HeatExpansion",
    "HeatTraceSum",
    "NonConvexError",
    "PartitionError",
    "QuadratureConfig",
    "QuadratureError",
    "SubBox",
    "a0_predictor",
    "auxiliary_bound_integral",
    "box_eigenvalues",
    "bracketing_check",
    "carslaw_integral",
    "corner_coefficient",
    "corner_coefficient_closed_form",
    "corner_sum_regular_ngon",
    "counting_function",
    "dominated_bound_check",
    "free_kernel",
    "halfspace_kernel",
    "heat_trace_eigensum",
    "polygon_heat_expansion",
    "sector_kernel_diag",
    "sector_kernel_terms",
    "weyl_constant",
    "weyl_ratio",
]
