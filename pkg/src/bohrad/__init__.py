"""Radii of weighted majorant inequalities for bounded analytic functions
on shifted disks, with certified series evaluation, extremal-family
sharpness checks, reference-table reproduction and a CLI.
"""

from .bohr import (
    BohrSumReport,
    bernardi_bohr_sum,
    cesaro_binomial,
    cesaro_bohr_sum,
    cesaro_transform,
    function_radius,
    majorant_sum,
    zero_radius_witness,
)
from .coeffs import CoefficientSequence, GeometricTail, constant_function
from .errors import (
    BohradError,
    ConvergenceError,
    DomainError,
    InvalidTolerance,
    NoRootFound,
    WitnessNotFound,
)
from .extremal import (
    ExtremalParams,
    coefficient_bound,
    extremal_coefficients,
    extremal_eval,
    sharpness_witness,
)
from .kernels import backend as kernel_backend
from .radii import (
    RadiusProblem,
    bernardi_radius,
    cesaro_radius,
    closed_form_radius,
    djakov_ramanujan_bounds,
    general_radius,
    shifted_disk_radius,
    shifted_disk_radius_m,
)
from .report import CurveSample, TableSpec, emit, reproduce_table, sample_curve
from .rootfind import RootResult, smallest_root
from .weights import (
    TailSumRequest,
    WeightFamily,
    WeightKind,
    bernardi,
    cesaro,
    power,
    power_times_n,
    power_times_n_plus_1,
    power_times_n_squared,
    tail_sum,
    weight_at,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "kernel_backend",
    # errors
    "BohradError",
    "ConvergenceError",
    "DomainError",
    "InvalidTolerance",
    "NoRootFound",
    "WitnessNotFound",
    # weights
    "WeightKind",
    "WeightFamily",
    "TailSumRequest",
    "power",
    "power_times_n_plus_1",
    "power_times_n",
    "power_times_n_squared",
    "cesaro",
    "bernardi",
    "weight_at",
    "tail_sum",
    # roots and radii
    "RootResult",
    "smallest_root",
    "RadiusProblem",
    "general_radius",
    "shifted_disk_radius",
    "shifted_disk_radius_m",
    "closed_form_radius",
    "cesaro_radius",
    "bernardi_radius",
    "djakov_ramanujan_bounds",
    # coefficients and majorants
    "CoefficientSequence",
    "GeometricTail",
    "constant_function",
    "ExtremalParams",
    "extremal_coefficients",
    "extremal_eval",
    "coefficient_bound",
    "sharpness_witness",
    "BohrSumReport",
    "majorant_sum",
    "function_radius",
    "cesaro_binomial",
    "cesaro_transform",
    "cesaro_bohr_sum",
    "bernardi_bohr_sum",
    "zero_radius_witness",
    # reporting
    "TableSpec",
    "CurveSample",
    "reproduce_table",
    "sample_curve",
    "emit",
]
