"""Period function and isochronicity of tangential centers of planar Filippov fields."""

from .bell import ordinary_bell, partial_bell
from .field import (
    Classification,
    ClassificationError,
    FieldDocumentError,
    PiecewiseField,
    classify,
    dump_field,
    eta_series,
    fg_series,
    load_field,
    reparametrized_field,
)
from .halfreturn import (
    CenterReport,
    DegenerateRecursionError,
    FlowYSeries,
    HalfReturnData,
    alpha_coefficients,
    center_check,
    half_return,
    involution_defect,
    mu_coefficients,
    y_coefficients,
)
from .oracle import (
    OracleError,
    OrbitMeasurement,
    SimulationConfig,
    convergence_report,
    integrate_half_orbit,
    numeric_period,
    numeric_tilde_period,
)
from .period import (
    NotACenterError,
    PeriodData,
    corollary_values,
    half_period_series,
    period_constants,
    scaled_flow_series,
    tilde_period,
)
from .series import (
    MixedSeries,
    Series1,
    Series2,
    TruncationError,
    compose1,
    eval2_at_series,
    t_integrate_01,
)

__version__ = "0.1.0"
