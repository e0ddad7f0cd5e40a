"""Numerics for two-parameter circle-lift families x + t + a*phi(x).

Translation numbers with certified enclosures, Arnol'd tongue boundaries,
first-order tongue asymptotics, order-of-contact fits against parabolic
data of guiding maps, and raster rendering of the parameter plane.
"""

from .asymptotics import (
    ContactFit,
    FirstOrderReport,
    SlopeReport,
    TranslateAverage,
    average_translates,
    fit_contact,
    irrational_slope,
    slopes,
    verify_first_order,
)
from .errors import (
    BracketFailure,
    DegenerateWitness,
    IdentityToTruncation,
    InsufficientData,
    MultiplicityNotOne,
    NonCoprime,
    NonresonantLeadingTerm,
    NonvanishingConstantTerm,
    NotRootOfUnity,
    OrderMismatch,
    ParameterOutOfRange,
    StepUnderflow,
    TongueLabError,
    UnderflowedWidths,
)
from .families import FamilySpec, ParamPoint, eval_iterate, eval_iterate_deriv, eval_lift
from .guided import SpectrumReport, degree_check, xi_coefficient
from .raster import MODE_TONGUEMASK, MODE_TRANSGRAY, RasterConfig, render
from .rotation import (
    Enclosure,
    displacements,
    semiconjugacy_profile,
    staircase,
    trans_enclosure,
    trans_estimate,
)
from .series import (
    ParabolicData,
    TruncatedSeries,
    guide_series,
    parabolic_data,
    series_compose,
    series_exp,
    series_mul,
    width_coefficient,
)
from .tongue import (
    ExtremumReport,
    Region,
    TongueSample,
    boundary_at,
    boundary_witness,
    check_rational,
    classify,
    g_derivs,
    g_extrema,
    g_values,
    trace_boundary,
)

__version__ = "0.1.0"

__all__ = [
    "BracketFailure",
    "ContactFit",
    "DegenerateWitness",
    "Enclosure",
    "ExtremumReport",
    "FamilySpec",
    "FirstOrderReport",
    "IdentityToTruncation",
    "InsufficientData",
    "MODE_TONGUEMASK",
    "MODE_TRANSGRAY",
    "MultiplicityNotOne",
    "NonCoprime",
    "NonresonantLeadingTerm",
    "NonvanishingConstantTerm",
    "NotRootOfUnity",
    "OrderMismatch",
    "ParabolicData",
    "ParamPoint",
    "ParameterOutOfRange",
    "RasterConfig",
    "Region",
    "SlopeReport",
    "SpectrumReport",
    "StepUnderflow",
    "TongueLabError",
    "TongueSample",
    "TranslateAverage",
    "TruncatedSeries",
    "UnderflowedWidths",
    "average_translates",
    "boundary_at",
    "boundary_witness",
    "check_rational",
    "classify",
    "degree_check",
    "displacements",
    "eval_iterate",
    "eval_iterate_deriv",
    "eval_lift",
    "fit_contact",
    "g_derivs",
    "g_extrema",
    "g_values",
    "guide_series",
    "irrational_slope",
    "parabolic_data",
    "render",
    "semiconjugacy_profile",
    "series_compose",
    "series_exp",
    "series_mul",
    "slopes",
    "staircase",
    "trace_boundary",
    "trans_enclosure",
    "trans_estimate",
    "verify_first_order",
    "width_coefficient",
    "xi_coefficient",
]
