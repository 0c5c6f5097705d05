"""Exact Hurwitz class numbers, Hecke trace formulas, and equidistribution."""

from .cyclotomic import CyclotomicRational, cyclotomic_polynomial, root_of_unity
from .dirichlet import (
    CharacterSplit,
    DirichletCharacter,
    enumerate_characters,
    mult_order,
    split_at,
)
from .equidist import (
    DiscreteMeasure,
    build_measure,
    build_twisted_measure,
    bound_sweep,
    equidist_report,
    interval_mass,
    mass_check,
    moment_U,
    moment_x,
    multiprime_moment,
    semicircle_cdf,
    semicircle_mass,
)
from .quadforms import (
    BinaryQuadraticForm,
    OrderDiscriminant,
    class_number,
    fundamental_decomposition,
    generalized_H,
    hurwitz_H,
    hurwitz_values,
    hw_from_fundamental,
    kronecker_symbol,
    reduced_forms,
    unit_weighted_h,
)
from .resolvent import (
    A1_series,
    A3_series_closed,
    A4_series,
    lhs_series,
    moment_A,
    radius_probe,
    verify_rtf,
)
from .series import TruncatedSeries
from .trace import (
    TraceBreakdown,
    TraceContext,
    chebyshev_U,
    dickson_e,
    mu_local,
    trace_T,
)

__version__ = "0.1.0"
