"""r-Complexity calculus: exact class membership and arithmetic over growth
functions, plus empirical Big r-Theta estimation from benchmark samples."""

from .errors import *  # noqa: F401,F403
from .estimator import (
    Family,
    FitModel,
    SampleSeries,
    crossover,
    extrapolate,
    fit_best,
    fit_family,
    shape,
    to_growth_function,
)
from .expression_io import format_class, format_function, parse_class, parse_function, read_csv
from .growth_algebra import (
    ExtendedNonNegReal,
    GrowthFunction,
    GrowthTerm,
    LimitTag,
    add,
    evaluate,
    limit_ratio,
    multiply,
    normalize,
    scale,
    term,
)
from .oracle import OracleClass, OracleEstimate, estimate_limit
from .rclass import (
    MembershipVerdict,
    RClass,
    RClassKind,
    add_classes,
    compose_transitive,
    member,
    project_theta,
    rescale_reference,
    symmetry_dual,
    theta_signature,
    transpose_dual,
)

__version__ = "0.1.0"
