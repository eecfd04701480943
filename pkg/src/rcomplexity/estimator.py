"""Big r-Theta approximator.

Fits ``value ~ coeff * shape(n) + intercept`` for a small set of shape
families, keeps the best-scoring one per metric and bridges the resulting
descriptor back into the growth algebra.  Also answers finite-input
questions: where one cost function overtakes another, and what a fitted
model predicts at a given input size.
"""

from __future__ import annotations

import enum
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DegenerateDesign, DomainError, GrowthOverflow, NoViableModel
from .growth_algebra import GrowthFunction, evaluate, log_evaluate, normalize, term

DEFAULT_DEGREES = (1, 2, 3, 4, 5, 6)
TIE_TOL = 1e-9


class Family(str, enum.Enum):
    CONST = "CONST"
    LOG = "LOG"
    POLY = "POLY"
    NLOGN = "NLOGN"
    EXP = "EXP"


class NegativeInterceptWarning(UserWarning):
    """A fitted intercept was dropped when converting to a growth function."""


@dataclass(frozen=True)
class SampleSeries:
    metric: str
    unit: str
    points: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        pts = tuple((int(n), float(v)) for n, v in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 3:
            raise ValueError(f"metric {self.metric!r} needs at least 3 points, got {len(pts)}")
        ns = [n for n, _ in pts]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError(f"metric {self.metric!r}: input sizes must be strictly increasing")
        if ns[0] < 1:
            raise ValueError(f"metric {self.metric!r}: input sizes must be positive")
        if any(not (v > 0 and math.isfinite(v)) for _, v in pts):
            raise ValueError(f"metric {self.metric!r}: values must be positive and finite")

    @property
    def sizes(self) -> np.ndarray:
        return np.array([n for n, _ in self.points], dtype=float)

    @property
    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.points], dtype=float)


@dataclass(frozen=True)
class FitModel:
    """Fitted descriptor, e.g. ``("POLY", 2, 3, 6)``.

    A candidate whose best coefficient is not positive is kept only as a
    discarded marker with ``score == inf``.
    """

    family: Family
    degree: float
    coeff: float
    intercept: float
    score: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.POLY and self.degree < 1:
            raise ValueError("POLY models need degree >= 1")
        if self.family is not Family.POLY and self.degree != 0:
            raise ValueError(f"{self.family.value} models carry degree 0")
        if self.score < 0:
            raise ValueError("score must be non-negative")
        if self.coeff <= 0 and not math.isinf(self.score):
            raise ValueError("coeff must be positive")

    @property
    def discarded(self) -> bool:
        return math.isinf(self.score)

    def descriptor(self) -> tuple:
        return (self.family.value, self.degree, self.coeff, self.intercept)


def shape(family: Family | str, degree: float, n: float) -> float:
    if n < 2:
        raise DomainError(f"shapes are defined for n >= 2, got {n}")
    family = Family(family)
    if family is Family.CONST:
        return 1.0
    if family is Family.LOG:
        return math.log(n)
    if family is Family.POLY:
        return float(n) ** degree
    if family is Family.NLOGN:
        return n * math.log(n)
    try:
        return math.pow(2.0, float(n))
    except OverflowError as exc:
        raise GrowthOverflow(f"2^n overflows at n={n}") from exc


def _shape_column(family: Family, degree: float, sizes: np.ndarray) -> np.ndarray:
    return np.array([shape(family, degree, n) for n in sizes], dtype=float)


def _rmse_score(values: np.ndarray, predicted: np.ndarray) -> float:
    rmse = math.sqrt(float(np.mean((values - predicted) ** 2)))
    return rmse / float(np.mean(values))


def fit_family(series: SampleSeries, family: Family | str, degree: float = 0) -> FitModel:
    family = Family(family)
    if family is not Family.POLY:
        degree = 0
    y = series.values

    if family is Family.CONST:
        level = float(np.mean(y))
        return FitModel(family, 0, level, 0.0, _rmse_score(y, np.full_like(y, level)))

    try:
        x = _shape_column(family, degree, series.sizes)
    except GrowthOverflow:
        return FitModel(family, degree, 0.0, 0.0, math.inf)
    if not np.all(np.isfinite(x)):
        return FitModel(family, degree, 0.0, 0.0, math.inf)
    if np.ptp(x) == 0:
        raise DegenerateDesign(f"{family.value} shape is constant over the sample sizes")

    # scale the shape column to unit magnitude for conditioning
    span = float(np.max(np.abs(x)))
    design = np.column_stack([x / span, np.ones_like(x)])
    (a, b), *_ = np.linalg.lstsq(design, y, rcond=None)
    coeff = float(a) / span
    intercept = float(b)
    if not coeff > 0:
        return FitModel(family, degree, coeff, intercept, math.inf)
    return FitModel(family, degree, coeff, intercept, _rmse_score(y, coeff * x + intercept))


def simplicity_rank(model: FitModel) -> tuple[float, int]:
    """Tie-break order: CONST < LOG < POLY by degree < EXP, NLOGN between POLY 1 and 2."""
    f = model.family
    if f is Family.CONST:
        return (0.0, 0)
    if f is Family.LOG:
        return (1.0, 0)
    if f is Family.POLY:
        return (2.0 + model.degree, 0)
    if f is Family.NLOGN:
        return (3.5, 1)
    return (math.inf, 0)


def candidates(
    families: Iterable[Family | str] = tuple(Family), degrees: Sequence[float] = DEFAULT_DEGREES
) -> list[tuple[Family, float]]:
    out = []
    for fam in families:
        fam = Family(fam)
        if fam is Family.POLY:
            out.extend((fam, float(d)) for d in degrees)
        else:
            out.append((fam, 0.0))
    return out


def fit_best(
    series: SampleSeries,
    degrees: Sequence[float] = DEFAULT_DEGREES,
    families: Iterable[Family | str] = tuple(Family),
) -> FitModel:
    fits = []
    for fam, deg in candidates(families, degrees):
        try:
            fits.append(fit_family(series, fam, deg))
        except DegenerateDesign:
            continue
    viable = [m for m in fits if not m.discarded]
    if not viable:
        raise NoViableModel(f"no model family fits metric {series.metric!r}")
    best_score = min(m.score for m in viable)
    tied = [m for m in viable if m.score - best_score < TIE_TOL]
    return min(tied, key=simplicity_rank)


def fit_embedding(
    series_list: Sequence[SampleSeries],
    degrees: Sequence[float] = DEFAULT_DEGREES,
    families: Iterable[Family | str] = tuple(Family),
) -> list[tuple[SampleSeries, FitModel]]:
    """Fit every metric; results keep the input order."""
    names = [s.metric for s in series_list]
    if len(set(names)) != len(names):
        raise ValueError("metric names must be unique")
    families = tuple(families)
    with ThreadPoolExecutor() as pool:
        models = list(pool.map(lambda s: fit_best(s, degrees, families), series_list))
    return list(zip(series_list, models))


def to_growth_function(model: FitModel) -> GrowthFunction:
    fam = model.family
    if fam is Family.CONST:
        terms = [term(model.coeff)]
    elif fam is Family.LOG:
        terms = [term(model.coeff, log_exp=1)]
    elif fam is Family.POLY:
        terms = [term(model.coeff, poly_exp=model.degree)]
    elif fam is Family.NLOGN:
        terms = [term(model.coeff, poly_exp=1, log_exp=1)]
    else:
        terms = [term(model.coeff, exp_base=2)]
    if model.intercept > 0:
        terms.append(term(model.intercept))
    elif model.intercept < 0:
        warnings.warn(
            f"negative intercept {model.intercept:g} dropped from {fam.value} model",
            NegativeInterceptWarning,
            stacklevel=2,
        )
    return normalize(terms)


def extrapolate(model: FitModel, n: int) -> float:
    """Model prediction at ``n``; returns ``inf`` when the value overflows."""
    if n < 2:
        raise DomainError(f"extrapolation needs n >= 2, got {n}")
    try:
        value = model.coeff * shape(model.family, model.degree, n) + model.intercept
    except (GrowthOverflow, OverflowError):
        return math.inf
    return value


def _exceeds(f2: GrowthFunction, f1: GrowthFunction, n: int) -> bool:
    try:
        return evaluate(f2, n) > evaluate(f1, n)
    except GrowthOverflow:
        return log_evaluate(f2, n) > log_evaluate(f1, n)


def crossover(f1: GrowthFunction, f2: GrowthFunction, horizon: int) -> Optional[int]:
    """Smallest ``n >= 2`` with ``f2(m) > f1(m)`` for every probed ``m`` in ``[n, horizon]``.

    Steps backwards from ``horizon`` with doubling strides until ``f2`` no
    longer exceeds ``f1``, then bisects the last stride.  The sign of
    ``f2 - f1`` is assumed to change at most once inside that stride.
    """
    if horizon < 2:
        raise DomainError(f"horizon must be >= 2, got {horizon}")
    if f1 == f2 or not _exceeds(f2, f1, horizon):
        return None

    good = horizon  # f2 > f1 on every probe in [good, horizon]
    stride = 1
    while True:
        probe = max(2, good - stride)
        if not _exceeds(f2, f1, probe):
            bad = probe
            break
        if probe == 2:
            return 2
        good = probe
        stride *= 2

    while good - bad > 1:
        mid = (good + bad) // 2
        if _exceeds(f2, f1, mid):
            good = mid
        else:
            bad = mid
    return good
