"""Fit the six-point benchmark in data/benchmark.csv and show what each model predicts."""

from dataclasses import replace
from pathlib import Path

from rcomplexity.estimator import extrapolate, fit_embedding, to_growth_function
from rcomplexity.expression_io import format_class, json_number, read_csv
from rcomplexity.rclass import RClass, RClassKind, theta_signature

DATA = Path(__file__).parent / "data" / "benchmark.csv"


def rounded(model):
    return replace(model, coeff=json_number(model.coeff), intercept=json_number(model.intercept))


def main() -> None:
    for series, raw in fit_embedding(read_csv(DATA)):
        model = rounded(raw)
        g = to_growth_function(model)
        shape, rate = theta_signature(g)
        print(f"{series.metric} [{series.unit}]")
        print(f"  descriptor   {model.descriptor()}  score={raw.score:.2e}")
        print(f"  growth       {g}")
        print(f"  class        {format_class(RClass(RClassKind.BIG_THETA, shape, rate))}")
        for n in (100, 1000, 10**6):
            print(f"  n={n:<8} {extrapolate(model, n):.6g}")


if __name__ == "__main__":
    main()
