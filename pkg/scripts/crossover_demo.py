"""Where does an asymptotically faster algorithm start to win?

Pairs a method with a large constant against a simpler one with a worse
exponent, and reports the crossover against the time model fitted to data/benchmark.csv.
"""

from dataclasses import replace
from pathlib import Path

from rcomplexity.estimator import crossover, fit_embedding, to_growth_function
from rcomplexity.expression_io import json_number, parse_function, read_csv

PAIRS = [
    ("100*n", "n^2"),
    ("5000*n*log(n)", "n^2"),
    ("40*n^2.807", "n^3"),
    ("n^20", "1.5^n"),
]


def main() -> None:
    for slow_late, fast_late in PAIRS:
        f1, f2 = parse_function(slow_late), parse_function(fast_late)
        point = crossover(f1, f2, 10**9)
        print(f"{fast_late:>8} overtakes {slow_late:<16} at n = {point}")

    fits = dict((s.metric, m) for s, m in fit_embedding(read_csv(Path(__file__).parent / "data" / "benchmark.csv")))
    m = fits["time"]
    time_fn = to_growth_function(replace(m, coeff=json_number(m.coeff), intercept=json_number(m.intercept)))
    print(f"fitted time {time_fn}: n^3 exceeds it from n = {crossover(time_fn, parse_function('n^3'), 10**6)}")


if __name__ == "__main__":
    main()
