"""Command-line front end: ``rcomplexity {fit,member,limit,add,compare}``."""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from typing import Optional, Sequence

from .errors import CsvError, GrowthOverflow, NoViableModel, ParseError, RComplexityError
from .estimator import DEFAULT_DEGREES, Family, FitModel, crossover, extrapolate, fit_embedding, to_growth_function
from .expression_io import (
    embedding_from_json,
    embedding_to_json,
    format_class,
    json_number,
    parse_class,
    parse_function,
    read_csv,
)
from .growth_algebra import ExtendedNonNegReal, GrowthFunction, evaluate, limit_ratio
from .oracle import AGREEMENT_TOL, OracleClass, estimate_limit
from .rclass import add_classes, member

EXIT_OK = 0
EXIT_NON_MEMBER = 1
EXIT_INPUT_ERROR = 2
EXIT_NO_MODEL = 3
EXIT_ORACLE_DISAGREES = 4

EPILOG = """\
exit codes:
  0  success / member
  1  not a member (member subcommand)
  2  input error: unreadable or malformed CSV, JSON or expression
  3  no model family could be fitted (fit subcommand)
  4  numeric oracle disagrees with the exact limit (limit --verify)
"""


class InputError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: dict, human: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _fmt(x) -> str:
    v = json_number(x)
    if v is None:
        return "inf" if x is not None and x > 0 else "nan"
    return str(v)


def _limit_json(limit: ExtendedNonNegReal) -> dict:
    if limit.is_finite:
        return {"tag": "finite", "value": json_number(float(limit.value))}
    return {"tag": limit.tag.value, "value": 0 if limit.is_zero else None}


def _float_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("degrees must be numbers >= 1")
    return values


def _family_list(text: str) -> tuple[Family, ...]:
    try:
        return tuple(Family(x.strip().upper()) for x in text.split(",") if x.strip())
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise argparse.ArgumentTypeError(f"families must be among {names}") from None


def cmd_fit(args: argparse.Namespace) -> int:
    try:
        series = read_csv(args.input)
    except CsvError as exc:
        raise InputError(str(exc)) from exc
    try:
        fits = fit_embedding(series, args.degrees, args.families)
    except NoViableModel as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_MODEL
    for s, m in fits:
        if m.intercept < 0:
            print(
                f"warning: {s.metric}: negative intercept {_fmt(m.intercept)} is dropped "
                "when the model is used as a growth function",
                file=sys.stderr,
            )
    payload = embedding_to_json(fits)
    lines = [
        f"{e['name']} [{e['unit']}]: {e['family']} degree={_fmt(e['degree'])} "
        f"coeff={_fmt(e['coeff'])} intercept={_fmt(e['intercept'])} score={_fmt(e['score'])}"
        for e in payload["metrics"]
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _parse_function(text: str) -> GrowthFunction:
    try:
        return parse_function(text)
    except ParseError as exc:
        raise InputError(f"{exc}\n{exc.caret()}") from exc


def _parse_class(text: str):
    try:
        return parse_class(text)
    except ParseError as exc:
        raise InputError(f"{exc}\n{exc.caret()}") from exc


def cmd_member(args: argparse.Namespace) -> int:
    f = _parse_function(args.function)
    cls = _parse_class(args.cls)
    verdict = member(f, cls)
    payload = {
        "function": str(f),
        "class": format_class(cls),
        "member": verdict.member,
        "limit": _limit_json(verdict.limit),
    }
    human = f"{'member' if verdict.member else 'non-member'}: {f} in {format_class(cls)}\nlimit: {verdict.limit}"
    _emit(args, payload, human)
    return EXIT_OK if verdict.member else EXIT_NON_MEMBER


def _oracle_agrees(limit: ExtendedNonNegReal, num: GrowthFunction, den: GrowthFunction) -> tuple[bool, dict]:
    est = estimate_limit(num, den)
    info = {"classification": est.classification.value, "value": json_number(est.value) if est.value else est.value}
    c = est.classification
    if c is OracleClass.INCONCLUSIVE:
        return True, info
    if c is OracleClass.ZERO:
        return limit.is_zero, info
    if c is OracleClass.INFINITE:
        return limit.is_infinite, info
    return limit.is_finite and abs(est.value - float(limit.value)) <= AGREEMENT_TOL * float(limit.value), info


def cmd_limit(args: argparse.Namespace) -> int:
    num = _parse_function(args.num)
    den = _parse_function(args.den)
    limit = limit_ratio(num, den)
    payload = {"num": str(num), "den": str(den), "limit": _limit_json(limit)}
    human = str(limit)
    code = EXIT_OK
    if args.verify:
        agrees, info = _oracle_agrees(limit, num, den)
        payload["oracle"] = dict(info, agrees=agrees)
        human += f"\noracle: {info['classification']}" + (
            f" {_fmt(info['value'])}" if info["classification"] == "finite" else ""
        )
        if not agrees:
            human += " (DISAGREES)"
            code = EXIT_ORACLE_DISAGREES
    _emit(args, payload, human)
    return code


def cmd_add(args: argparse.Namespace) -> int:
    left = _parse_class(args.left)
    right = _parse_class(args.right)
    try:
        result = add_classes(left, right)
    except RComplexityError as exc:
        raise InputError(str(exc)) from exc
    text = format_class(result)
    _emit(args, {"left": format_class(left), "right": format_class(right), "result": text}, text)
    return EXIT_OK


def _load_operand(text: str, metric: Optional[str]) -> tuple[GrowthFunction, Optional[FitModel]]:
    """An operand is an expression, inline model JSON, or a path to embedding JSON."""
    stripped = text.strip()
    if stripped.startswith("{") or stripped.endswith(".json"):
        try:
            if stripped.startswith("{"):
                models = embedding_from_json(stripped)
            else:
                with open(stripped) as fh:
                    models = embedding_from_json(json.load(fh))
        except OSError as exc:
            raise InputError(f"cannot read {stripped}: {exc.strerror}") from exc
        except ValueError as exc:
            raise InputError(f"bad model JSON: {exc}") from exc
        if metric is not None:
            if metric not in models:
                raise InputError(f"metric {metric!r} not in {sorted(models)}")
            model = models[metric]
        elif len(models) == 1:
            model = next(iter(models.values()))
        else:
            raise InputError(f"embedding has several metrics {list(models)}; choose one with --metric")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            g = to_growth_function(model)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return g, model
    return _parse_function(text), None


def _value_at(g: GrowthFunction, model: Optional[FitModel], n: int) -> float:
    if model is not None:
        return extrapolate(model, n)
    try:
        return evaluate(g, n)
    except GrowthOverflow:
        return math.inf


def cmd_compare(args: argparse.Namespace) -> int:
    if args.horizon < 2:
        raise InputError("--horizon must be >= 2")
    if args.at is not None and args.at < 2:
        raise InputError("--at must be >= 2")
    f1, m1 = _load_operand(args.f1, args.metric)
    f2, m2 = _load_operand(args.f2, args.metric)
    point = crossover(f1, f2, args.horizon)
    payload: dict = {"f1": str(f1), "f2": str(f2), "horizon": args.horizon, "crossover": point}
    lines = [f"crossover: {point}" if point is not None else f"crossover: none <= {args.horizon}"]
    if args.at is not None:
        v1 = _value_at(f1, m1, args.at)
        v2 = _value_at(f2, m2, args.at)
        payload["at"] = {"n": args.at, "f1": json_number(v1), "f2": json_number(v2)}
        lines.append(f"f1({args.at}) = {_fmt(v1)}")
        lines.append(f"f2({args.at}) = {_fmt(v2)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("human", "json"), default="human")

    parser = argparse.ArgumentParser(
        prog="rcomplexity",
        description="r-Complexity calculus and Big r-Theta estimation.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", parents=[common], help="fit Big r-Theta descriptors to CSV samples",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--input", required=True, help="CSV with header metric,unit,n,value")
    p.add_argument("--degrees", type=_float_list, default=DEFAULT_DEGREES, help="POLY degree grid, e.g. 1,2,3")
    p.add_argument("--families", type=_family_list, default=tuple(Family), help="e.g. POLY,NLOGN")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("member", parents=[common], help="decide f in K_r(g)",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--function", required=True, help='growth function, e.g. "2.1*n + 1"')
    p.add_argument("--class", dest="cls", required=True, help='class, e.g. "theta_2.1(n)"')
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("limit", parents=[common], help="exact lim num/den",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--num", required=True)
    p.add_argument("--den", required=True)
    p.add_argument("--verify", action="store_true", help="cross-check with the numeric oracle")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("add", parents=[common], help="sum of two classes of the same kind",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("compare", parents=[common], help="crossover point and extrapolation",
                       epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--f1", required=True, help="expression, model JSON, or embedding JSON file")
    p.add_argument("--f2", required=True, help="expression, model JSON, or embedding JSON file")
    p.add_argument("--horizon", type=int, default=10**6)
    p.add_argument("--at", type=int, default=None, help="also print both values at this input size")
    p.add_argument("--metric", default=None, help="metric to use from an embedding file")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
