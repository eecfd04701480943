"""Text formats: growth-function expressions, class notation, CSV samples, embedding JSON.

Expression grammar (whitespace is insignificant)::

    expr     := term ("+" term)*
    term     := item (["*"] item)*
    item     := "n" ["^" exponent]
              | "log" "(" "n" ")" ["^" exponent]
              | number "^" "n"
              | number
    exponent := ["-" | "+"] number
    number   := decimal ["/" digits] | "(" decimal ["/" digits] ")"

Class notation::

    class    := kind ["_" number] "(" expr ")"
    kind     := "theta" | "O" | "omega" | "o" | "w"

Big kinds take an optional rate (default 1); small kinds reject one.
Logarithms are natural.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import re
from fractions import Fraction
from typing import IO, Iterable, Union

from .errors import CsvError, InvalidTerm, ParseError, ParseInvalidTerm, RateNotAllowed
from .estimator import Family, FitModel, SampleSeries
from .growth_algebra import GrowthFunction, GrowthTerm, normalize
from .rclass import RClass, RClassKind

__all__ = [
    "CSV_HEADER",
    "embedding_from_json",
    "embedding_to_json",
    "format_class",
    "format_function",
    "format_number",
    "json_number",
    "parse_class",
    "parse_function",
    "read_csv",
]

CSV_HEADER = ("metric", "unit", "n", "value")

_DECIMAL = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_DIGITS = re.compile(r"\d+")
_MAX_DECIMAL_EXPONENT = 400
_KIND = re.compile(r"[A-Za-z]+")
_KINDS = {k.value: k for k in RClassKind}


class _Parser:
    def __init__(self, source: str):
        self.src = source
        self.pos = 0

    def error(self, message: str, expected: str | None = None, offset: int | None = None) -> ParseError:
        return ParseError(message, self.src, self.pos if offset is None else offset, expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.src.startswith(literal, self.pos):
            found = repr(self.src[self.pos]) if self.pos < len(self.src) else "end of input"
            raise self.error(f"unexpected {found}", repr(literal))
        self.pos += len(literal)

    def accept(self, literal: str) -> bool:
        self.skip_ws()
        if self.src.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def _bare_number(self) -> Fraction:
        self.skip_ws()
        m = _DECIMAL.match(self.src, self.pos)
        if not m:
            raise self.error("expected a number", "number")
        text = m.group()
        exp_part = re.search(r"[eE]([+-]?\d+)$", text)
        if exp_part and abs(int(exp_part.group(1))) > _MAX_DECIMAL_EXPONENT:
            raise self.error("number out of range", "a smaller exponent")
        self.pos = m.end()
        value = Fraction(text)
        save = self.pos
        if self.accept("/"):
            self.skip_ws()
            d = _DIGITS.match(self.src, self.pos)
            if not d:
                raise self.error("expected an integer denominator", "digits")
            if int(d.group()) == 0:
                raise self.error("zero denominator", "non-zero integer", offset=d.start())
            self.pos = d.end()
            value /= int(d.group())
        else:
            self.pos = save
        return value

    def number(self) -> Fraction:
        if self.accept("("):
            value = self._bare_number()
            self.expect(")")
            return value
        return self._bare_number()

    def exponent(self) -> Fraction:
        if self.accept("-"):
            return -self.number()
        self.accept("+")
        return self.number()

    def _starts_item(self) -> bool:
        c = self.peek()
        return c == "n" or c == "(" or c == "." or c.isdigit() or self.src.startswith("log", self.pos)

    def term(self) -> GrowthTerm:
        start = self.pos
        self.skip_ws()
        if not self._starts_item():
            raise self.error("expected a term", "number, 'n' or 'log(n)'")
        coeff, base, poly, logp = Fraction(1), Fraction(1), Fraction(0), Fraction(0)
        while True:
            self.skip_ws()
            if self.src.startswith("log", self.pos):
                self.pos += 3
                self.expect("(")
                self.expect("n")
                self.expect(")")
                logp += self.exponent() if self.accept("^") else 1
            elif self.peek() == "n":
                self.pos += 1
                poly += self.exponent() if self.accept("^") else 1
            else:
                value = self.number()
                if self.accept("^"):
                    self.expect("n")
                    base *= value
                else:
                    coeff *= value
            if self.accept("*"):
                if not self._starts_item():
                    raise self.error("dangling '*'", "number, 'n' or 'log(n)'")
                continue
            if not self._starts_item():
                break
        try:
            return GrowthTerm(coeff, base, poly, logp)
        except InvalidTerm as exc:
            raise ParseInvalidTerm(str(exc), self.src, start + _leading_ws(self.src, start)) from exc

    def expr(self) -> GrowthFunction:
        terms = [self.term()]
        while self.accept("+"):
            terms.append(self.term())
        return normalize(terms)

    def finish(self) -> None:
        if not self.at_end():
            raise self.error(f"unexpected {self.src[self.pos]!r}", "'+' or end of input")


def _leading_ws(src: str, start: int) -> int:
    i = start
    while i < len(src) and src[i].isspace():
        i += 1
    return i - start


def parse_function(text: str) -> GrowthFunction:
    if not text or not text.strip():
        raise ParseError("empty expression", text or "", 0, "a term")
    p = _Parser(text)
    f = p.expr()
    p.finish()
    return f


def parse_class(text: str) -> RClass:
    if not text or not text.strip():
        raise ParseError("empty class expression", text or "", 0, "a class")
    p = _Parser(text)
    p.skip_ws()
    m = _KIND.match(text, p.pos)
    if not m or m.group() not in _KINDS:
        raise p.error("unknown class kind", "theta, O, omega, o or w")
    kind = _KINDS[m.group()]
    p.pos = m.end()
    rate = Fraction(1)
    if p.peek() == "_":
        rate_at = p.pos
        p.pos += 1
        if not kind.is_big:
            raise RateNotAllowed(f"{kind.value}-classes take no rate", text, rate_at)
        rate = p.number()
        if rate <= 0:
            raise p.error("rate must be positive", "positive number", offset=rate_at + 1)
    p.expect("(")
    ref = p.expr()
    p.expect(")")
    p.finish()
    return RClass(kind, ref, rate)


def format_number(x: Fraction) -> str:
    """Exact text for a Fraction: a decimal when one exists, else ``(p/q)``."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{sign}({x.numerator}/{x.denominator})"
    places = max(twos, fives)
    digits = str(x.numerator * 10**places // x.denominator)
    if places == 0:
        return sign + digits
    digits = digits.rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:].rstrip("0")
    return sign + (f"{whole}.{frac}" if frac else whole)


def _format_exponent(x: Fraction) -> str:
    return format_number(x)


def _format_term(t: GrowthTerm) -> str:
    factors = []
    if t.exp_base != 1:
        factors.append(f"{format_number(t.exp_base)}^n")
    if t.poly_exp != 0:
        factors.append("n" if t.poly_exp == 1 else f"n^{_format_exponent(t.poly_exp)}")
    if t.log_exp != 0:
        factors.append("log(n)" if t.log_exp == 1 else f"log(n)^{_format_exponent(t.log_exp)}")
    if t.coeff != 1 or not factors:
        factors.insert(0, format_number(t.coeff))
    return "*".join(factors)


def format_function(f: GrowthFunction) -> str:
    return " + ".join(_format_term(t) for t in f.terms)


def format_class(cls: RClass) -> str:
    if cls.kind.is_big:
        return f"{cls.kind.value}_{format_number(cls.r)}({format_function(cls.reference)})"
    return f"{cls.kind.value}({format_function(cls.reference)})"


Source = Union[str, os.PathLike, IO[str]]


def read_csv(source: Source) -> list[SampleSeries]:
    """Read ``metric,unit,n,value`` rows into one series per metric, in first-seen order."""
    if isinstance(source, (str, os.PathLike)):
        try:
            with open(source, newline="") as fh:
                return _read_rows(fh)
        except OSError as exc:
            raise CsvError(f"cannot read {os.fspath(source)}: {exc.strerror}") from exc
    return _read_rows(source)


def _read_rows(fh: Iterable[str]) -> list[SampleSeries]:
    reader = csv.reader(fh)
    header = None
    groups: dict[str, dict] = {}
    for row in reader:
        line = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        cells = [c.strip() for c in row]
        if header is None:
            header = tuple(cells)
            if header != CSV_HEADER:
                raise CsvError(f"line {line}: header must be {','.join(CSV_HEADER)}")
            continue
        if len(cells) != 4:
            raise CsvError(f"line {line}: expected 4 fields, got {len(cells)}")
        metric, unit, n_text, value_text = cells
        if not metric:
            raise CsvError(f"line {line}: empty metric name")
        try:
            n = int(n_text)
        except ValueError:
            raise CsvError(f"line {line}: input size {n_text!r} is not an integer") from None
        try:
            value = float(value_text)
        except ValueError:
            raise CsvError(f"line {line}: value {value_text!r} is not a number") from None
        if n < 1:
            raise CsvError(f"line {line}: input size must be positive")
        if not (math.isfinite(value) and value > 0):
            raise CsvError(f"line {line}: value must be positive")
        g = groups.setdefault(metric, {"unit": unit, "points": []})
        if g["unit"] != unit:
            raise CsvError(f"line {line}: metric {metric!r} changes unit")
        if g["points"] and n <= g["points"][-1][0]:
            raise CsvError(f"line {line}: input sizes for {metric!r} must strictly increase")
        g["points"].append((n, value))
    if header is None:
        raise CsvError("empty CSV input")
    if not groups:
        raise CsvError("CSV has a header but no data rows")
    out = []
    for metric, g in groups.items():
        if len(g["points"]) < 3:
            raise CsvError(f"metric {metric!r} has {len(g['points'])} points; at least 3 required")
        out.append(SampleSeries(metric, g["unit"], tuple(g["points"])))
    return out


def json_number(x: float) -> Union[int, float, None]:
    """Round to 12 significant digits; integral values become ints."""
    if x is None or not math.isfinite(x):
        return None
    v = float(f"{x:.12g}")
    return int(v) if v.is_integer() and abs(v) < 2**53 else v


def embedding_to_json(fits: Iterable[tuple[SampleSeries, FitModel]]) -> dict:
    return {
        "metrics": [
            {
                "name": s.metric,
                "unit": s.unit,
                "family": m.family.value,
                "degree": json_number(m.degree),
                "coeff": json_number(m.coeff),
                "intercept": json_number(m.intercept),
                "score": json_number(m.score),
            }
            for s, m in fits
        ]
    }


def _model_from_entry(entry: dict) -> FitModel:
    try:
        return FitModel(
            Family(entry["family"]),
            float(entry.get("degree", 0)),
            float(entry["coeff"]),
            float(entry.get("intercept", 0.0)),
            float(entry.get("score", 0.0) or 0.0),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed model entry: {exc}") from exc


def embedding_from_json(doc: Union[str, dict]) -> dict[str, FitModel]:
    """Parse embedding JSON (or a single model object) into ``{metric: model}``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise ValueError("embedding JSON must be an object")
    if "metrics" not in doc:
        return {doc.get("name", ""): _model_from_entry(doc)}
    models = {}
    for entry in doc["metrics"]:
        name = entry.get("name")
        if not name or name in models:
            raise ValueError(f"metric names must be present and unique, got {name!r}")
        models[name] = _model_from_entry(entry)
    return models


def read_embedding(path: Union[str, os.PathLike]) -> dict[str, FitModel]:
    with io.open(path) as fh:
        return embedding_from_json(json.load(fh))
