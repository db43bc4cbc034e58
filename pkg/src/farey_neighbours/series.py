"""Counting experiments as (threshold, empirical, model) series with CSV output."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import rational
from .bianchi import count_k_farey_pairs
from .hyperbolic import ALT, PAPER, AsymptoticModel, model_value
from .quadratic import QuadField
from .quaternion import count_quat_farey_pairs

HEADER = ("threshold", "empirical", "model_paper", "model_alt", "ratio_paper", "ratio_alt")
REGIMES = ("q", "field", "quat", "symbols", "symbols-rec")


@dataclass
class CountRow:
    threshold: object
    empirical: int
    model_paper: float
    model_alt: float

    @staticmethod
    def _ratio(emp, model):
        return emp / model if model else math.nan

    @property
    def ratio_paper(self) -> float:
        return self._ratio(self.empirical, self.model_paper)

    @property
    def ratio_alt(self) -> float:
        return self._ratio(self.empirical, self.model_alt)


@dataclass
class CountSeries:
    regime: str
    rows: list[CountRow] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(HEADER)
        for r in self.rows:
            w.writerow([str(r.threshold), r.empirical, _fmt(r.model_paper), _fmt(r.model_alt),
                        _fmt(r.ratio_paper), _fmt(r.ratio_alt)])
        return buf.getvalue()


def _fmt(x: float) -> str:
    return "" if math.isnan(x) else f"{x:.12g}"


def parse_grid(text: str, kind: str = "float") -> list:
    """Comma-separated grid; ``kind`` is ``int``, ``fraction`` or ``float``."""
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise ValueError("empty grid")
    conv = {"int": int, "fraction": Fraction, "float": float}[kind]
    values = [conv(t) for t in items]
    return values


def _check_monotone(values, decreasing: bool = False):
    pairs = zip(values, values[1:])
    ok = all(b < a for a, b in pairs) if decreasing else all(b > a for a, b in pairs)
    if not ok:
        raise ValueError("grid must be strictly monotone")


def count_series(regime: str, grid, f: int = -1, level: int | None = None,
                 threads: int = 1) -> CountSeries:
    """Empirical counts and both model variants along ``grid``.

    ``q``: grid of N (pairs in [0, 1] with gap >= 1/N, optionally level L);
    ``field``/``quat``: grid of epsilon; ``symbols``/``symbols-rec``: grid of T.
    """
    if regime not in REGIMES:
        raise ValueError(f"unknown regime {regime!r}")
    series = CountSeries(regime)
    if regime == "q":
        _check_monotone(grid)
        if level is None:
            model = AsymptoticModel("T1_1")
        else:
            model = AsymptoticModel("T4", {"iota": 2, "index": rational.hecke_index(level)})
        for N in grid:
            if N < 1:
                raise ValueError("N must be at least 1")
            emp = rational.count_farey_pairs(N, level, threads)
            mv = model_value(model, Fraction(1, N)) if N > 1 else 0.0
            series.rows.append(CountRow(N, emp, mv, mv))
    elif regime == "field":
        _check_monotone(grid, decreasing=True)
        F = QuadField(f)
        paper = AsymptoticModel("T1_2", {"field": F}, PAPER)
        alt = AsymptoticModel("T1_2", {"field": F}, ALT)
        for eps in grid:
            emp = count_k_farey_pairs(F, epsilon=eps)
            series.rows.append(CountRow(eps, emp, model_value(paper, eps), model_value(alt, eps)))
    elif regime == "quat":
        _check_monotone(grid, decreasing=True)
        model = AsymptoticModel("T16")
        for eps in grid:
            mv = model_value(model, eps)
            series.rows.append(CountRow(eps, count_quat_farey_pairs(eps), mv, mv))
    else:
        _check_monotone(grid)
        mode, tid = ("all", "R8i") if regime == "symbols" else ("reciprocal", "Eq3")
        model = AsymptoticModel(tid)
        for T in grid:
            mv = model_value(model, T)
            series.rows.append(CountRow(T, rational.count_modular_symbols(T, mode), mv, mv))
    return series
