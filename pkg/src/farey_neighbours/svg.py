"""Deterministic SVG drawing of Farey arcs and Ford circles over [0, 1]."""
from __future__ import annotations

from fractions import Fraction

from .rational import iter_farey_quadruples

SCALE = 1000
MARGIN = 20
DEFAULT_HEIGHT = Fraction(1, 20)


def _n(v) -> str:
    return f"{float(v):.9f}"


def arc_endpoints(max_denom: int) -> list[tuple[Fraction, Fraction]]:
    """Neighbour pairs ``(lo, hi)`` in [0, 1] with both denominators at most ``max_denom``."""
    if max_denom < 1:
        raise ValueError("max_denom must be at least 1")
    out = []
    for p, q, r, s in iter_farey_quadruples(max_denom * max_denom):
        if q <= max_denom and s <= max_denom:
            out.append((Fraction(r, s), Fraction(p, q)))
    return sorted(out)


def arcs_crossing(arcs, height) -> int:
    """Arcs whose top (radius ``gap/2``) reaches the horizontal line at ``height``."""
    h = Fraction(height)
    return sum(1 for lo, hi in arcs if (hi - lo) / 2 >= h)


def ford_centres(max_denom: int) -> list[Fraction]:
    pts = {Fraction(p, q) for q in range(1, max_denom + 1) for p in range(0, q + 1)}
    return sorted(pts)


def plot_arcs_svg(max_denom: int, height=DEFAULT_HEIGHT) -> str:
    """Farey arcs as semicircles, dotted Ford circles and a dashed line at ``height``."""
    arcs = arc_endpoints(max_denom)
    width = SCALE + 2 * MARGIN
    top = SCALE + 2 * MARGIN
    base = top - MARGIN

    def X(x):
        return MARGIN + SCALE * Fraction(x)

    def Y(y):
        return base - SCALE * Fraction(y)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{top}" viewBox="0 0 {width} {top}">',
        f'<line class="axis" x1="{_n(X(0))}" y1="{_n(Y(0))}" x2="{_n(X(1))}" y2="{_n(Y(0))}" '
        'stroke="black" stroke-width="1"/>',
    ]
    lines.append(f'<line class="ford" x1="{_n(X(0))}" y1="{_n(Y(1))}" x2="{_n(X(1))}" '
                 f'y2="{_n(Y(1))}" stroke="gray" stroke-dasharray="1,2"/>')
    for c in ford_centres(max_denom):
        r = Fraction(1, 2 * c.denominator ** 2)
        if r * SCALE < Fraction(1, 10):
            continue
        lines.append(f'<circle class="ford" cx="{_n(X(c))}" cy="{_n(Y(r))}" r="{_n(r * SCALE)}" '
                     'fill="none" stroke="gray" stroke-dasharray="1,2"/>')
    for lo, hi in arcs:
        r = (hi - lo) / 2
        lines.append(f'<path class="farey-arc" d="M {_n(X(lo))} {_n(Y(0))} A {_n(r * SCALE)} '
                     f'{_n(r * SCALE)} 0 0 1 {_n(X(hi))} {_n(Y(0))}" fill="none" stroke="blue"/>')
    lines.append(f'<line class="level" x1="{_n(X(0))}" y1="{_n(Y(height))}" x2="{_n(X(1))}" '
                 f'y2="{_n(Y(height))}" stroke="red" stroke-dasharray="6,4"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
