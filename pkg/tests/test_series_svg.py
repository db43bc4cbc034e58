import math
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from farey_neighbours import svg
from farey_neighbours.series import HEADER, count_series, parse_grid

NS = "{http://www.w3.org/2000/svg}"
FROZEN_ARCS_19 = 239


def brute_arc_count(D):
    pts = sorted({Fraction(p, q) for q in range(1, D + 1) for p in range(q + 1)})
    return sum(1 for i, a in enumerate(pts) for b in pts[i + 1:]
               if abs(a.numerator * b.denominator - a.denominator * b.numerator) == 1)


def test_arc_census_frozen():
    assert brute_arc_count(19) == FROZEN_ARCS_19
    assert len(svg.arc_endpoints(19)) == FROZEN_ARCS_19


def test_svg_structure():
    text = svg.plot_arcs_svg(19)
    root = ET.fromstring(text.encode())
    paths = root.findall(f"{NS}path")
    assert len(paths) == FROZEN_ARCS_19
    assert root.get("version") == "1.1"
    assert root.findall(f"{NS}circle")
    assert [e.get("class") for e in root.findall(f"{NS}line")][-1] == "level"
    assert svg.plot_arcs_svg(19) == text


def test_arcs_meeting_default_line():
    assert svg.arcs_crossing(svg.arc_endpoints(19), svg.DEFAULT_HEIGHT) == 23


def test_single_arc():
    assert svg.arc_endpoints(1) == [(Fraction(0), Fraction(1))]
    with pytest.raises(ValueError):
        svg.arc_endpoints(0)


def _rows(text):
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(HEADER)
    return [l.split(",") for l in lines[1:]]


def test_rational_series():
    rows = _rows(count_series("q", [1, 10]).to_csv())
    assert [r[1] for r in rows] == ["1", "23"]


def test_level_series_uses_hecke_index():
    rows = count_series("q", [100], level=2).rows
    assert rows[0].empirical < count_series("q", [100]).rows[0].empirical


def test_reciprocal_symbols_series():
    assert _rows(count_series("symbols-rec", [0.0]).to_csv())[0][1] == "1"


def test_field_series_has_both_variants():
    r = count_series("field", [Fraction(1), Fraction(1, 4)], f=-1).rows
    assert r[0].empirical == 2
    assert math.isclose(r[1].model_alt, math.pi * r[1].model_paper)


def test_quat_series():
    assert [r.empirical for r in count_series("quat", [Fraction(1), Fraction(1, 2)]).rows] == [12, 36]


def test_grid_validation():
    assert parse_grid("1, 1/2", "fraction") == [1, Fraction(1, 2)]
    with pytest.raises(ValueError):
        parse_grid("", "int")
    with pytest.raises(ValueError):
        count_series("q", [10, 5])
    with pytest.raises(ValueError):
        count_series("field", [Fraction(1, 4), Fraction(1, 2)])
    with pytest.raises(ValueError):
        count_series("nope", [1])
