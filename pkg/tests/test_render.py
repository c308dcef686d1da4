import xml.etree.ElementTree as ET
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from shiftchain_lab.coloring import Coloring, greedy_proper_3
from shiftchain_lab.core import OrderedHypergraph, compare, Comparison
from shiftchain_lab.errors import ColoringError
from shiftchain_lab.render import (
    RenderConfig,
    polylines_from_svg,
    polylines_properly_cross,
    render_svg,
    segments_properly_cross,
)

from conftest import increasing_tuples, random_chains

SVG = "{http://www.w3.org/2000/svg}"


def count(svg, tag):
    return sum(1 for _ in ET.fromstring(svg.encode()).iter(SVG + tag))


def test_single_edge():
    svg = render_svg(OrderedHypergraph(2, 2, ((1, 2),)))
    lines = polylines_from_svg(svg)
    assert len(lines) == 1 and len(lines[0]) == 2
    assert count(svg, "circle") == 2


def test_h3_counts_and_no_crossings(h3):
    svg = render_svg(h3, greedy_proper_3(h3))
    lines = polylines_from_svg(svg)
    assert len(lines) == 6 and count(svg, "circle") == 8
    for a, b in combinations(lines, 2):
        assert not polylines_properly_cross(a, b)
    assert render_svg(h3, greedy_proper_3(h3)) == svg


def test_points_follow_layout(h3):
    cfg = RenderConfig(column_spacing=10, row_spacing=20, margin=5)
    lines = polylines_from_svg(render_svg(h3, cfg=cfg))
    for edge, pts in zip(h3.edges, lines):
        assert pts == [(5 + (v - 1) * 10, 5 + (j - 1) * 20) for j, v in enumerate(edge, 1)]


def test_incomparable_pair_crosses():
    lines = polylines_from_svg(render_svg(OrderedHypergraph(2, 4, ((1, 4), (2, 3)))))
    assert polylines_properly_cross(*lines)


def test_segment_predicate():
    assert segments_properly_cross((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_properly_cross((0, 0), (1, 1), (1, 1), (2, 0))
    assert not segments_properly_cross((0, 0), (0, 1), (1, 0), (1, 1))


@given(random_chains(max_n=10))
def test_chains_never_cross(h):
    lines = polylines_from_svg(render_svg(h))
    assert all(not polylines_properly_cross(a, b) for a, b in combinations(lines, 2))


@given(st.data())
def test_incomparable_without_shared_positions_cross(data):
    n = data.draw(st.integers(4, 12))
    m = data.draw(st.integers(2, n // 2))
    a = data.draw(increasing_tuples(m, n))
    b = data.draw(increasing_tuples(m, n))
    # polylines that meet at a shared point only touch there
    if compare(a, b) is not Comparison.INCOMPARABLE or any(x == y for x, y in zip(a, b)):
        return
    lines = polylines_from_svg(render_svg(OrderedHypergraph(m, n, (a, b))))
    assert polylines_properly_cross(*lines)


def test_highlight_and_labels(h3):
    svg = render_svg(h3, cfg=RenderConfig(highlight={4}, labels=True))
    widths = [el.get("stroke-width") for el in ET.fromstring(svg.encode()).iter(SVG + "polyline")]
    assert widths.count("5") == 1 and widths[4] == "5"
    assert count(svg, "text") == 8


def test_fill_colors(h3):
    svg = render_svg(h3, Coloring((1, 2, 3, 1, 2, 3, 1, 2), 3))
    fills = [el.get("fill") for el in ET.fromstring(svg.encode()).iter(SVG + "circle")]
    assert fills[:3] == ["#e41a1c", "#377eb8", "#4daf4a"]


def test_errors(h3):
    with pytest.raises(ColoringError):
        render_svg(h3, Coloring((1, 2), 2))
    with pytest.raises(ValueError):
        RenderConfig(column_spacing=0)
    with pytest.raises(ValueError):
        RenderConfig(palette=("#000", "#fff"))
