import xml.etree.ElementTree as ET

import pytest

from tatami.catgen import iter_vh
from tatami.core import TernaryCode, decode_code, running_bond
from tatami.oracle import enumerate_tn
from tatami.render import RenderSpec, parse_ascii, render, render_ascii, render_svg, render_svg_sheet

SVG = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("n", range(2, 9))
def test_ascii_round_trip(n):
    for cov in enumerate_tn(n):
        assert parse_ascii(render_ascii(cov)).key == cov.key


def test_ascii_marks_flipped_monominoes():
    cov = decode_code(10, TernaryCode.parse(10, "0,1,-1,0,0,1,-1,0"))
    text = render_ascii(cov)
    assert text.count("*") == 4
    assert text.count("o") == 6
    plain = render_ascii(cov, highlight_flipped=False)
    assert "*" not in plain and plain.count("o") == 10


def test_ascii_bond_n2():
    assert render_ascii(running_bond(2)) == "+---+---+\n| o | o |\n+---+---+\n|       |\n+---+---+"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_ascii("hello")


def test_svg_sheet_layout():
    covs = list(iter_vh(8, 7))
    root = ET.fromstring(render_svg_sheet(covs, RenderSpec("svg", cell_size=10, columns=6)))
    groups = root.findall(f"{SVG}g")
    assert len(groups) == 24
    # 6 columns x 4 rows of 80px thumbnails, 10px gutters
    assert root.get("width") == str(6 * 80 + 7 * 10)
    assert root.get("height") == str(4 * 80 + 5 * 10)
    first = groups[0].findall(f"{SVG}rect")
    assert len(first) == 8 + 28  # monominoes plus dominoes


def test_svg_flipped_monominoes_red():
    cov = decode_code(10, TernaryCode.parse(10, "0,1,-1,0,0,1,-1,0"))
    root = ET.fromstring(render_svg(cov))
    fills = [r.get("fill") for r in root.iter(f"{SVG}rect")]
    assert fills.count("#d62728") == 4


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec("svg", cell_size=0)
    with pytest.raises(ValueError):
        RenderSpec("png")
    assert render(running_bond(3), RenderSpec("ascii")).startswith("+---")


def test_empty_sheet_is_valid_xml():
    ET.fromstring(render_svg_sheet([]))
