import pytest

from sarrus import (
    InvalidScheme,
    RenderSpec,
    Scheme,
    SchemeStrip,
    classic_sarrus,
    render,
    scheme_4x4,
    scheme_5x5,
)


def count(haystack: str, needle: str) -> int:
    return haystack.count(needle)


def test_svg_is_deterministic():
    spec = RenderSpec(scheme=scheme_4x4())
    assert render(spec) == render(spec)
    assert render(spec) == render(RenderSpec(scheme=scheme_4x4()))


def test_ascii_is_deterministic():
    spec = RenderSpec(scheme=scheme_5x5(), output_format="ascii")
    assert render(spec) == render(spec)


def test_4x4_svg_structure():
    out = render(RenderSpec(scheme=scheme_4x4()))
    assert out.startswith("<svg ") or out.startswith("<svg\n")
    # 24 diagonal strokes: 12 in each sign color
    lines = [seg for seg in out.splitlines() if seg.startswith("<line")]
    assert len(lines) == 24
    assert sum('stroke="blue"' in seg for seg in lines) == 12
    assert sum('stroke="orange"' in seg for seg in lines) == 12
    # one cell rect per strip column (plus the background rect)
    assert count(out, "<rect") == 19 + 1
    assert out.endswith("</svg>\n")


def test_5x5_svg_has_two_grids():
    out = render(RenderSpec(scheme=scheme_5x5()))
    assert count(out, "<rect") == 2 * 49 + 1
    lines = [seg for seg in out.splitlines() if seg.startswith("<line")]
    assert len(lines) == 2 * 60
    assert sum('stroke="blue"' in seg for seg in lines) == 60
    assert sum('stroke="orange"' in seg for seg in lines) == 60


def test_classic_sarrus_svg_signs():
    out = render(RenderSpec(scheme=classic_sarrus(3)))
    lines = [seg for seg in out.splitlines() if seg.startswith("<line")]
    assert len(lines) == 6
    assert sum('stroke="blue"' in seg for seg in lines) == 3
    assert sum('stroke="orange"' in seg for seg in lines) == 3


def test_custom_colors_and_no_signs():
    out = render(
        RenderSpec(
            scheme=classic_sarrus(3),
            positive_color="#112233",
            negative_color="#445566",
            show_signs=False,
        )
    )
    assert 'stroke="#112233"' in out and 'stroke="#445566"' in out
    assert count(out, "<text") == 3 * 5  # only the cell labels, no badges


def test_ascii_contents():
    out = render(RenderSpec(scheme=classic_sarrus(3), output_format="ascii"))
    assert "strip 1: 3 rows x 5 columns" in out
    assert " + + +" in out
    assert " - - -" in out
    assert "start   1: desc 1-2-3 (+)  asc 3-2-1 (-)" in out
    assert out.count(" 1 2 3 1 2") == 3


def test_ascii_4x4_sign_rows():
    out = render(RenderSpec(scheme=scheme_4x4(), output_format="ascii"))
    rows = out.splitlines()
    badge = rows[1]
    # starts 1..4 alternate, then the segment pattern repeats at 7..10, 13..16
    assert badge.strip().startswith("+ - + -")


def test_render_refuses_invalid_schemes():
    broken = Scheme(n=3, strips=(SchemeStrip(n=3, columns=(1, 2, 3, 1, 2), starts=(1,)),))
    with pytest.raises(InvalidScheme):
        render(RenderSpec(scheme=broken))


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(scheme=classic_sarrus(3), cell_size=0)
    with pytest.raises(ValueError):
        RenderSpec(scheme=classic_sarrus(3), output_format="png")
