"""Deterministic diagrams of schemes, as SVG or plain text.

Each strip becomes a grid with one cell per (row, strip column) showing the
column index, a diagonal stroke per window colored by its sign, and sign
badges above (descending) and below (ascending) each start. Output is a pure
function of the RenderSpec: same input, byte-identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidScheme
from .perm import parity
from .scheme import Scheme, validate, windows


@dataclass(frozen=True, slots=True)
class RenderSpec:
    scheme: Scheme
    cell_size: int = 28
    show_signs: bool = True
    positive_color: str = "blue"
    negative_color: str = "orange"
    output_format: str = "svg"  # "svg" or "ascii"

    def __post_init__(self):
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")
        if self.output_format not in ("svg", "ascii"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def render(spec: RenderSpec) -> str:
    report = validate(spec.scheme)
    if not report.is_valid:
        raise InvalidScheme("refusing to render a defective scheme:\n" + report.summary())
    if spec.output_format == "svg":
        return _render_svg(spec)
    return _render_ascii(spec)


def _fmt(v: float) -> str:
    return str(int(v)) if v == int(v) else f"{v:.1f}"


def _render_svg(spec: RenderSpec) -> str:
    sch = spec.scheme
    s = spec.cell_size
    n = sch.n
    margin = s // 2 + 4
    badge = s // 2 + 6 if spec.show_signs else 0
    strip_height = n * s + 2 * badge
    gap = s

    width = 2 * margin + max(len(st.columns) for st in sch.strips) * s
    height = 2 * margin + len(sch.strips) * strip_height + (len(sch.strips) - 1) * gap

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    font = max(10, int(s * 0.45))
    badge_font = max(9, int(s * 0.4))

    for si, strip in enumerate(sch.strips):
        x0 = margin
        y0 = margin + si * (strip_height + gap)
        grid_top = y0 + badge

        def cx(col: int) -> float:
            return x0 + (col - 0.5) * s

        def cy(row: int) -> float:
            return grid_top + (row - 0.5) * s

        for c in range(len(strip.columns)):
            parts.append(
                f'<rect x="{_fmt(x0 + c * s)}" y="{_fmt(grid_top)}" width="{s}" '
                f'height="{n * s}" fill="none" stroke="#bbbbbb" stroke-width="1"/>'
            )
        for win in windows(strip):
            dcolor = spec.positive_color if parity(win.descending) == 1 else spec.negative_color
            acolor = spec.positive_color if parity(win.ascending) == 1 else spec.negative_color
            p = win.start
            parts.append(
                f'<line x1="{_fmt(cx(p))}" y1="{_fmt(cy(1))}" '
                f'x2="{_fmt(cx(p + n - 1))}" y2="{_fmt(cy(n))}" '
                f'stroke="{dcolor}" stroke-width="{_fmt(s * 0.25)}" '
                f'stroke-opacity="0.45" stroke-linecap="round"/>'
            )
            if n > 1:
                parts.append(
                    f'<line x1="{_fmt(cx(p))}" y1="{_fmt(cy(n))}" '
                    f'x2="{_fmt(cx(p + n - 1))}" y2="{_fmt(cy(1))}" '
                    f'stroke="{acolor}" stroke-width="{_fmt(s * 0.25)}" '
                    f'stroke-opacity="0.45" stroke-linecap="round"/>'
                )
        for c, col in enumerate(strip.columns, start=1):
            for r in range(1, n + 1):
                parts.append(
                    f'<text x="{_fmt(cx(c))}" y="{_fmt(cy(r))}" font-family="monospace" '
                    f'font-size="{font}" text-anchor="middle" dominant-baseline="central" '
                    f'fill="#222222">{col}</text>'
                )
        if spec.show_signs:
            for win in windows(strip):
                dsign = parity(win.descending)
                asign = parity(win.ascending)
                dcolor = spec.positive_color if dsign == 1 else spec.negative_color
                acolor = spec.positive_color if asign == 1 else spec.negative_color
                parts.append(
                    f'<text x="{_fmt(cx(win.start))}" y="{_fmt(y0 + badge / 2)}" '
                    f'font-family="monospace" font-size="{badge_font}" text-anchor="middle" '
                    f'dominant-baseline="central" fill="{dcolor}">'
                    f'{"+" if dsign == 1 else "-"}</text>'
                )
                parts.append(
                    f'<text x="{_fmt(cx(win.start))}" y="{_fmt(grid_top + n * s + badge / 2)}" '
                    f'font-family="monospace" font-size="{badge_font}" text-anchor="middle" '
                    f'dominant-baseline="central" fill="{acolor}">'
                    f'{"+" if asign == 1 else "-"}</text>'
                )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _render_ascii(spec: RenderSpec) -> str:
    sch = spec.scheme
    n = sch.n
    cell = max(len(str(c)) for st in sch.strips for c in st.columns) + 1
    lines: list[str] = []
    for si, strip in enumerate(sch.strips, start=1):
        wins = windows(strip)
        lines.append(f"strip {si}: {n} rows x {len(strip.columns)} columns")
        if spec.show_signs:
            badges = [" " * cell] * len(strip.columns)
            for win in wins:
                mark = "+" if parity(win.descending) == 1 else "-"
                badges[win.start - 1] = mark.rjust(cell)
            lines.append("".join(badges))
        row = "".join(str(c).rjust(cell) for c in strip.columns)
        lines.extend([row] * n)
        if spec.show_signs:
            badges = [" " * cell] * len(strip.columns)
            for win in wins:
                mark = "+" if parity(win.ascending) == 1 else "-"
                badges[win.start - 1] = mark.rjust(cell)
            lines.append("".join(badges))
        for win in wins:
            d = "-".join(str(v) for v in win.descending.images)
            a = "-".join(str(v) for v in win.ascending.images)
            ds = "+" if parity(win.descending) == 1 else "-"
            as_ = "+" if parity(win.ascending) == 1 else "-"
            lines.append(f"  start {win.start:>3}: desc {d} ({ds})  asc {a} ({as_})")
        lines.append("")
    return "\n".join(lines)
