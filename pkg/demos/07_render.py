"""Drawing schemes: deterministic SVG files and quick text diagrams.

Writes one SVG per built-in scheme into ./rendered/ and prints the 3x3 rule
as text. Positive diagonals are blue, negative orange; the badge rows above
and below each grid give the descending and ascending sign at every start.
"""

from pathlib import Path

from sarrus import RenderSpec, builtin_scheme, render

out_dir = Path("rendered")
out_dir.mkdir(exist_ok=True)

for n in (2, 3, 4, 5):
    spec = RenderSpec(scheme=builtin_scheme(n), cell_size=26)
    path = out_dir / f"scheme_{n}x{n}.svg"
    path.write_text(render(spec), encoding="utf-8")
    print(f"wrote {path}")

print()
print("the 3x3 rule as text:")
print(render(RenderSpec(scheme=builtin_scheme(3), output_format="ascii")))

print("re-rendering is byte-identical:")
spec = RenderSpec(scheme=builtin_scheme(4))
print(" ", render(spec) == render(spec))
