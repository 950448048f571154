"""Walkthrough: the 19-column strip that computes a 4x4 determinant.

The classic 3x3 diagonal rule repeats the first two columns and reads six
diagonals off the widened array. The same idea works at 4x4 once you find a
column arrangement whose diagonals hit all 24 permutations: nineteen columns,
twelve start positions, two diagonals per start.
"""

from sarrus import (
    Matrix,
    RenderSpec,
    bareiss_det,
    cofactor_det,
    evaluate,
    leibniz_det,
    parity,
    parity_partition_sums,
    positive_negative_sums,
    render,
    scheme_4x4,
    validate,
    windows,
)

scheme = scheme_4x4()
strip = scheme.strips[0]

print("column order:", "-".join(str(c) for c in strip.columns))
print("starts:      ", ", ".join(str(p) for p in strip.starts))
print()

report = validate(scheme)
print(f"validation: {report.covered} of 24 permutations covered, "
      f"{report.even_count} even / {report.odd_count} odd")
print()

print("each start contributes a descending and an ascending diagonal,")
print("signed by the parity of the permutation it reads off:")
for w in windows(strip):
    d = "+" if parity(w.descending) == 1 else "-"
    print(f"  start {w.start:>2}: {d} {w.descending.images}  {d} {tuple(w.ascending.images)}")
print()

print("fold symmetry: reverse the sequence and swap the labels 3 and 4:")
swap = {3: 4, 4: 3}
folded = tuple(swap.get(c, c) for c in reversed(strip.columns))
print("  original:", strip.columns)
print("  folded:  ", folded)
print("  equal:   ", folded == strip.columns)
print()

M = Matrix.from_rows([[2, 3, 4, -1], [1, -2, 0, 5], [5, 2, 2, -3], [8, 1, 1, 1]])
s_plus, s_minus = positive_negative_sums(scheme, M)
print("worked example matrix:")
for row in M.rows:
    print("  ", row)
print(f"positive sum {s_plus}, negative sum {s_minus}, determinant {s_plus - s_minus}")
print()

print("cross-checks:")
print("  scheme evaluation:  ", evaluate(scheme, M))
print("  permutation sum:    ", leibniz_det(M))
print("  cofactor expansion: ", cofactor_det(M))
print("  fraction-free elim.:", bareiss_det(M))
print("  parity partition:   ", parity_partition_sums(M))
print()

print("text rendering of the strip:")
print(render(RenderSpec(scheme=scheme, output_format="ascii")))
