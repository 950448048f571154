"""The period-4 cycle in basic strip sign structures.

Two facts force everything: shifting a diagonal one step multiplies its sign
by (-1)**(n-1), and reversing it multiplies by (-1)**(n//2). Both depend only
on n mod 4, so the sign layout of the basic strip repeats every four sizes:
6x6 looks like 2x2, 7x7 like 3x3, and so on.
"""

from sarrus import basic_strip_signs, classify

print("classification table:")
print("   n  class  descending alternates  ascending flips")
for n in range(2, 14):
    c = classify(n)
    print(f"  {n:>2}  {c.residue_class:<5}  {str(c.shift_alternates):<21}  {c.ascending_flips}")
print()

print("matching structures four apart:")
for n in (2, 3, 4, 5):
    partner = n + 4
    same = classify(n).same_structure(classify(partner))
    print(f"  {n} vs {partner}: {'same' if same else 'DIFFERENT'}")
print()

for n in (3, 4, 6, 7):
    print(f"basic strip signs for n={n} (start, descending, ascending):")
    row = "  "
    for p, d, a in basic_strip_signs(n):
        row += f"  {p}:{'+' if d == 1 else '-'}/{'+' if a == 1 else '-'}"
    print(row)
print()

print("reading the table:")
print("  n=3: descending diagonals all add, ascending all subtract (the textbook rule)")
print("  n=4: signs alternate by start and both directions agree at each start")
print("  n=6: alternating starts and the ascending direction flips, like n=2")
