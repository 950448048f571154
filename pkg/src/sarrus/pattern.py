"""The period-4 sign structure of basic strips.

A basic strip is the identity block laid out for size n: columns 1..n,1..n-1
with a start at each of the first n positions. Two booleans pin down its sign
structure completely: whether descending signs alternate start to start
(they do exactly when n is even, since one shift costs (-1)**(n-1)) and
whether the ascending diagonal's sign is flipped relative to the descending
one at the same start (exactly when floor(n/2) is odd, the cost of reversal).
Both booleans depend only on n mod 4, so sizes repeat in a cycle of four.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeTooSmall

_RESIDUE_NAMES = {2: "4k+2", 3: "4k+3", 0: "4k+4", 1: "4k+5"}


@dataclass(frozen=True, slots=True)
class PatternClass:
    n: int
    residue_class: str
    shift_alternates: bool
    ascending_flips: bool

    def same_structure(self, other: "PatternClass") -> bool:
        return (
            self.shift_alternates == other.shift_alternates
            and self.ascending_flips == other.ascending_flips
        )


def classify(n: int) -> PatternClass:
    """Which of the four repeating sign structures size n falls into."""
    if n < 2:
        raise SizeTooSmall("pattern classes start at n = 2")
    return PatternClass(
        n=n,
        residue_class=_RESIDUE_NAMES[n % 4],
        shift_alternates=(n % 2 == 0),
        ascending_flips=((n // 2) % 2 == 1),
    )


def basic_strip_signs(n: int) -> list[tuple[int, int, int]]:
    """(start, descending_sign, ascending_sign) for the identity block strip.

    descending_sign at start p is (-1)**((p-1)(n-1)); the ascending sign is
    the descending one times (-1)**(n//2).
    """
    if n < 2:
        raise SizeTooSmall("basic strips start at n = 2")
    flip = (-1) ** (n // 2)
    out = []
    for p in range(1, n + 1):
        d = -1 if ((p - 1) * (n - 1)) % 2 else 1
        out.append((p, d, d * flip))
    return out
