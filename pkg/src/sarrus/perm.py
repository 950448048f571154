"""Permutations on {1..n} and the structural operations diagonal schemes are built from.

A permutation is stored in word form: ``images[i]`` (0-based storage, 1-based
values) is the image of position ``i + 1``. All indices and values are 1-based
at the API surface, matching the usual column labels 1..n; nothing in this
module ever sees a 0-based value.

Permutations are immutable values; every operation returns a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .errors import IndexOutOfRange, SizeMismatch

# +1 for even permutations, -1 for odd ones.
Sign = Literal[1, -1]


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection on {1..n} in word form.

    >>> Permutation((2, 3, 1)).images
    (2, 3, 1)
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise ValueError("permutation needs n >= 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {self.images}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image of position i (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"position {i} outside 1..{self.n}")
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.images})"


def parity(p: Permutation) -> Sign:
    """+1 if p is even, -1 if odd, via cycle decomposition.

    A cycle of length L contributes L-1 transpositions, so the sign is
    (-1)**(n - number_of_cycles).

    >>> parity(Permutation((1, 2, 3, 4, 5)))
    1
    >>> parity(Permutation((1, 2, 4, 3, 5)))
    -1
    """
    images = p.images
    n = len(images)
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if seen[i]:
            continue
        cycles += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
    return 1 if (n - cycles) % 2 == 0 else -1


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q): apply q first, then p; images[i] = p(q(i))."""
    if p.n != q.n:
        raise SizeMismatch(f"cannot compose sizes {p.n} and {q.n}")
    return Permutation(tuple(p.images[v - 1] for v in q.images))


def reverse(p: Permutation) -> Permutation:
    """The word read backwards: the ascending diagonal of p's descending one.

    Reversal multiplies the sign by (-1)**(n // 2).
    """
    return Permutation(tuple(reversed(p.images)))


def cyclic_shift(p: Permutation, k: int) -> Permutation:
    """Rotate the word left by k (mod n); shift by 1 multiplies the sign by (-1)**(n-1)."""
    n = p.n
    k %= n
    return Permutation(p.images[k:] + p.images[:k])


def relabel_values(p: Permutation, a: int, b: int) -> Permutation:
    """Swap the values a and b wherever they occur: left multiplication by (a b)."""
    n = p.n
    if not (1 <= a <= n and 1 <= b <= n):
        raise IndexOutOfRange(f"values {a}, {b} must lie in 1..{n}")
    if a == b:
        return p
    swap = {a: b, b: a}
    return Permutation(tuple(swap.get(v, v) for v in p.images))
