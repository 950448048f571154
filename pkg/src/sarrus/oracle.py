"""Scheme-free determinant computations used as ground truth.

Three independent routes: the permutation-expansion definition, recursive
first-row cofactor expansion, and fraction-free elimination. They share no
code with the scheme path: permutation signs here come from
inversion counting, not from the cycle decomposition the rest of the library
uses, so agreement between routes is meaningful.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .counting import OpCounter
from .errors import SizeLimitExceeded
from .matrix import Matrix, Scalar

# 10! terms is desk scale; 11! is not.
_FACTORIAL_LIMIT = 10


def _sign_by_inversions(word: tuple[int, ...]) -> int:
    inv = 0
    for i in range(len(word)):
        wi = word[i]
        for j in range(i + 1, len(word)):
            if wi > word[j]:
                inv += 1
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def _signed_perms(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # 0-based words; cached only where the table stays small.
    return tuple(
        (p, _sign_by_inversions(p)) for p in itertools.permutations(range(n))
    )


def _iter_signed_perms(n: int):
    if n <= 8:
        return _signed_perms(n)
    return ((p, _sign_by_inversions(p)) for p in itertools.permutations(range(n)))


def _guard(n: int, what: str) -> None:
    if n > _FACTORIAL_LIMIT:
        raise SizeLimitExceeded(
            f"{what} expands n! terms; n = {n} exceeds the limit of {_FACTORIAL_LIMIT}"
        )


def leibniz_det(M: Matrix, *, ops: OpCounter | None = None) -> Scalar:
    """The n!-term permutation expansion, exact."""
    _guard(M.n, "leibniz_det")
    n = M.n
    rows = M.rows
    total: Scalar = 0
    for word, sign in _iter_signed_perms(n):
        prod: Scalar = 1
        for r in range(n):
            prod *= rows[r][word[r]]
        if ops is not None:
            ops.term(n)
            ops.add(1)
        total += sign * prod
    if ops is not None:
        ops.add(-1)
    return total


def parity_partition_sums(M: Matrix, *, ops: OpCounter | None = None) -> tuple[Scalar, Scalar]:
    """(S_plus, S_minus): product sums over even and odd permutations.

    S_plus - S_minus = det(M); for n = 5 each side collects 60 of the 120
    products.
    """
    _guard(M.n, "parity_partition_sums")
    n = M.n
    rows = M.rows
    s_plus: Scalar = 0
    s_minus: Scalar = 0
    for word, sign in _iter_signed_perms(n):
        prod: Scalar = 1
        for r in range(n):
            prod *= rows[r][word[r]]
        if ops is not None:
            ops.term(n)
            ops.add(1)
        if sign == 1:
            s_plus += prod
        else:
            s_minus += prod
    if ops is not None:
        ops.add(-2)
    return s_plus, s_minus


def cofactor_det(M: Matrix, *, ops: OpCounter | None = None) -> Scalar:
    """Recursive expansion by minors along the first row, exact."""
    return _cofactor(M.rows, ops)


def _cofactor(rows: tuple[tuple[Scalar, ...], ...], ops: OpCounter | None) -> Scalar:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total: Scalar = 0
    rest = rows[1:]
    for j in range(n):
        entry = rows[0][j]
        minor = tuple(row[:j] + row[j + 1 :] for row in rest)
        sub = _cofactor(minor, ops)
        if ops is not None:
            ops.mul(1)
            if j > 0:
                ops.add(1)
        term = entry * sub
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_det(M: Matrix, *, ops: OpCounter | None = None) -> Scalar:
    """Fraction-free elimination: O(n^3) exact determinant.

    Rational entries are cleared row by row (row i times the lcm d_i of its
    denominators), the integer determinant is computed, and the result is
    divided by the product of the d_i. Every intermediate division in the
    elimination itself is exact by construction.
    """
    n = M.n
    rows = [list(r) for r in M.rows]
    clearing = 1
    for i, row in enumerate(rows):
        d = math.lcm(*(x.denominator if isinstance(x, Fraction) else 1 for x in row))
        if d != 1:
            rows[i] = [int(x * d) for x in row]
            clearing *= d
        else:
            rows[i] = [int(x) for x in row]

    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rik * rows[k][j]) // prev
                if ops is not None:
                    ops.mul(2)
                    ops.add(1)
                    ops.div(1)
            rows[i][k] = 0
        prev = pivot
    det = sign * rows[n - 1][n - 1]
    if clearing == 1:
        return det
    result = Fraction(det, clearing)
    return int(result) if result.denominator == 1 else result
