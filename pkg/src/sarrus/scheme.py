"""Column-strip schemes: the data model, window extraction, validation, evaluation.

A *strip* is a row of column indices with designated start positions. Each
start yields two length-n windows: the descending diagonal (read with rows
1..n) and the ascending diagonal (rows n..1, i.e. the reversed word). A
*scheme* is a list of strips; it is complete when the windows, taken over all
starts of all strips, hit every permutation of {1..n} exactly once. Signs are
never stored: each window contributes with the sign of its permutation, which
is what makes a complete scheme compute the determinant.

Everything here is an immutable value and every function is pure, so
evaluation and validation are safe to run concurrently; exact arithmetic
makes summation order irrelevant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .counting import OpCounter
from .errors import ChainMismatch, InvalidScheme, InvalidWindow, SizeMismatch
from .matrix import Matrix, Scalar
from .perm import Permutation, parity, reverse


@dataclass(frozen=True, slots=True)
class Block:
    """A head permutation; expands to a strip covering all its cyclic shifts
    and their reversals."""

    head: Permutation


@dataclass(frozen=True, slots=True)
class SchemeStrip:
    """A column sequence with start positions.

    The constructor checks ranges only (columns in 1..n, starts within
    bounds). Whether each window actually forms a permutation is diagnosed by
    ``validate`` and enforced by ``windows``; a mis-edited strip must remain
    representable so the validator can report on it.
    """

    n: int
    columns: tuple[int, ...]
    starts: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("strip needs n >= 1")
        if len(self.columns) < self.n:
            raise ValueError("strip shorter than one window")
        bad = [c for c in self.columns if not 1 <= c <= self.n]
        if bad:
            raise ValueError(f"column indices outside 1..{self.n}: {bad}")
        limit = len(self.columns) - self.n + 1
        for p in self.starts:
            if not 1 <= p <= limit:
                raise ValueError(f"start {p} outside 1..{limit}")

    def window_at(self, p: int) -> tuple[int, ...]:
        """The n column indices beginning at start p (1-based); no bijection check."""
        return self.columns[p - 1 : p - 1 + self.n]


@dataclass(frozen=True, slots=True)
class Scheme:
    """One or more strips meant to jointly cover S_n exactly once."""

    n: int
    strips: tuple[SchemeStrip, ...]

    def __post_init__(self):
        if not self.strips:
            raise ValueError("scheme needs at least one strip")
        for s in self.strips:
            if s.n != self.n:
                raise SizeMismatch(f"strip of size {s.n} in scheme of size {self.n}")


class Window(NamedTuple):
    start: int
    descending: Permutation
    ascending: Permutation


class WindowRef(NamedTuple):
    """Locates one diagonal: strip and start are 1-based; direction is
    'descending', 'ascending', or 'both' for a self-reverse window."""

    strip: int
    start: int
    direction: str


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """Coverage diagnostics for a scheme.

    ``window_count`` is 2 x (total starts). ``covered``, ``even_count`` and
    ``odd_count`` count *distinct* permutations hit; a self-reverse window
    (possible only at n = 1) covers one permutation, not two. Listings are in
    lexicographic order of the permutation word.
    """

    n: int
    window_count: int
    covered: int
    duplicates: tuple[tuple[Permutation, tuple[WindowRef, ...]], ...]
    missing: tuple[Permutation, ...]
    invalid_windows: tuple[tuple[int, int], ...]
    even_count: int
    odd_count: int

    @property
    def is_valid(self) -> bool:
        import math

        return (
            not self.duplicates
            and not self.missing
            and not self.invalid_windows
            and self.covered == math.factorial(self.n)
        )

    def summary(self) -> str:
        import math

        lines = [
            f"n = {self.n}",
            f"windows:    {self.window_count}",
            f"covered:    {self.covered} of {math.factorial(self.n)}",
            f"even / odd: {self.even_count} / {self.odd_count}",
        ]
        if self.invalid_windows:
            spots = ", ".join(f"strip {s} start {p}" for s, p in self.invalid_windows)
            lines.append(f"invalid windows: {spots}")
        if self.duplicates:
            for perm, refs in self.duplicates:
                spots = ", ".join(f"strip {r.strip} start {r.start} {r.direction}" for r in refs)
                lines.append(f"duplicate {list(perm.images)}: {spots}")
        if self.missing:
            shown = ", ".join(str(list(p.images)) for p in self.missing[:10])
            more = "" if len(self.missing) <= 10 else f" (+{len(self.missing) - 10} more)"
            lines.append(f"missing: {shown}{more}")
        lines.append("VALID" if self.is_valid else "INVALID")
        return "\n".join(lines)


def expand_block(b: Block) -> SchemeStrip:
    """Lay out a block: the head's columns followed by its first n-1 columns
    again, with a start at every one of the first n positions."""
    head = b.head.images
    n = len(head)
    return SchemeStrip(n=n, columns=head + head[: n - 1], starts=tuple(range(1, n + 1)))


def stitch_blocks(blocks: Sequence[Block]) -> SchemeStrip:
    """Chain blocks into one strip, merging the shared column at each junction.

    Each expanded block ends with its head's (n-1)-th column, which must equal
    the next head's first column; k blocks therefore stitch into
    k*(2n-1) - (k-1) columns. Raises ChainMismatch with the 0-based junction
    index when two consecutive blocks do not share that column.
    """
    if not blocks:
        raise ValueError("nothing to stitch")
    n = blocks[0].head.n
    for b in blocks[1:]:
        if b.head.n != n:
            raise SizeMismatch("blocks of different sizes")
    columns: list[int] = []
    starts: list[int] = []
    offset = 0
    for i, b in enumerate(blocks):
        strip = expand_block(b)
        if i == 0:
            columns.extend(strip.columns)
        else:
            if columns[-1] != strip.columns[0]:
                raise ChainMismatch(
                    i - 1,
                    f"junction {i - 1}: strip ends in column {columns[-1]} "
                    f"but next block starts with {strip.columns[0]}",
                )
            columns.extend(strip.columns[1:])
        starts.extend(offset + p for p in strip.starts)
        offset += 2 * n - 2
    return SchemeStrip(n=n, columns=tuple(columns), starts=tuple(starts))


def windows(s: SchemeStrip) -> list[Window]:
    """Both diagonals at every start; raises InvalidWindow if a window repeats
    a column index."""
    out = []
    for p in s.starts:
        w = s.window_at(p)
        if len(set(w)) != s.n:
            raise InvalidWindow(p)
        desc = Permutation(w)
        out.append(Window(p, desc, reverse(desc)))
    return out


def validate(sch: Scheme) -> ValidationReport:
    """Check a scheme against S_n. Never raises: defects are reported.

    Cost is O(total windows + n!) since the missing list requires a sweep of
    all of S_n.
    """
    import math

    occurrences: dict[tuple[int, ...], list[WindowRef]] = {}
    invalid: list[tuple[int, int]] = []
    window_count = 0
    for si, strip in enumerate(sch.strips, start=1):
        for p in strip.starts:
            w = strip.window_at(p)
            window_count += 2
            if len(set(w)) != sch.n:
                invalid.append((si, p))
                continue
            back = w[::-1]
            if w == back:
                occurrences.setdefault(w, []).append(WindowRef(si, p, "both"))
            else:
                occurrences.setdefault(w, []).append(WindowRef(si, p, "descending"))
                occurrences.setdefault(back, []).append(WindowRef(si, p, "ascending"))

    duplicates = tuple(
        (Permutation(w), tuple(refs))
        for w, refs in sorted(occurrences.items())
        if len(refs) > 1
    )
    missing = tuple(
        Permutation(w)
        for w in itertools.permutations(range(1, sch.n + 1))
        if w not in occurrences
    )
    even = sum(1 for w in occurrences if parity(Permutation(w)) == 1)
    return ValidationReport(
        n=sch.n,
        window_count=window_count,
        covered=len(occurrences),
        duplicates=duplicates,
        missing=missing,
        invalid_windows=tuple(invalid),
        even_count=even,
        odd_count=len(occurrences) - even,
    )


@lru_cache(maxsize=128)
def _validated(sch: Scheme) -> ValidationReport:
    # Schemes are immutable, so reports can be memoized for the evaluate path.
    return validate(sch)


@lru_cache(maxsize=128)
def _window_table(sch: Scheme) -> tuple[tuple[tuple[int, ...], int, int, bool], ...]:
    """(window word, descending sign, ascending sign, self_reverse) per start."""
    table = []
    for strip in sch.strips:
        for p in strip.starts:
            w = strip.window_at(p)
            d = parity(Permutation(w))
            back = w[::-1]
            if w == back:
                table.append((w, d, d, True))
            else:
                table.append((w, d, parity(Permutation(back)), False))
    return tuple(table)


def _signed_sums(sch: Scheme, M: Matrix, ops: OpCounter | None) -> tuple[Scalar, Scalar]:
    n = sch.n
    rows = M.rows
    s_plus: Scalar = 0
    s_minus: Scalar = 0
    for w, dsign, asign, self_reverse in _window_table(sch):
        dprod: Scalar = 1
        aprod: Scalar = 1
        for r in range(n):
            c = w[r] - 1
            dprod *= rows[r][c]
            aprod *= rows[n - 1 - r][c]
        if ops is not None:
            ops.term(n)
            ops.add(1)
        if dsign == 1:
            s_plus += dprod
        else:
            s_minus += dprod
        if self_reverse:
            continue
        if ops is not None:
            ops.term(n)
            ops.add(1)
        if asign == 1:
            s_plus += aprod
        else:
            s_minus += aprod
    if ops is not None:
        ops.add(-2)  # first term landing in each running sum is not an addition
    return s_plus, s_minus


def _checked(sch: Scheme, M: Matrix) -> None:
    if M.n != sch.n:
        raise SizeMismatch(f"matrix is {M.n}x{M.n} but scheme expects n = {sch.n}")
    report = _validated(sch)
    if not report.is_valid:
        raise InvalidScheme("scheme failed validation:\n" + report.summary())


def evaluate(sch: Scheme, M: Matrix, *, ops: OpCounter | None = None) -> Scalar:
    """det(M) as the signed sum over every window's diagonal product.

    Exact: entries are ints/Fractions and so is the result. The optional
    ``ops`` counter tallies terms, multiplications (both conventions) and
    additions on the real code path.
    """
    _checked(sch, M)
    s_plus, s_minus = _signed_sums(sch, M, ops)
    if ops is not None:
        ops.add(1)
    return s_plus - s_minus


def positive_negative_sums(
    sch: Scheme, M: Matrix, *, ops: OpCounter | None = None
) -> tuple[Scalar, Scalar]:
    """The even-window and odd-window product sums; det = S_plus - S_minus."""
    _checked(sch, M)
    return _signed_sums(sch, M, ops)


def evaluate_float(sch: Scheme, rows: Sequence[Sequence[float]]) -> float:
    """Convenience float evaluation of a valid scheme.

    No exactness guarantee: float products and sums round, so this is for
    quick numeric use only; the exact path is ``evaluate``.
    """
    n = sch.n
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SizeMismatch(f"need a {n}x{n} array of numbers")
    report = _validated(sch)
    if not report.is_valid:
        raise InvalidScheme("scheme failed validation:\n" + report.summary())
    total = 0.0
    for strip in sch.strips:
        cols = strip.columns
        for p in strip.starts:
            w = cols[p - 1 : p - 1 + n]
            dprod = aprod = 1.0
            for r in range(n):
                c = w[r] - 1
                dprod *= rows[r][c]
                aprod *= rows[n - 1 - r][c]
            terms = ((w, dprod),) if w == w[::-1] else ((w, dprod), (w[::-1], aprod))
            for word, prod in terms:
                total += parity(Permutation(word)) * prod
    return total
