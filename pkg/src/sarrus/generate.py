"""Search for valid column-strip schemes for arbitrary n.

The unit of coverage is a necklace class: all cyclic shifts of a word together
with all cyclic shifts of its reversal. One block covers exactly one class, so
a scheme is a choice of one head per class, ordered so consecutive blocks
share a column. For n >= 3 every class has full size 2n and contains exactly
two heads beginning with any given value (one from the shift family, one from
the reversed family), so the chain can always be extended; the backtracking
below is kept for clarity and for the degenerate cases, not because it is
expected to unwind.

Strip grouping follows the class parity structure: for n ≡ 1 (mod 4) classes
are parity-pure and split into an even strip and an odd strip; for even n and
for n ≡ 3 (mod 4) (where reversal flips parity and every class mixes both)
a single strip covers everything.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .errors import NotFound, SizeLimitExceeded, SizeTooSmall, VerificationFailed
from .matrix import Matrix
from .oracle import bareiss_det
from .perm import Permutation, cyclic_shift, parity, reverse
from .scheme import Block, Scheme, ValidationReport, evaluate, stitch_blocks, validate

_CLASS_LIMIT = 8


@dataclass(frozen=True, slots=True)
class NecklaceClass:
    """A dihedral orbit: shifts of the representative plus shifts of its reversal.

    ``parity_profile`` describes the descending-window signs of a block built
    from the representative: blocks alternate sign start to start when n is
    even ("alternating"), and keep one sign when n is odd ("uniform(+)" or
    "uniform(-)"). For n ≡ 3 (mod 4) the reversed family inside the same class
    carries the opposite uniform sign, per the reversal law.
    """

    representative: Permutation
    members: tuple[Permutation, ...]
    size: int
    parity_profile: str


@dataclass(frozen=True, slots=True)
class SearchConfig:
    n: int
    max_blocks_per_strip: int | None = None
    time_limit: float = 60.0
    random_seed: int = 0
    require_full_size_classes: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise SizeTooSmall("search needs n >= 2")
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.max_blocks_per_strip is not None and self.max_blocks_per_strip < 1:
            raise ValueError("max_blocks_per_strip must be positive")


def _orbit(p: Permutation) -> set[Permutation]:
    out = set()
    for k in range(p.n):
        s = cyclic_shift(p, k)
        out.add(s)
        out.add(reverse(s))
    return out


def necklace_classes(n: int) -> list[NecklaceClass]:
    """Partition S_n into necklace classes, listed by lexicographically
    minimal representative."""
    if n < 2:
        raise SizeTooSmall("necklace classes need n >= 2")
    if n > _CLASS_LIMIT:
        raise SizeLimitExceeded(
            f"necklace_classes enumerates S_n; n = {n} exceeds the limit of {_CLASS_LIMIT}"
        )
    import itertools

    seen: set[tuple[int, ...]] = set()
    classes: list[NecklaceClass] = []
    for word in itertools.permutations(range(1, n + 1)):
        if word in seen:
            continue
        rep = Permutation(word)
        members = _orbit(rep)
        seen.update(m.images for m in members)
        if n % 2 == 0:
            profile = "alternating"
        else:
            profile = "uniform(+)" if parity(rep) == 1 else "uniform(-)"
        classes.append(
            NecklaceClass(
                representative=rep,
                members=tuple(sorted(members, key=lambda m: m.images)),
                size=len(members),
                parity_profile=profile,
            )
        )
    return classes


def _strip_groups(n: int, classes: list[NecklaceClass]) -> list[list[NecklaceClass]]:
    if n % 4 == 1:
        evens = [c for c in classes if c.parity_profile == "uniform(+)"]
        odds = [c for c in classes if c.parity_profile == "uniform(-)"]
        return [evens, odds]
    return [classes]


def _chain_group(
    group: list[NecklaceClass],
    rng: random.Random,
    deadline: float,
    max_blocks: int | None,
) -> list[list[Permutation]]:
    """Order the group's classes into chains of heads; each chain becomes one strip.

    Iterative depth-first search with an explicit stack (n = 8 has 2520
    classes, far past the interpreter's recursion limit). Each stack frame is
    the list of (class, head, closes_chain) choices open at that depth.
    """
    n = group[0].representative.n
    class_order = list(group)
    rng.shuffle(class_order)
    head_orders: list[list[Permutation]] = []
    by_first: list[dict[int, list[Permutation]]] = []
    for cls in class_order:
        members = list(cls.members)
        rng.shuffle(members)
        head_orders.append(members)
        index: dict[int, list[Permutation]] = {}
        for h in members:
            index.setdefault(h.images[0], []).append(h)
        by_first.append(index)

    k = len(class_order)
    used = [False] * k
    chain: list[Permutation] = []
    chains: list[list[Permutation]] = []

    def options() -> list[tuple[int, Permutation, bool]]:
        closes = bool(chain) and max_blocks is not None and len(chain) == max_blocks
        need = None if (not chain or closes) else chain[-1].images[n - 2]
        out = []
        for ci in range(k):
            if used[ci]:
                continue
            heads = head_orders[ci] if need is None else by_first[ci].get(need, [])
            out.extend((ci, h, closes) for h in heads)
        return out

    def undo(ci: int, closed: bool) -> None:
        used[ci] = False
        chain.pop()
        if closed:
            chain[:0] = chains.pop()

    stack: list[tuple[list[tuple[int, Permutation, bool]], int]] = [(options(), 0)]
    placed = 0
    while stack:
        if time.monotonic() > deadline:
            raise NotFound("time limit reached before a scheme was found")
        cands, idx = stack[-1]
        if idx > 0:
            ci, _, closed = cands[idx - 1]
            undo(ci, closed)
        if idx >= len(cands):
            stack.pop()
            continue
        stack[-1] = (cands, idx + 1)
        ci, head, closes = cands[idx]
        used[ci] = True
        if closes:
            chains.append(list(chain))
            chain.clear()
        chain.append(head)
        placed = sum(used)
        if placed == k:
            chains.append(list(chain))
            return chains
        stack.append((options(), 0))

    raise NotFound("search space exhausted without a complete chain")


def search_scheme(cfg: SearchConfig) -> Scheme:
    """Find a scheme covering S_n, deterministic for a fixed random_seed.

    Raises NotFound when undersized (self-symmetric) classes block the
    construction, when time runs out, or when the search space is exhausted.
    """
    classes = necklace_classes(cfg.n)
    full = 2 * cfg.n
    undersized = [c for c in classes if c.size < full]
    if undersized and cfg.require_full_size_classes:
        reps = ", ".join(str(list(c.representative.images)) for c in undersized)
        raise NotFound(
            f"n = {cfg.n} has self-symmetric classes of size < {full} ({reps}); "
            "blocks built from them would duplicate windows"
        )

    rng = random.Random(cfg.random_seed)
    deadline = time.monotonic() + cfg.time_limit
    strips = []
    for group in _strip_groups(cfg.n, classes):
        if not group:
            continue
        for chain in _chain_group(group, rng, deadline, cfg.max_blocks_per_strip):
            strips.append(stitch_blocks([Block(h) for h in chain]))
    scheme = Scheme(n=cfg.n, strips=tuple(strips))

    report = validate(scheme)
    if not report.is_valid:
        raise NotFound("search produced a defective scheme:\n" + report.summary())
    return scheme


@dataclass(frozen=True, slots=True)
class VerificationReport:
    n: int
    validation: ValidationReport
    samples_checked: int


def verify_generated(sch: Scheme, sample_count: int, *, seed: int = 0) -> VerificationReport:
    """Validate a scheme and compare it against an independent oracle on
    random integer matrices.

    Raises VerificationFailed with the first counterexample. Passing samples
    alone (e.g. only well-behaved matrices) is necessary but not sufficient;
    the structural validation is what certifies completeness.
    """
    report = validate(sch)
    if not report.is_valid:
        raise VerificationFailed("scheme failed validation:\n" + report.summary())
    rng = random.Random(seed)
    for i in range(sample_count):
        M = Matrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(sch.n)] for _ in range(sch.n)]
        )
        got = evaluate(sch, M)
        want = bareiss_det(M)
        if got != want:
            raise VerificationFailed(
                f"sample {i}: scheme evaluated to {got} but the oracle says {want} "
                f"for {M!r}"
            )
    return VerificationReport(n=sch.n, validation=report, samples_checked=sample_count)
