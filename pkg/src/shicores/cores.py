"""Partitions, hooks, residues, abacus diagrams and n-cores.

A partition is encoded on the abacus by its beta-set: beads at the
first-column hook lengths together with every negative integer.  Entry
r*n + k sits on runner k at level r (floor division for negatives).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from .rootsys import QVector, int_pairing, highest_root, qvector, simple_root

ResidueCounts = tuple[int, ...]

_PARTITION_TEXT = re.compile(r"\d+(,\d+)*")


class NotACoreError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """(row, column), both 1-based."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def sort_key(self):
        return (self.size, self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts)) if self.parts else "-"


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse ``5,2,1`` or ``-`` (the empty partition)."""
    text = text.strip()
    if text == "-":
        return EMPTY
    if not _PARTITION_TEXT.fullmatch(text):
        raise ValueError(f"malformed partition {text!r}")
    return Partition(tuple(int(p) for p in text.split(",")))


def hook_length(lam: Partition, i: int, j: int) -> int:
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"box ({i},{j}) is not in {lam}")
    leg = sum(1 for p in lam.parts[i:] if p >= j)
    return lam[i - 1] - j + leg + 1


def first_column_hooks(lam: Partition) -> tuple[int, ...]:
    r = len(lam)
    return tuple(p + r - k for k, p in enumerate(lam.parts, start=1))


def is_t_core_hooks(lam: Partition, t: int) -> bool:
    """Ground truth: no hook length of any box is divisible by t."""
    if t < 1:
        raise ValueError("t must be positive")
    conj = lam.conjugate().parts
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            if (p - j + conj[j - 1] - i + 1) % t == 0:
                return False
    return True


def residue(i: int, j: int, n: int) -> int:
    return (j - i) % n


def residue_counts(lam: Partition, n: int) -> ResidueCounts:
    counts = [0] * n
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            counts[(j - i) % n] += 1
    return tuple(counts)


def removable_boxes(lam: Partition) -> list[tuple[int, int]]:
    parts = lam.parts + (0,)
    return [(i, parts[i - 1]) for i in range(1, len(lam) + 1) if parts[i - 1] > parts[i]]


def addable_boxes(lam: Partition) -> list[tuple[int, int]]:
    parts = lam.parts
    out = []
    for i in range(1, len(parts) + 2):
        here = parts[i - 1] if i <= len(parts) else 0
        if i == 1 or parts[i - 2] > here:
            out.append((i, here + 1))
    return out


def box_counts(lam: Partition, n: int) -> tuple[ResidueCounts, ResidueCounts]:
    """Per-residue counts of (removable, addable) boxes."""
    rem = Counter((j - i) % n for i, j in removable_boxes(lam))
    add = Counter((j - i) % n for i, j in addable_boxes(lam))
    return tuple(rem[r] for r in range(n)), tuple(add[r] for r in range(n))


# -- beta-sets and the abacus ------------------------------------------------


def beta_set(lam: Partition) -> frozenset[int]:
    """Finite beads (first-column hooks); all negative integers are implicit."""
    return frozenset(first_column_hooks(lam))


def is_flush(beads: Iterable[int], n: int) -> bool:
    """Every bead b has a bead at b - n (negative entries are beads)."""
    bs = set(beads)
    return all(b - n < 0 or (b - n) in bs for b in bs)


def is_n_core(lam: Partition, n: int) -> bool:
    """Abacus test; agrees with :func:`is_t_core_hooks` (property-tested)."""
    return is_flush(beta_set(lam), n)


def _require_core(lam: Partition, n: int) -> None:
    if not is_n_core(lam, n):
        raise NotACoreError(f"{lam} is not a {n}-core")


@dataclass(frozen=True)
class Abacus:
    """A flush abacus, recorded by the top bead level on each runner."""

    n: int
    bead_top_levels: tuple[int, ...]

    @property
    def balance_number(self) -> int:
        return sum(self.bead_top_levels)

    def beads(self, lowest_level: int) -> set[int]:
        return {
            r * self.n + k
            for k, top in enumerate(self.bead_top_levels)
            for r in range(lowest_level, top + 1)
        }

    def render(self, above: int = 1) -> str:
        """Text picture, one row per level, most negative on top; beads in parentheses."""
        lo = min(self.bead_top_levels) - above
        hi = max(self.bead_top_levels) + above
        width = max(len(str(lo * self.n)), len(str(hi * self.n + self.n - 1))) + 1
        rows = []
        for r in range(lo, hi + 1):
            cells = []
            for k, top in enumerate(self.bead_top_levels):
                entry = str(r * self.n + k)
                cells.append(("(" + entry + ")" if r <= top else " " + entry + " ").rjust(width + 2))
            rows.append(f"{r:>4} |" + "".join(cells))
        return "\n".join(rows)


def _top_levels(finite_beads: Iterable[int], n: int, floor: int = 0) -> list[int]:
    """Top bead level per runner for ``finite_beads`` plus every integer below ``floor``."""
    tops = []
    for k in range(n):
        tail = floor - 1 - ((floor - 1 - k) % n)
        tops.append(tail // n)
    for b in finite_beads:
        if b // n > tops[b % n]:
            tops[b % n] = b // n
    return tops


def abacus(lam: Partition, n: int) -> Abacus:
    """The balanced abacus of an n-core."""
    _require_core(lam, n)
    beads = beta_set(lam)
    # shifting every bead by +1 raises the balance number by exactly 1
    c = -sum(_top_levels(beads, n))
    ab = Abacus(n, tuple(_top_levels((b + c for b in beads), n, floor=c)))
    assert ab.balance_number == 0
    return ab


def n_vector(lam: Partition, n: int) -> QVector:
    return abacus(lam, n).bead_top_levels


def partition_from_beads(beads: Iterable[int]) -> Partition:
    """Partition of a bead set that contains every integer below its least gap.

    ``beads`` lists the beads at or above some point below which everything is
    a bead; the least gap g is found and the set is shifted so g becomes 0.
    """
    bs = set(beads)
    g = min(bs) if bs else 0
    while g in bs:
        g += 1
    above = sorted((b - g for b in bs if b > g), reverse=True)
    r = len(above)
    return Partition(tuple(b - (r - k) for k, b in enumerate(above, start=1)))


def core_from_vector(v: Sequence[int]) -> Partition:
    v = qvector(v)
    n = len(v)
    low = min(v) - 1
    beads = {r * n + k for k, top in enumerate(v) for r in range(low, top + 1)}
    return partition_from_beads(beads)


def apply_generator_core(lam: Partition, i: int, n: int) -> Partition:
    """s_i on an n-core: add all addable i-boxes, else remove all removable ones."""
    if not 0 <= i < n:
        raise ValueError(f"residue {i} out of range for n={n}")
    _require_core(lam, n)
    parts = list(lam.parts)
    adds = [row for row, col in addable_boxes(lam) if (col - row) % n == i]
    if adds:
        for row in adds:
            if row > len(parts):
                parts.append(0)
            parts[row - 1] += 1
        return Partition(tuple(parts))
    rems = [row for row, col in removable_boxes(lam) if (col - row) % n == i]
    for row in rems:
        parts[row - 1] -= 1
    return Partition(tuple(p for p in parts if p))


def apply_word_core(word: Sequence[int], lam: Partition, n: int) -> Partition:
    """s_{a1} ... s_{ak} lam: the rightmost letter acts first."""
    for i in reversed(word):
        lam = apply_generator_core(lam, i, n)
    return lam


# -- simultaneous cores --------------------------------------------------------


def anderson_is_t_core(lam: Partition, n: int, t: int) -> bool:
    """Anderson's grid test for an n-core to also be a t-core.

    Grid point (x, y), 0 <= x < n, y >= 0, carries the label M - x*t - y*n
    with M = nt - n - t.  Circled points are the beads of the standard
    abacus (first-column hooks and every negative integer).  Going one step
    up a column lowers the label by n, one step right lowers it by t.
    """
    if gcd(n, t) != 1:
        raise ValueError(f"gcd({n}, {t}) != 1")
    _require_core(lam, n)
    M = n * t - n - t
    hooks = set(first_column_hooks(lam))

    def circled(label: int) -> bool:
        return label < 0 or label in hooks

    for h in hooks:
        if h > M:
            return False
        x = next(x for x in range(n) if (M - h - x * t) % n == 0)
        if M - h - x * t < 0:  # not on the grid
            return False
        if not circled(h - n):
            return False
        if x <= n - 2 and not circled(h - t):
            return False
    return True


def satisfies_mn1_inequalities(v: Sequence[int], m: int) -> bool:
    """<v, alpha_i> >= -m for 0 < i < n and <v, theta> <= m + 1."""
    n = len(v)
    return all(int_pairing(v, simple_root(i, n)) >= -m for i in range(1, n)) and int_pairing(
        v, highest_root(n)
    ) <= m + 1


def enumerate_cores(n: int, max_size: int) -> list[Partition]:
    """All n-cores with at most ``max_size`` boxes (BFS over the generator action)."""
    seen = {EMPTY}
    frontier = [EMPTY]
    while frontier:
        nxt = []
        for lam in frontier:
            for i in range(n):
                mu = apply_generator_core(lam, i, n)
                if mu.size <= max_size and mu not in seen:
                    seen.add(mu)
                    nxt.append(mu)
        frontier = nxt
    return sorted(seen, key=Partition.sort_key)


def partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest
