"""Simultaneous (n, mn+1)-cores versus dominant m-minimal alcoves.

An n-core lam = w(empty) with w of minimal length in its coset w S_n is sent
to the alcove w^{-1} A_0.  Since w(0) is the n-vector of lam, w is pinned
down as the shortest element carrying the origin to that vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from .affine import (
    AffinePermutation,
    act_point,
    act_vector,
    inverse,
    min_length_in_translation_coset,
    word_for,
)
from .cores import (
    Partition,
    NotACoreError,
    box_counts,
    core_from_vector,
    is_n_core,
    n_vector,
)
from .rootsys import (
    QVector,
    RationalPoint,
    fundamental_alcove_vertices,
)
from .shi import Alcove, alcove_bfs, default_radius, is_dominant, is_m_minimal, minimal_alcoves


def phi_element(lam: Partition, n: int) -> AffinePermutation:
    """The shortest w with w(empty) = lam."""
    if not is_n_core(lam, n):
        raise NotACoreError(f"{lam} is not a {n}-core")
    return min_length_in_translation_coset(n_vector(lam, n))


def phi(lam: Partition, n: int) -> Alcove:
    return Alcove(inverse(phi_element(lam, n)))


def phi_inverse(a: Alcove) -> Partition:
    if not is_dominant(a):
        raise ValueError("phi_inverse is only defined on dominant alcoves")
    w = inverse(a.element)
    return core_from_vector(act_vector(w, (0,) * a.n))


def anderson_count(n: int, m: int) -> int:
    """Number of partitions that are both n-cores and (mn+1)-cores."""
    s, t = m * n + 1, n
    total, rem = divmod(comb(s + t, t), s + t)
    assert rem == 0
    return total


def lattice_points(n: int, m: int) -> Iterator[QVector]:
    """Q intersected with {<v, alpha_i> >= -m, <v, theta> <= m + 1}.

    Differences d_i = v_i - v_{i+1} are at least -m and sum to at most m + 1;
    v_1 is then fixed by the zero sum and must come out integral.
    """
    budget = m + 1

    def diffs(prefix: list[int], total: int) -> Iterator[list[int]]:
        left = n - 1 - len(prefix)
        if left == 0:
            yield prefix
            return
        # every later difference is at least -m
        hi = budget - total + m * (left - 1)
        for d in range(-m, hi + 1):
            yield from diffs(prefix + [d], total + d)

    for d in diffs([], 0):
        weighted = sum((n - 1 - i) * di for i, di in enumerate(d))
        if weighted % n:
            continue
        v = [weighted // n]
        for di in d:
            v.append(v[-1] - di)
        yield tuple(v)


@dataclass(frozen=True)
class CatalogEntry:
    core: Partition
    vector: QVector
    group_element: AffinePermutation
    word: tuple[int, ...]
    removable_counts: tuple[int, ...]
    narayana_k: int

    @property
    def alcove(self) -> Alcove:
        return Alcove(inverse(self.group_element))

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class RegionCatalog:
    n: int
    m: int
    entries: tuple[CatalogEntry, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def narayana(self) -> tuple[int, ...]:
        hist = [0] * self.n
        for e in self.entries:
            hist[e.narayana_k] += 1
        return tuple(hist)


def catalog_entry(lam: Partition, n: int, m: int) -> CatalogEntry:
    w = phi_element(lam, n)
    removable, _ = box_counts(lam, n)
    return CatalogEntry(
        core=lam,
        vector=act_vector(w, (0,) * n),
        group_element=w,
        word=tuple(word_for(w)),
        removable_counts=removable,
        narayana_k=sum(1 for c in removable if c == m),
    )


def enumerate_catalog(n: int, m: int) -> RegionCatalog:
    """All simultaneous (n, mn+1)-cores with their alcoves, sorted by (size, parts)."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    entries = [catalog_entry(core_from_vector(v), n, m) for v in lattice_points(n, m)]
    entries.sort(key=lambda e: e.core.sort_key())
    return RegionCatalog(n, m, tuple(entries))


def narayana_histogram(n: int, m: int) -> tuple[int, ...]:
    return enumerate_catalog(n, m).narayana()


# -- alcoves in the dilated simplex ---------------------------------------------


def in_dilated_simplex(p: RationalPoint, m: int) -> bool:
    """Closed containment in {<v, alpha_i> >= -m, <v, theta> <= m + 1}."""
    n, d, a = p.n, p.denominator, p.numerators
    if any(a[i] - a[i + 1] < -m * d for i in range(n - 1)):
        return False
    return a[0] - a[n - 1] <= (m + 1) * d


def alcove_in_dilated_simplex(a: Alcove, m: int) -> bool:
    return all(in_dilated_simplex(act_point(a.element, v), m) for v in fundamental_alcove_vertices(a.n))


@dataclass
class HaimanReport:
    n: int
    m: int
    alcoves_in_region: int = 0
    expected: int = 0
    minimal_alcoves: int = 0
    radius: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"FAILED ({len(self.failures)} problems)"
        return (
            f"n={self.n} m={self.m}: {self.alcoves_in_region} alcoves in A_m "
            f"(expected {self.expected}), {self.minimal_alcoves} m-minimal alcoves "
            f"within radius {self.radius}: {status}"
        )


def verify_haiman(n: int, m: int, radius: int | None = None, max_failures: int = 10) -> HaimanReport:
    """Check that x A_0 -> x^{-1} A_0 maps the alcoves of A_m onto the m-minimal alcoves."""
    rep = HaimanReport(n, m, expected=(m * n + 1) ** (n - 1))

    def fail(msg: str) -> None:
        if len(rep.failures) < max_failures:
            rep.failures.append(msg)

    inside = alcove_bfs(n, lambda a: alcove_in_dilated_simplex(a, m))
    inside_set = set(inside)
    rep.alcoves_in_region = len(inside)
    if len(inside) != rep.expected:
        fail(f"{len(inside)} alcoves in A_m, expected {rep.expected}")

    for a in inside:
        if not is_m_minimal(Alcove(inverse(a.element)), m):
            fail(f"{a.element} lies in A_m but its inverse alcove is not m-minimal")
        for i in range(n):
            b = a.neighbour(i)
            if b not in inside_set and is_m_minimal(Alcove(inverse(b.element)), m):
                fail(f"{b.element} lies outside A_m but its inverse alcove is m-minimal")

    # all m-minimal alcoves, found without reference to A_m
    r = radius or default_radius(n, m)
    found = minimal_alcoves(n, m, r)
    while True:
        wider = minimal_alcoves(n, m, r + 1)
        if len(wider) == len(found):
            break
        r, found = r + 1, wider
    rep.radius = r
    rep.minimal_alcoves = len(found)
    image = {Alcove(inverse(a.element)) for a in inside}
    if len(image) != len(inside):
        fail("x A_0 -> x^{-1} A_0 is not injective on A_m")
    if image != set(found):
        missing = set(found) - image
        extra = image - set(found)
        fail(f"image differs from the m-minimal alcoves: {len(missing)} missed, {len(extra)} extra")
    return rep


def dominant_check(lam: Partition, n: int, m: int) -> list[str]:
    """Problems with a single catalog member (empty list when consistent)."""
    problems = []
    a = phi(lam, n)
    if not is_dominant(a):
        problems.append(f"phi({lam}) is not dominant")
    if not is_m_minimal(a, m):
        problems.append(f"phi({lam}) is not {m}-minimal")
    if phi_inverse(a) != lam:
        problems.append(f"phi_inverse(phi({lam})) = {phi_inverse(a)}")
    return problems
