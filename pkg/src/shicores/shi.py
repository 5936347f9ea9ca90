"""Alcoves, the m-Shi arrangement and a brute-force region oracle.

Alcoves are open, so they never meet an integral hyperplane H_{alpha,k};
every half-space question is settled at one exact interior point, the image
of rho/n under the alcove's group element.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable

from .affine import (
    AffinePermutation,
    act_affine_root,
    act_point,
    act_vector,
    compose,
    generator,
    inverse,
    length,
    simple_affine_root,
)
from .rootsys import (
    FiniteRoot,
    Hyperplane,
    RationalPoint,
    Side,
    compare_level,
    highest_root,
    int_pairing,
    positive_roots,
    rho_point,
    side_of,
    simple_root,
)


class RadiusTooSmallError(RuntimeError):
    """The truncated search did not stabilise; rerun with a larger radius."""


class OracleError(AssertionError):
    """A brute-force oracle found data contradicting a structural fact."""


@dataclass(frozen=True)
class Alcove:
    """The open simplex element * A_0."""

    element: AffinePermutation

    @property
    def n(self) -> int:
        return self.element.n

    @classmethod
    def fundamental(cls, n: int) -> Alcove:
        return cls(AffinePermutation.identity(n))

    @cached_property
    def sample_point(self) -> RationalPoint:
        return act_point(self.element, rho_point(self.n))

    def neighbour(self, i: int) -> Alcove:
        """The alcove across the wall labelled i (right multiplication by s_i)."""
        return Alcove(compose(self.element, generator(i, self.n)))

    def side_of_level(self, root: FiniteRoot, k: int) -> Side:
        """Side of the whole alcove relative to {<v, root> = k}."""
        return compare_level(self.sample_point, root, k)

    def sort_key(self):
        return (length(self.element), self.sample_point.coords())


def shi_hyperplanes(n: int, m: int) -> list[Hyperplane]:
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    return [Hyperplane(a, k) for a in positive_roots(n) for k in range(-m + 1, m + 1)]


@dataclass(frozen=True)
class SignVector:
    hyperplanes: tuple[Hyperplane, ...]
    signs: tuple[Side, ...]

    def __getitem__(self, h: Hyperplane) -> Side:
        return self.signs[self.hyperplanes.index(h)]

    def items(self):
        return zip(self.hyperplanes, self.signs)

    def differences(self, other: SignVector) -> list[Hyperplane]:
        return [h for h, a, b in zip(self.hyperplanes, self.signs, other.signs) if a != b]


def sign_vector(a: Alcove, m: int) -> SignVector:
    hyps = tuple(shi_hyperplanes(a.n, m))
    signs = tuple(side_of(a.sample_point, h) for h in hyps)
    if Side.ON in signs:
        raise OracleError(f"sample point of {a} lies on a hyperplane")
    return SignVector(hyps, signs)


def wall_data(a: Alcove) -> list[tuple[int, FiniteRoot, int]]:
    """For each residue i: (i, alpha, k) with element(alpha_i) = alpha - k delta.

    The wall between the alcove and its i-neighbour then lies on H_{alpha,k},
    with the alcove on the side <v, alpha> >= k.
    """
    out = []
    for i in range(a.n):
        r = act_affine_root(a.element, simple_affine_root(i, a.n))
        out.append((i, r.root, -r.level))
    return out


def is_m_minimal(a: Alcove, m: int) -> bool:
    """No wall separating the alcove from A_0 is missing from the m-Shi arrangement."""
    for _, alpha, k in wall_data(a):
        if alpha.is_positive and k > m:
            return False
        if not alpha.is_positive and k > m - 1:
            return False
    return True


def is_dominant(a: Alcove) -> bool:
    p = a.sample_point
    return all(compare_level(p, simple_root(i, a.n), 0) is Side.POSITIVE for i in range(1, a.n))


def minimality_by_inequalities(a: Alcove, m: int) -> bool:
    """For dominant alcoves: beta = element^{-1}(0) lies in the m-dilated simplex."""
    beta = act_vector(inverse(a.element), (0,) * a.n)
    n = a.n
    return all(int_pairing(beta, simple_root(i, n)) >= -m for i in range(1, n)) and int_pairing(
        beta, highest_root(n)
    ) <= m + 1


def alcove_bfs(n: int, keep: Callable[[Alcove], bool], start: Alcove | None = None) -> list[Alcove]:
    """Every alcove reachable from ``start`` through wall crossings inside ``keep``."""
    start = start or Alcove.fundamental(n)
    if not keep(start):
        return []
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for i in range(n):
            b = a.neighbour(i)
            if b not in seen and keep(b):
                seen.add(b)
                queue.append(b)
    return sorted(seen, key=Alcove.sort_key)


@dataclass(frozen=True)
class Region:
    sign_vector: SignVector
    minimal_alcove: Alcove
    alcoves_seen: int


def _dominant_regions(n: int, m: int, radius: int) -> list[Region]:
    theta = highest_root(n)

    def keep(a: Alcove) -> bool:
        return is_dominant(a) and a.side_of_level(theta, radius) is Side.NEGATIVE

    groups: dict[SignVector, list[Alcove]] = {}
    for a in alcove_bfs(n, keep):
        groups.setdefault(sign_vector(a, m), []).append(a)
    regions = []
    for sv, members in groups.items():
        members.sort(key=Alcove.sort_key)
        minimal = [a for a in members if is_m_minimal(a, m)]
        if len(minimal) != 1 or minimal[0] != members[0]:
            raise OracleError(
                f"region with {len(members)} alcoves has {len(minimal)} m-minimal alcoves"
            )
        regions.append(Region(sv, members[0], len(members)))
    regions.sort(key=lambda r: r.minimal_alcove.sort_key())
    return regions


def bruteforce_dominant_regions(n: int, m: int, radius: int) -> list[Region]:
    """Dominant m-Shi regions met by alcoves with <sample, theta> < radius.

    Each region is returned with its unique shortest alcove.  The count is
    recomputed at radius + 1 and must not change.
    """
    if radius <= m + 1:
        raise ValueError(f"radius must exceed m + 1 = {m + 1}")
    regions = _dominant_regions(n, m, radius)
    wider = _dominant_regions(n, m, radius + 1)
    if len(wider) != len(regions):
        raise RadiusTooSmallError(
            f"region count changed from {len(regions)} to {len(wider)} at radius {radius + 1}"
        )
    return regions


def default_radius(n: int, m: int) -> int:
    return m * (n - 1) + 3


def alcoves_in_ball(n: int, radius: int) -> list[Alcove]:
    """All alcoves with |<sample, alpha>| < radius for every root alpha."""
    roots = positive_roots(n)

    def keep(a: Alcove) -> bool:
        p = a.sample_point
        return all(
            compare_level(p, r, radius) is Side.NEGATIVE
            and compare_level(p, r, -radius) is Side.POSITIVE
            for r in roots
        )

    return alcove_bfs(n, keep)


def minimal_alcoves(n: int, m: int, radius: int) -> list[Alcove]:
    return [a for a in alcoves_in_ball(n, radius) if is_m_minimal(a, m)]


def group_by_sign(alcoves: Iterable[Alcove], m: int) -> dict[SignVector, list[Alcove]]:
    groups: dict[SignVector, list[Alcove]] = {}
    for a in alcoves:
        groups.setdefault(sign_vector(a, m), []).append(a)
    return groups
