"""Type A_{n-1} root system inside the sum-zero subspace V of Q^n.

Roots are e_i - e_j with 1-based indices.  Points of V are kept as exact
rationals (a tuple of integer numerators over one positive denominator),
so every side-of-hyperplane test is an exact integer comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence, Union

QVector = tuple[int, ...]


class DimensionError(ValueError):
    """Raised when a vector and a root/hyperplane live in different ranks."""


def qvector(entries: Sequence[int]) -> QVector:
    """Validate and freeze an element of the root lattice Q."""
    v = tuple(int(a) for a in entries)
    if sum(v) != 0:
        raise ValueError(f"root lattice vector must sum to 0, got {v}")
    return v


@dataclass(frozen=True, order=True)
class FiniteRoot:
    """The root e_i - e_j (1-based, i != j)."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or self.i < 1 or self.j < 1:
            raise ValueError(f"invalid root indices ({self.i}, {self.j})")

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def __neg__(self) -> FiniteRoot:
        return FiniteRoot(self.j, self.i)

    def vector(self, n: int) -> QVector:
        _check_index(self, n)
        v = [0] * n
        v[self.i - 1] = 1
        v[self.j - 1] = -1
        return tuple(v)

    def __str__(self):
        return f"e{self.i}-e{self.j}"


def simple_root(k: int, n: int) -> FiniteRoot:
    """alpha_k = e_k - e_{k+1} for 1 <= k < n."""
    if not 1 <= k < n:
        raise ValueError(f"simple root index {k} out of range for n={n}")
    return FiniteRoot(k, k + 1)


def highest_root(n: int) -> FiniteRoot:
    return FiniteRoot(1, n)


def positive_roots(n: int) -> list[FiniteRoot]:
    return [FiniteRoot(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def all_roots(n: int) -> list[FiniteRoot]:
    return [FiniteRoot(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def simple_decomposition(root: FiniteRoot) -> list[int]:
    """Indices k with root = sum of alpha_k (positive roots only)."""
    if not root.is_positive:
        raise ValueError("only positive roots are sums of simple roots")
    return list(range(root.i, root.j))


@dataclass(frozen=True)
class RationalPoint:
    """A point of V written as numerators / denominator, in lowest terms."""

    numerators: tuple[int, ...]
    denominator: int = 1

    def __post_init__(self):
        nums = tuple(int(a) for a in self.numerators)
        den = int(self.denominator)
        if den <= 0:
            raise ValueError("denominator must be positive")
        if sum(nums) != 0:
            raise ValueError(f"point {nums}/{den} is not in the sum-zero subspace")
        g = gcd(den, *nums) if any(nums) else den
        object.__setattr__(self, "numerators", tuple(a // g for a in nums))
        object.__setattr__(self, "denominator", den // g)

    @classmethod
    def from_fractions(cls, coords: Sequence[Fraction | int]) -> RationalPoint:
        fr = [Fraction(c) for c in coords]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(tuple(int(c * den) for c in fr), den)

    @classmethod
    def lattice(cls, v: Sequence[int]) -> RationalPoint:
        return cls(tuple(v), 1)

    @property
    def n(self) -> int:
        return len(self.numerators)

    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.denominator) for a in self.numerators)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords())

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords()) + ")"


def origin(n: int) -> RationalPoint:
    return RationalPoint((0,) * n, 1)


def rho_point(n: int) -> RationalPoint:
    """rho / n, an interior point of the fundamental alcove.

    rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2); stored over 2n so the
    numerators stay integral.  <p, alpha_i> = 1/n and <p, theta> = (n-1)/n.
    """
    return RationalPoint(tuple(n + 1 - 2 * i for i in range(1, n + 1)), 2 * n)


def fundamental_alcove_vertices(n: int) -> list[RationalPoint]:
    """Vertices of the closure of A_0: the origin and the n-1 points omega_j
    with <omega_j, alpha_i> = [i == j] (so <omega_j, theta> = 1)."""
    verts = [origin(n)]
    for j in range(1, n):
        verts.append(RationalPoint(tuple(n - j if i < j else -j for i in range(n)), n))
    return verts


def _check_index(root: FiniteRoot, n: int) -> None:
    if root.i > n or root.j > n:
        raise DimensionError(f"root {root} does not fit rank n={n}")


Vectorish = Union[RationalPoint, Sequence[int]]


def pairing(v: Vectorish, root: FiniteRoot) -> Fraction:
    """<v, e_i - e_j> = v_i - v_j, exactly."""
    if isinstance(v, RationalPoint):
        _check_index(root, v.n)
        return Fraction(v.numerators[root.i - 1] - v.numerators[root.j - 1], v.denominator)
    _check_index(root, len(v))
    return Fraction(v[root.i - 1] - v[root.j - 1])


def int_pairing(v: Sequence[int], root: FiniteRoot) -> int:
    _check_index(root, len(v))
    return v[root.i - 1] - v[root.j - 1]


class Side(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    ON = "0"


@dataclass(frozen=True, order=True)
class Hyperplane:
    """H_{alpha,k} = {v : <v, alpha> = k} with alpha positive.

    Build through :meth:`of` to normalise H_{-alpha,-k} to H_{alpha,k}.
    """

    root: FiniteRoot
    k: int

    def __post_init__(self):
        if not self.root.is_positive:
            raise ValueError("Hyperplane.root must be positive; use Hyperplane.of")

    @classmethod
    def of(cls, root: FiniteRoot, k: int) -> Hyperplane:
        if root.is_positive:
            return cls(root, k)
        return cls(-root, -k)

    def __str__(self):
        return f"H[{self.root},{self.k}]"


def compare_level(p: RationalPoint, root: FiniteRoot, k: int) -> Side:
    """Side of p relative to {<v, root> = k}, oriented by the given root."""
    _check_index(root, p.n)
    lhs = p.numerators[root.i - 1] - p.numerators[root.j - 1]
    rhs = k * p.denominator
    if lhs > rhs:
        return Side.POSITIVE
    if lhs < rhs:
        return Side.NEGATIVE
    return Side.ON


def side_of(p: RationalPoint, h: Hyperplane) -> Side:
    return compare_level(p, h.root, h.k)
