"""The affine symmetric group of rank n, stored as w = u o t_gamma.

``w(p) = u(p + gamma)`` where the permutation ``u`` moves coordinate i to
position u(i).  Composition is functional: ``compose(w1, w2)`` acts by w2
first.  Words act with their leftmost letter last, so ``from_word([a, b])``
is s_a s_b.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .rootsys import (
    FiniteRoot,
    QVector,
    RationalPoint,
    all_roots,
    int_pairing,
    positive_roots,
    qvector,
)

Perm = tuple[int, ...]  # 0-based one-line notation: perm[i] = u(i)


def _perm_inverse(perm: Perm) -> Perm:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def permute_vector(perm: Perm, v: Sequence) -> tuple:
    """u(v): the entry v_i lands at position u(i)."""
    out = [None] * len(v)
    for i, p in enumerate(perm):
        out[p] = v[i]
    return tuple(out)


@dataclass(frozen=True, order=True)
class AffineRoot:
    """root + level * delta."""

    root: FiniteRoot
    level: int

    @property
    def is_positive(self) -> bool:
        return self.level > 0 or (self.level == 0 and self.root.is_positive)

    def __neg__(self) -> AffineRoot:
        return AffineRoot(-self.root, -self.level)

    def __str__(self):
        if self.level == 0:
            return str(self.root)
        return f"{self.root}{self.level:+d}d"


def simple_affine_root(i: int, n: int) -> AffineRoot:
    """alpha_i for 1 <= i < n, and alpha_0 = delta - theta."""
    if i == 0:
        return AffineRoot(FiniteRoot(n, 1), 1)
    if not 0 < i < n:
        raise ValueError(f"residue {i} out of range for n={n}")
    return AffineRoot(FiniteRoot(i, i + 1), 0)


@dataclass(frozen=True)
class AffinePermutation:
    perm: Perm
    gamma: QVector

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation of 0..n-1")
        if len(self.gamma) != len(self.perm):
            raise ValueError("finite part and translation have different ranks")
        qvector(self.gamma)

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> AffinePermutation:
        return cls(tuple(range(n)), (0,) * n)

    @classmethod
    def translation(cls, gamma: Sequence[int]) -> AffinePermutation:
        g = qvector(gamma)
        return cls(tuple(range(len(g))), g)

    @classmethod
    def finite(cls, perm: Sequence[int]) -> AffinePermutation:
        return cls(tuple(perm), (0,) * len(perm))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and not any(self.gamma)

    def __call__(self, p):
        if isinstance(p, RationalPoint):
            return act_point(self, p)
        if isinstance(p, AffineRoot):
            return act_affine_root(self, p)
        return act_vector(self, p)

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        return compose(self, other)

    def __repr__(self):
        return f"AffinePermutation(perm={self.perm}, gamma={self.gamma})"


def generator(i: int, n: int) -> AffinePermutation:
    if n < 2:
        raise ValueError("need n >= 2")
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    perm = list(range(n))
    if i == 0:
        perm[0], perm[n - 1] = n - 1, 0
        gamma = [0] * n
        gamma[0], gamma[n - 1] = -1, 1
        return AffinePermutation(tuple(perm), tuple(gamma))
    perm[i - 1], perm[i] = i, i - 1
    return AffinePermutation(tuple(perm), (0,) * n)


def _check_rank(w1: AffinePermutation, w2: AffinePermutation) -> None:
    if w1.n != w2.n:
        raise ValueError(f"rank mismatch: {w1.n} vs {w2.n}")


def compose(w1: AffinePermutation, w2: AffinePermutation) -> AffinePermutation:
    """w1 o w2 = (u1 u2) t_{u2^{-1}(gamma1) + gamma2}."""
    _check_rank(w1, w2)
    perm = tuple(w1.perm[p] for p in w2.perm)
    pulled = permute_vector(_perm_inverse(w2.perm), w1.gamma)
    return AffinePermutation(perm, tuple(a + b for a, b in zip(pulled, w2.gamma)))


def inverse(w: AffinePermutation) -> AffinePermutation:
    moved = permute_vector(w.perm, w.gamma)
    return AffinePermutation(_perm_inverse(w.perm), tuple(-a for a in moved))


def act_vector(w: AffinePermutation, v: Sequence[int]) -> QVector:
    if len(v) != w.n:
        raise ValueError(f"vector of length {len(v)} for rank {w.n}")
    return permute_vector(w.perm, tuple(a + g for a, g in zip(v, w.gamma)))


def act_point(w: AffinePermutation, p: RationalPoint) -> RationalPoint:
    if p.n != w.n:
        raise ValueError(f"point of rank {p.n} for rank {w.n}")
    d = p.denominator
    shifted = tuple(a + g * d for a, g in zip(p.numerators, w.gamma))
    return RationalPoint(permute_vector(w.perm, shifted), d)


def act_finite_root(perm: Perm, root: FiniteRoot) -> FiniteRoot:
    return FiniteRoot(perm[root.i - 1] + 1, perm[root.j - 1] + 1)


def act_affine_root(w: AffinePermutation, r: AffineRoot) -> AffineRoot:
    """u t_gamma sends alpha + k delta to u(alpha) + (k - <gamma, alpha>) delta."""
    return AffineRoot(act_finite_root(w.perm, r.root), r.level - int_pairing(w.gamma, r.root))


def inversion_bound(w: AffinePermutation) -> int:
    """No inversion alpha + k delta has k above this level."""
    return 1 + max((abs(int_pairing(w.gamma, a)) for a in positive_roots(w.n)), default=0)


def inversion_set(w: AffinePermutation) -> frozenset[AffineRoot]:
    top = inversion_bound(w)
    inv = set()
    for a in all_roots(w.n):
        for k in range(0 if a.is_positive else 1, top + 1):
            r = AffineRoot(a, k)
            if not act_affine_root(w, r).is_positive:
                inv.add(r)
    return frozenset(inv)


def length(w: AffinePermutation) -> int:
    """Number of inversions, counted level by level without enumerating them.

    For a finite root alpha with c = <gamma, alpha>, the levels k >= k0
    sent negative are k < c, plus k = c when u(alpha) is negative.
    """
    total = 0
    for a in all_roots(w.n):
        k0 = 0 if a.is_positive else 1
        c = int_pairing(w.gamma, a)
        if c > k0:
            total += c - k0
        if c >= k0 and not act_finite_root(w.perm, a).is_positive:
            total += 1
    return total


def is_right_descent(w: AffinePermutation, i: int) -> bool:
    """l(w s_i) < l(w), i.e. w(alpha_i) < 0."""
    return not act_affine_root(w, simple_affine_root(i, w.n)).is_positive


def from_word(word: Iterable[int], n: int) -> AffinePermutation:
    w = AffinePermutation.identity(n)
    for i in word:
        w = compose(w, generator(i, n))
    return w


def word_for(w: AffinePermutation) -> list[int]:
    """A reduced word: strip the smallest right descent until w is trivial."""
    letters = []
    while not w.is_identity():
        i = next(i for i in range(w.n) if is_right_descent(w, i))
        letters.append(i)
        w = compose(w, generator(i, w.n))
    letters.reverse()
    return letters


def min_length_in_translation_coset(gamma: Sequence[int]) -> AffinePermutation:
    """Shortest w with w(0) = gamma, i.e. the minimal element of t_gamma S_n.

    No level-0 inversions forces the translation part u^{-1}(gamma) to be
    weakly increasing with u order-preserving on ties, so u is the stable
    ascending argsort of gamma.
    """
    g = qvector(gamma)
    order = sorted(range(len(g)), key=lambda i: g[i])
    return AffinePermutation(tuple(order), tuple(g[i] for i in order))


def translation_coset(gamma: Sequence[int]) -> list[AffinePermutation]:
    """Every element t_gamma v, v in S_n (n! of them)."""
    t = AffinePermutation.translation(gamma)
    return [compose(t, AffinePermutation.finite(p)) for p in permutations(range(len(gamma)))]
