import random
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from shicores.affine import (
    AffinePermutation,
    AffineRoot,
    act_affine_root,
    act_point,
    act_vector,
    compose,
    from_word,
    generator,
    inverse,
    inversion_bound,
    inversion_set,
    length,
    min_length_in_translation_coset,
    simple_affine_root,
    translation_coset,
    word_for,
)
from shicores.rootsys import FiniteRoot, RationalPoint, all_roots

from .fixtures import WORD_3
from .strategies import elements, points, qvectors


def neg(i, j):
    """-(e_i - e_j) as a FiniteRoot."""
    return FiniteRoot(j, i)


def test_generator_point_actions():
    a, b = 5, 7
    assert act_vector(generator(1, 3), (a, b, -a - b)) == (b, a, -a - b)
    assert act_vector(generator(0, 3), (a, b, -a - b)) == (-a - b + 1, b, a - 1)
    assert act_vector(generator(0, 3), (0, 0, 0)) == (1, 0, -1)


@pytest.mark.parametrize("n", range(2, 7))
def test_generators_are_involutions(n):
    for i in range(n):
        s = generator(i, n)
        assert compose(s, s) == AffinePermutation.identity(n)
        assert inverse(s) == s


def test_generator_range():
    with pytest.raises(ValueError):
        generator(3, 3)


def test_length_seven_word():
    w = from_word(WORD_3, 3)
    assert act_vector(w, (0, 0, 0)) == (-2, 2, 0)
    # finite part s_2 and translation (-2, 0, 2)
    assert w.perm == (0, 2, 1) and w.gamma == (-2, 0, 2)
    assert length(w) == 7


def test_inverse_on_simple_roots():
    wi = inverse(from_word(WORD_3, 3))
    assert act_affine_root(wi, simple_affine_root(0, 3)) == AffineRoot(neg(1, 2), 3)
    assert act_affine_root(wi, simple_affine_root(1, 3)) == AffineRoot(FiniteRoot(1, 3), -4)
    assert act_affine_root(wi, simple_affine_root(2, 3)) == AffineRoot(neg(2, 3), 2)


def test_inversion_set_of_length_seven_word():
    expected = {
        AffineRoot(neg(1, 2), 1),
        AffineRoot(neg(1, 2), 2),
        *(AffineRoot(neg(1, 3), k) for k in range(1, 5)),
        AffineRoot(neg(2, 3), 1),
    }
    assert inversion_set(from_word(WORD_3, 3)) == expected


@pytest.mark.parametrize("n", range(2, 6))
def test_generator_inversions(n):
    assert inversion_set(AffinePermutation.identity(n)) == frozenset()
    for i in range(n):
        assert inversion_set(generator(i, n)) == {simple_affine_root(i, n)}


def test_four_runner_example_wall_data():
    w = from_word([3, 0, 1, 2, 3, 2, 1, 0], 4)
    assert act_vector(w, (0, 0, 0, 0)) == (2, 0, -2, 0)
    assert w == min_length_in_translation_coset((2, 0, -2, 0))
    wi = inverse(w)
    got = [act_affine_root(wi, simple_affine_root(i, 4)) for i in range(4)]
    assert got == [
        AffineRoot(FiniteRoot(3, 4), -1),
        AffineRoot(neg(2, 4), 2),
        AffineRoot(neg(1, 2), 2),
        AffineRoot(FiniteRoot(1, 3), -2),
    ]


def test_word_roundtrip_basics():
    assert from_word([], 4) == AffinePermutation.identity(4)
    assert word_for(from_word([0, 0], 3)) == []
    assert word_for(from_word(WORD_3, 3)) == WORD_3


def cayley_distances(n, depth):
    start = AffinePermutation.identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if dist[w] == depth:
            continue
        for i in range(n):
            v = compose(w, generator(i, n))
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def test_length_matches_cayley_bfs():
    dist = cayley_distances(3, 5)
    for w, d in dist.items():
        assert length(w) == d
    rng = random.Random(3)
    for _ in range(300):
        word = [rng.randrange(3) for _ in range(rng.randint(0, 5))]
        w = from_word(word, 3)
        assert length(w) <= len(word)
        assert (length(w) == len(word)) == (dist[w] == len(word))


def test_braid_relation_on_points():
    rng = random.Random(7)
    lhs = from_word([0, 1, 0], 3)
    rhs = from_word([1, 0, 1], 3)
    for _ in range(20):
        den = rng.randint(1, 9)
        a, b = rng.randint(-20, 20), rng.randint(-20, 20)
        p = RationalPoint((a, b, -a - b), den)
        assert act_point(lhs, p) == act_point(rhs, p)


@given(st.data())
def test_compose_on_random_points(data):
    n = data.draw(st.integers(2, 5))
    w1, w2 = data.draw(elements(n)), data.draw(elements(n))
    p = data.draw(points(n))
    assert act_point(compose(w1, w2), p) == act_point(w1, act_point(w2, p))
    assert act_point(inverse(w1), act_point(w1, p)) == p


@given(elements())
def test_inverse_properties(w):
    assert compose(w, inverse(w)) == AffinePermutation.identity(w.n)
    assert inverse(inverse(w)) == w


@given(st.data())
def test_root_action_is_a_homomorphism(data):
    n = data.draw(st.integers(2, 5))
    w1, w2 = data.draw(elements(n)), data.draw(elements(n))
    r = AffineRoot(data.draw(st.sampled_from(all_roots(n))), data.draw(st.integers(-4, 4)))
    assert act_affine_root(compose(w1, w2), r) == act_affine_root(w1, act_affine_root(w2, r))


@given(st.data())
def test_translation_acts_on_points(data):
    n = data.draw(st.integers(2, 5))
    g = data.draw(qvectors(n))
    p = data.draw(points(n))
    t = AffinePermutation.translation(g)
    assert act_point(t, p).coords() == tuple(a + b for a, b in zip(p.coords(), g))
    r = AffineRoot(FiniteRoot(1, 2), 0)
    assert act_affine_root(AffinePermutation.translation((0,) * n), r) == r


@settings(max_examples=200)
@given(elements(max_len=16))
def test_reduced_words(w):
    word = word_for(w)
    assert len(word) == length(w) == len(inversion_set(w))
    assert from_word(word, w.n) == w


@given(elements())
def test_no_inversions_above_bound(w):
    top = inversion_bound(w)
    for a in all_roots(w.n):
        assert act_affine_root(w, AffineRoot(a, top + 1)).is_positive


def test_min_coset_of_worked_vector():
    assert min_length_in_translation_coset((0, 0, 0)) == AffinePermutation.identity(3)
    w = min_length_in_translation_coset((-2, 2, 0))
    assert w == from_word(WORD_3, 3) and length(w) == 7


@settings(max_examples=50)
@given(st.integers(2, 5).flatmap(lambda n: qvectors(n, bound=3)))
def test_min_coset_brute_force(g):
    coset = translation_coset(g)
    best = min(length(w) for w in coset)
    shortest = [w for w in coset if length(w) == best]
    assert shortest == [min_length_in_translation_coset(g)]
    w = shortest[0]
    assert act_vector(w, (0,) * len(g)) == g
    assert all(r.level > 0 for r in inversion_set(w))
