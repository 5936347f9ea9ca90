from itertools import product
from math import comb

import pytest

from shicores.affine import (
    act_vector,
    from_word,
    generator,
    inverse,
    inversion_set,
    length,
    min_length_in_translation_coset,
    word_for,
)
from shicores.bijection import (
    anderson_count,
    enumerate_catalog,
    lattice_points,
    narayana_histogram,
    phi,
    phi_element,
    phi_inverse,
    verify_haiman,
)
from shicores.cores import (
    EMPTY,
    NotACoreError,
    Partition,
    apply_generator_core,
    apply_word_core,
    enumerate_cores,
    is_t_core_hooks,
    n_vector,
    partitions,
)
from shicores.rootsys import FiniteRoot, Side, highest_root, simple_root
from shicores.shi import Alcove, bruteforce_dominant_regions, default_radius, is_dominant, is_m_minimal

from .fixtures import CORE_3, CORE_4, NARAYANA_3_2, WORD_3, WORD_4

GRID = [(n, m) for n in range(2, 7) for m in range(1, 4)]


def test_anderson_count_values():
    assert anderson_count(3, 2) == 12
    assert anderson_count(3, 1) == 5
    assert anderson_count(4, 1) == 14
    assert anderson_count(6, 3) == 7084
    # m = 1 gives Catalan numbers
    assert [anderson_count(n, 1) for n in range(2, 8)] == [2, 5, 14, 42, 132, 429]


def test_phi_of_empty():
    for n in range(2, 6):
        assert phi(EMPTY, n) == Alcove.fundamental(n)
        assert phi_inverse(Alcove.fundamental(n)) == EMPTY


def test_phi_rank_three_example():
    lam = Partition(CORE_3)
    w = phi_element(lam, 3)
    assert w == from_word(WORD_3, 3) and length(w) == 7
    a = phi(lam, 3)
    assert a.side_of_level(simple_root(1, 3), 3) is Side.NEGATIVE
    assert a.side_of_level(highest_root(3), 4) is Side.POSITIVE
    assert a.side_of_level(simple_root(2, 3), 2) is Side.NEGATIVE
    assert phi_inverse(a) == lam
    assert apply_word_core(word_for(w), EMPTY, 3) == lam


def test_phi_rank_four_example():
    lam = Partition(CORE_4)
    a = phi(lam, 4)
    a1, a2, a3 = (simple_root(i, 4) for i in (1, 2, 3))
    assert a.side_of_level(a3, 1) is Side.POSITIVE
    assert a.side_of_level(FiniteRoot(2, 4), 2) is Side.NEGATIVE
    assert a.side_of_level(a1, 2) is Side.NEGATIVE
    assert a.side_of_level(FiniteRoot(1, 3), 2) is Side.POSITIVE
    assert word_for(phi_element(lam, 4)) == WORD_4
    assert phi_inverse(a) == lam
    assert is_dominant(a)


def test_phi_rejects_non_cores():
    with pytest.raises(NotACoreError):
        phi(Partition((2,)), 2)
    with pytest.raises(ValueError):
        phi_inverse(Alcove(from_word([1], 3)))


def test_inversions_of_phi_element_are_negative_roots():
    w = phi_element(Partition(CORE_3), 3)
    assert all(not r.root.is_positive for r in inversion_set(w))


@pytest.mark.parametrize("n,m,count", [(3, 2, 12), (3, 1, 5), (2, 1, 2), (4, 1, 14)])
def test_enumerate_counts(n, m, count):
    assert len(enumerate_catalog(n, m)) == count


def test_enumerate_rank_two():
    assert [e.core for e in enumerate_catalog(2, 1)] == [EMPTY, Partition((1,))]


def test_narayana_examples():
    assert narayana_histogram(3, 2) == (5, 6, 1)
    assert narayana_histogram(3, 1) == (1, 3, 1)
    classes = {k: set() for k in range(3)}
    for e in enumerate_catalog(3, 2):
        classes[e.narayana_k].add(e.core.parts)
    assert classes == {k: set(v) for k, v in NARAYANA_3_2.items()}


@pytest.mark.parametrize("n,m", GRID)
def test_narayana_closed_form(n, m):
    expected = tuple(comb(n, k) * comb(m * n, n - 1 - k) // n for k in range(n))
    assert narayana_histogram(n, m) == expected


@pytest.mark.parametrize("n,m", GRID)
def test_catalog_is_a_bijection(n, m):
    cat = enumerate_catalog(n, m)
    assert len(cat) == anderson_count(n, m)
    for role in ("core", "vector", "alcove", "word"):
        assert len({getattr(e, role) for e in cat}) == len(cat)
    assert sum(cat.narayana()) == len(cat)
    t = m * n + 1
    for e in cat:
        assert max(e.removable_counts) <= m
        if n <= 4:
            assert is_t_core_hooks(e.core, n) and is_t_core_hooks(e.core, t)
            assert is_dominant(e.alcove) and is_m_minimal(e.alcove, m)


def test_catalog_order():
    cores = [e.core for e in enumerate_catalog(4, 2)]
    assert cores == sorted(cores, key=Partition.sort_key)
    assert enumerate_catalog(4, 2) == enumerate_catalog(4, 2)


def test_lattice_points_bounds():
    for n, m in [(3, 2), (4, 1), (5, 2)]:
        pts = list(lattice_points(n, m))
        bound = m * (n - 1) + 1
        assert all(sum(v) == 0 and max(map(abs, v)) <= bound for v in pts)
        # the brute-force scan over the box agrees
        box = [
            v + (-sum(v),)
            for v in product(range(-bound, bound + 1), repeat=n - 1)
            if abs(sum(v)) <= bound
        ]
        inside = [
            v for v in box
            if all(v[i] - v[i + 1] >= -m for i in range(n - 1)) and v[0] - v[-1] <= m + 1
        ]
        assert sorted(pts) == sorted(inside)


def _simultaneous_cores_by_hooks(n, t, max_size):
    out = set()
    for size in range(max_size + 1):
        for p in partitions(size):
            lam = Partition(p)
            if is_t_core_hooks(lam, n) and is_t_core_hooks(lam, t):
                out.add(lam)
    return out


@pytest.mark.parametrize("n,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_catalog_matches_partition_search(n, m):
    s = m * n + 1
    largest = (s * s - 1) * (n * n - 1) // 24
    assert {e.core for e in enumerate_catalog(n, m)} == _simultaneous_cores_by_hooks(n, s, largest)


@pytest.mark.parametrize("n,m", [(3, 3), (4, 2), (5, 1)])
def test_catalog_matches_core_search(n, m):
    s = m * n + 1
    largest = (s * s - 1) * (n * n - 1) // 24
    found = {lam for lam in enumerate_cores(n, largest) if is_t_core_hooks(lam, s)}
    assert {e.core for e in enumerate_catalog(n, m)} == found


@pytest.mark.parametrize("n,m", [(3, 1), (3, 2), (4, 1), (4, 2)])
def test_oracle_agreement(n, m):
    regions = bruteforce_dominant_regions(n, m, default_radius(n, m))
    assert {r.minimal_alcove for r in regions} == {e.alcove for e in enumerate_catalog(n, m)}


@pytest.mark.parametrize("n,m", [(3, 2), (4, 1), (4, 2), (5, 1)])
def test_equivariance_inside_catalog(n, m):
    t = m * n + 1
    for e in enumerate_catalog(n, m):
        for i in range(n):
            mu = apply_generator_core(e.core, i, n)
            if not is_t_core_hooks(mu, t):
                continue
            moved = act_vector(generator(i, n), e.vector)
            assert n_vector(mu, n) == moved
            assert phi(mu, n) == Alcove(inverse(min_length_in_translation_coset(moved)))


@pytest.mark.parametrize("n,m,count", [(2, 1, 3), (2, 2, 5), (3, 1, 16), (3, 2, 49)])
def test_verify_haiman(n, m, count):
    rep = verify_haiman(n, m)
    assert rep.ok, rep.failures
    assert rep.alcoves_in_region == count == rep.minimal_alcoves
    assert f"{count} alcoves in A_m" in rep.summary()
