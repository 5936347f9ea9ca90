import pytest
from hypothesis import given, settings, strategies as st

from shicores.affine import (
    AffineRoot,
    act_affine_root,
    from_word,
    inverse,
    min_length_in_translation_coset,
    simple_affine_root,
)
from shicores.rootsys import FiniteRoot, Hyperplane, Side, highest_root, positive_roots, simple_root
from shicores.shi import (
    Alcove,
    RadiusTooSmallError,
    alcove_bfs,
    alcoves_in_ball,
    bruteforce_dominant_regions,
    is_dominant,
    is_m_minimal,
    minimality_by_inequalities,
    shi_hyperplanes,
    sign_vector,
    wall_data,
)

from .fixtures import WORD_3
from .strategies import elements, qvectors


def example_alcove():
    return Alcove(inverse(from_word(WORD_3, 3)))


def test_hyperplane_counts():
    assert len(shi_hyperplanes(3, 1)) == 6
    assert len(shi_hyperplanes(3, 2)) == 12
    assert set(shi_hyperplanes(2, 1)) == {Hyperplane(FiniteRoot(1, 2), 0), Hyperplane(FiniteRoot(1, 2), 1)}
    for n in range(2, 6):
        for m in range(1, 4):
            assert len(set(shi_hyperplanes(n, m))) == m * n * (n - 1)
    with pytest.raises(ValueError):
        shi_hyperplanes(1, 1)


def test_fundamental_sign_vector():
    sv = sign_vector(Alcove.fundamental(3), 1)
    for a in positive_roots(3):
        assert sv[Hyperplane(a, 0)] is Side.POSITIVE
        assert sv[Hyperplane(a, 1)] is Side.NEGATIVE


def test_example_alcove_sides():
    a = example_alcove()
    theta, a1, a2 = highest_root(3), simple_root(1, 3), simple_root(2, 3)
    sv = sign_vector(a, 2)
    assert sv[Hyperplane(theta, 2)] is Side.POSITIVE
    assert sv[Hyperplane(a1, 2)] is Side.POSITIVE
    assert sv[Hyperplane(a2, 1)] is Side.POSITIVE
    assert all(a.side_of_level(theta, k) is Side.POSITIVE for k in range(1, 5))


@settings(max_examples=150)
@given(elements(max_len=14), st.integers(1, 3), st.data())
def test_wall_crossing_changes_at_most_one_sign(x, m, data):
    a = Alcove(x)
    i = data.draw(st.integers(0, x.n - 1))
    b = a.neighbour(i)
    diff = sign_vector(a, m).differences(sign_vector(b, m))
    assert len(diff) <= 1
    _, alpha, k = wall_data(a)[i]
    wall = Hyperplane.of(alpha, k)
    assert diff == ([wall] if wall in set(shi_hyperplanes(x.n, m)) else [])


@settings(max_examples=150)
@given(elements(max_len=14), st.data())
def test_wall_identity(x, data):
    a = Alcove(x)
    i = data.draw(st.integers(0, x.n - 1))
    m = 12  # wide enough that every wall of a short element is a Shi hyperplane
    diff = sign_vector(a, m).differences(sign_vector(a.neighbour(i), m))
    assert len(diff) == 1
    h = diff[0]
    if a.side_of_level(h.root, h.k) is Side.POSITIVE:
        alpha, k = h.root, h.k
    else:
        alpha, k = -h.root, -h.k
    assert act_affine_root(x, simple_affine_root(i, x.n)) == AffineRoot(alpha, -k)


def test_m_minimal_examples():
    assert all(is_m_minimal(Alcove.fundamental(n), m) for n in range(2, 6) for m in range(1, 4))
    a = example_alcove()
    walls = {i: (alpha, k) for i, alpha, k in wall_data(a)}
    assert walls[1] == (highest_root(3), 4)
    assert not is_m_minimal(a, 2)
    assert is_m_minimal(a, 4)


def test_dominance_examples():
    assert is_dominant(Alcove.fundamental(4))
    assert not is_dominant(Alcove(from_word([1], 3)))
    assert is_dominant(example_alcove())


@settings(max_examples=100)
@given(qvectors(bound=4))
def test_min_coset_inverses_are_dominant(g):
    assert is_dominant(Alcove(inverse(min_length_in_translation_coset(g))))


@pytest.mark.parametrize("n,m,radius,count", [(2, 1, 4, 2), (3, 1, 5, 5), (3, 2, 7, 12), (4, 1, 6, 14)])
def test_bruteforce_region_counts(n, m, radius, count):
    regions = bruteforce_dominant_regions(n, m, radius)
    assert len(regions) == count
    assert len({r.sign_vector for r in regions}) == count
    assert all(is_m_minimal(r.minimal_alcove, m) for r in regions)


def test_radius_too_small():
    with pytest.raises(RadiusTooSmallError):
        bruteforce_dominant_regions(3, 2, 4)
    with pytest.raises(ValueError):
        bruteforce_dominant_regions(3, 2, 3)


@pytest.mark.parametrize("n,m", [(2, 1), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2)])
def test_minimality_inequality_form(n, m):
    theta = highest_root(n)
    dominant = alcove_bfs(n, lambda a: is_dominant(a) and a.side_of_level(theta, m * (n - 1) + 4) is Side.NEGATIVE)
    assert any(not is_m_minimal(a, m) for a in dominant)
    for a in dominant:
        assert is_m_minimal(a, m) == minimality_by_inequalities(a, m)


def test_distinct_elements_give_distinct_alcoves():
    alcoves = alcoves_in_ball(3, 3)
    assert len({a.sample_point for a in alcoves}) == len(alcoves) > 50
