import random

import pytest

from splurge_equivariant.categories import group_category, ordinal, walking_isomorphism
from splurge_equivariant.exceptions import SplurgeEquivariantValueError
from splurge_equivariant.fingroup import cyclic_group
from splurge_equivariant.presheaf import count_maps
from splurge_equivariant.random_objects import random_category
from splurge_equivariant.simpset import (
    E,
    boundary,
    circle,
    discrete_sset,
    horn,
    is_isomorphic,
    is_quasicategory,
    nerve,
    pi0,
    simplex_operator,
    standard_simplex,
    subdivided_circle,
)


def test_standard_simplex_sizes():
    """Test level sizes of Δ[2]."""
    X = standard_simplex(2, 2)
    assert [X.level_size(k) for k in range(3)] == [3, 6, 10]
    assert X.nondegenerate_simplices(2) == (X.index_of((2,), (0, 1, 2)),)


def test_boundary_and_horn_drop_top_simplices():
    """Test nondegenerate simplices of boundaries and horns."""
    assert len(boundary(2, 2).nondegenerate_simplices(1)) == 3
    assert boundary(2, 2).nondegenerate_simplices(2) == ()
    assert len(horn(2, 1, 2).nondegenerate_simplices(1)) == 2


def test_horn_index_is_validated():
    """Test rejection of a horn index above n."""
    with pytest.raises(SplurgeEquivariantValueError):
        horn(2, 3, 2)


def test_simplex_operator_rejects_non_monotone():
    """Test that simplex operators must be monotone."""
    with pytest.raises(SplurgeEquivariantValueError):
        simplex_operator((1, 0), 1, 2)
    f = simplex_operator((0, 0, 1), 1, 2)
    assert f.is_natural()


def test_nerve_of_walking_isomorphism():
    """Test level sizes of E."""
    assert [E(3).level_size(n) for n in range(4)] == [2, 4, 8, 16]
    assert nerve(walking_isomorphism(), 3).level_size(2) == 8


def test_nerve_faces_compose():
    """Test the vertices of the top simplex of the nerve of [2]."""
    X = nerve(ordinal(2), 2)
    top = X.nondegenerate_simplices(2)
    assert len(top) == 1
    assert X.vertices(2, top[0]) == (0, 1, 2)


@pytest.mark.parametrize("C", [ordinal(1), ordinal(2), walking_isomorphism()])
def test_nerves_are_quasicategories(C):
    """Test inner horn filling in nerves of categories."""
    assert is_quasicategory(nerve(C, 3), 3).passed


def test_inner_horn_is_not_a_quasicategory():
    """Test that V[2,1] fails the inner horn check at (2, 1)."""
    report = is_quasicategory(horn(2, 1, 2), 2, stop_at_first=True)
    assert not report.passed
    assert report.failures[0].n == 2
    assert report.failures[0].k == 1


def test_boundary_is_not_a_quasicategory():
    """Test that the boundary of a triangle is not a quasi-category."""
    assert not is_quasicategory(boundary(2, 2), 2).passed


def test_quasicategory_check_respects_truncation():
    """Test rejection of horn dimensions above the truncation."""
    with pytest.raises(SplurgeEquivariantValueError):
        is_quasicategory(standard_simplex(1, 2), 3)


def test_circle_models_agree():
    """Test that the one-vertex circle matches the once subdivided circle."""
    assert is_isomorphic(circle(2), subdivided_circle(1, 2)) is not None
    assert is_isomorphic(circle(2), subdivided_circle(2, 2)) is None
    assert subdivided_circle(3, 2).level_size(0) == 3


def test_components():
    """Test connected component counts."""
    assert len(pi0(discrete_sset(["a", "b", "c"], 1))) == 3
    assert len(pi0(boundary(1, 1))) == 2
    assert len(pi0(standard_simplex(3, 1))) == 1
    assert len(pi0(nerve(group_category(cyclic_group(3)), 2))) == 1


def test_components_at_truncation_zero_are_inexact():
    """Test that components at truncation 0 are flagged."""
    components = pi0(standard_simplex(1, 0))
    assert not components.exact
    assert len(components) == 2


@pytest.mark.parametrize(
    "X",
    [standard_simplex(1, 2), standard_simplex(2, 2), boundary(2, 2), E(2), circle(2), horn(2, 1, 2)],
    ids=["simplex1", "simplex2", "boundary2", "E", "circle", "inner_horn"],
)
def test_every_corpus_object_is_isomorphic_to_itself(X):
    """Injective search must allow degenerate simplices that repeat a vertex."""
    iso = is_isomorphic(X, X)
    assert iso is not None
    assert iso.is_isomorphism()


@pytest.mark.parametrize("n", [0, 1, 2])
@pytest.mark.parametrize("X", [circle(2), boundary(2, 2), nerve(walking_isomorphism(), 2)], ids=["S1", "d2", "E"])
def test_maps_out_of_a_simplex_are_its_simplices(n, X):
    """|hom(Δ[n], X)| equals the number of n-simplices of X."""
    assert count_maps(standard_simplex(n, 2), X) == X.level_size(n)


@pytest.mark.parametrize("seed", range(10))
def test_nerves_of_random_categories_are_quasicategories(seed):
    """Test inner horn filling in nerves of small random categories."""
    assert is_quasicategory(nerve(random_category(random.Random(seed)), 3), 3).passed
