from hypothesis import given, settings
from hypothesis import strategies as st

from splurge_equivariant.categories import group_category, ordinal
from splurge_equivariant.fingroup import cyclic_group
from splurge_equivariant.homology import boundary_matrix, chain_map_commutes, homology, map_evidence
from splurge_equivariant.simpset import (
    boundary,
    boundary_inclusion,
    circle,
    horn_inclusion,
    nerve,
    standard_simplex,
    subdivided_circle,
)


def test_boundary_of_triangle_is_a_circle():
    """Test the homology of the boundary of a triangle."""
    result = homology(boundary(2, 3))
    assert result.betti() == (1, 1, 0)
    assert all(d.reliable for d in result.degrees)


def test_boundary_of_tetrahedron_is_a_sphere():
    """Test the homology of the boundary of a tetrahedron."""
    result = homology(boundary(3, 3), up_to=2)
    assert result.betti() == (1, 0, 1)
    assert result[2].describe() == "Z"


def test_circle_has_one_loop():
    """Test the homology of both circle models."""
    assert homology(circle(2)).betti() == (1, 1)
    assert homology(subdivided_circle(4, 2)).betti() == (1, 1)


def test_cyclic_nerve_has_torsion():
    """Test torsion in the homology of the nerve of Z/3."""
    result = homology(nerve(group_category(cyclic_group(3)), 3), up_to=2)
    assert result[0].describe() == "Z"
    assert result[1].torsion == (3,)
    assert result[1].betti == 0
    assert result[1].describe() == "Z/3"


def test_top_degree_is_flagged():
    """Test that the top degree is reported as a lower bound."""
    result = homology(standard_simplex(1, 1), up_to=1)
    assert result[0].reliable
    assert not result[1].reliable


def test_unnormalized_complex_agrees():
    """Test that normalized and unnormalized chains give the same homology."""
    X = nerve(ordinal(2), 3)
    assert homology(X).agrees_with(homology(X, normalized=False))


def test_boundary_squares_to_zero():
    """Test that consecutive boundary matrices compose to zero."""
    X = standard_simplex(3, 3)
    d2 = boundary_matrix(X, 2)
    d1 = boundary_matrix(X, 1)
    for row in d1:
        for c in range(len(d2[0])):
            assert sum(row[k] * d2[k][c] for k in range(len(d2))) == 0


def test_induced_chain_maps_commute():
    """Test that induced chain maps commute with the boundary."""
    f = boundary_inclusion(2, 2)
    assert chain_map_commutes(f, 1)
    assert chain_map_commutes(f, 2)


def test_map_evidence_distinguishes_horn_from_boundary():
    """Test homology evidence for horn and boundary inclusions."""
    pi0_ok, agreement = map_evidence(horn_inclusion(2, 0, 3))
    assert pi0_ok and all(agreement)
    pi0_ok, agreement = map_evidence(boundary_inclusion(2, 3))
    assert pi0_ok
    assert not all(agreement)


@given(st.integers(min_value=1, max_value=4))
@settings(deadline=None)
def test_simplices_are_acyclic(n):
    """Test that standard simplices have the homology of a point."""
    result = homology(standard_simplex(n, 3), up_to=2)
    assert result.betti() == (1, 0, 0)
    assert all(not d.torsion for d in result.degrees)
