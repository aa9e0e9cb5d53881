import pytest

from splurge_equivariant.bisimp import transpose
from splurge_equivariant.categories import discrete_category, ordinal
from splurge_equivariant.exceptions import (
    SplurgeEquivariantSearchBudgetExceededError,
    SplurgeEquivariantValueError,
)
from splurge_equivariant.presheaf import coproduct, find_isomorphism
from splurge_equivariant.reports import FAIL, NONEXACT, PASS
from splurge_equivariant.scat import (
    UK,
    U_map,
    attach_cells,
    attach_objects,
    boundary_cell,
    check_nerve_fully_faithful,
    coherent_nerve,
    coproduct_scategories,
    discrete_scategory,
    dk_equivalence_evidence,
    identity_sfunctor,
    letter_bound,
    pi0_category,
    point_scategory,
    simplicial_nerve,
)
from splurge_equivariant.simpset import (
    boundary,
    boundary_inclusion,
    circle,
    empty_sset,
    is_isomorphic,
    is_quasicategory,
    nerve,
    standard_simplex,
)


def test_uk_shape():
    """Test objects and mapping spaces of U applied to the empty set."""
    C = UK(empty_sset(2))
    assert C.objects == ("x", "y")
    assert C.map_space(0, 1).is_empty()
    assert C.map_space(1, 0).is_empty()
    assert C.map_space(0, 0).level_size(0) == 1


def test_component_category_of_uk():
    """Test hom counts of the component category of UK."""
    assert len(pi0_category(UK(standard_simplex(1, 2))).hom(0, 1)) == 1
    assert len(pi0_category(UK(boundary(1, 2))).hom(0, 1)) == 2
    assert len(pi0_category(UK(circle(2))).hom(0, 1)) == 1


def test_component_category_of_a_discrete_category():
    """Test that a discrete category is its own component category."""
    C = ordinal(2)
    components = pi0_category(discrete_scategory(C, 1))
    assert len(components.morphisms) == len(C.morphisms)


def test_simplicial_nerve_of_the_walking_arrow():
    """Test the simplicial nerve of U applied to a point."""
    X = simplicial_nerve(UK(standard_simplex(0, 2)))
    assert [X.cell_count(1, n) for n in range(3)] == [3, 3, 3]


def test_simplicial_nerve_of_a_discrete_category_is_a_transpose():
    """Test that the simplicial nerve of a discrete category is its transposed nerve."""
    C = ordinal(1)
    assert find_isomorphism(simplicial_nerve(discrete_scategory(C, 2)), transpose(nerve(C, 2))) is not None


def test_simplicial_nerve_preserves_coproducts():
    """Test the simplicial nerve of a coproduct."""
    A, B = UK(standard_simplex(0, 1)), point_scategory(1)
    joined = simplicial_nerve(coproduct_scategories(A, B).category)
    separate = coproduct(simplicial_nerve(A), simplicial_nerve(B)).apex
    assert find_isomorphism(joined, separate) is not None


def test_nerve_is_fully_faithful_on_small_instances():
    """Test that the nerve is bijective on hom-sets for small categories."""
    report = check_nerve_fully_faithful(UK(standard_simplex(0, 1)), UK(standard_simplex(1, 1)))
    assert report.verdict == PASS
    assert report.functors > 0


def test_identity_functor_evidence():
    """Test Dwyer-Kan evidence for the identity functor."""
    assert dk_equivalence_evidence(identity_sfunctor(UK(circle(2)))).verdict == PASS


def test_boundary_inclusion_is_not_an_equivalence():
    """Test Dwyer-Kan evidence for U of a boundary inclusion."""
    report = dk_equivalence_evidence(U_map(boundary_inclusion(1, 2)))
    assert report.verdict == FAIL
    assert not all(p.positive for p in report.pairs)


def test_adjoin_disjoint_object():
    """Test adjoining an object with no maps to the rest."""
    C = UK(standard_simplex(0, 2))
    result = attach_objects(C, ["z"])
    assert len(result.category.objects) == 3
    assert result.category.map_space(0, 2).is_empty()
    assert result.category.map_space(0, 1).level_size(0) == 1
    assert result.verdict == PASS


def test_attach_arrow_between_discrete_objects():
    """Test attaching a 0-cell between two objects."""
    C = discrete_scategory(discrete_category(["x", "y"]), 2)
    result = attach_cells(C, [boundary_cell(C, 0, 1, 0)])
    assert result.category.map_space(0, 1).level_size(0) == 1
    assert result.category.map_space(1, 0).is_empty()
    assert result.inclusion.on_objects == (0, 1)


def test_free_composable_string():
    """Test that two attached arrows compose freely."""
    C = discrete_scategory(discrete_category(["x", "y", "z"]), 2)
    first = attach_cells(C, [boundary_cell(C, 0, 1, 0)]).category
    second = attach_cells(first, [boundary_cell(first, 1, 2, 0)]).category
    assert second.map_space(0, 2).level_size(0) == 1


def test_attaching_a_loop_needs_a_budget():
    """Test that a loop raises unless truncation is allowed."""
    C = point_scategory(2)
    with pytest.raises(SplurgeEquivariantSearchBudgetExceededError):
        attach_cells(C, [boundary_cell(C, 0, 0, 0)])
    result = attach_cells(C, [boundary_cell(C, 0, 0, 0)], budget=3, allow_nonexact=True)
    assert result.verdict == NONEXACT


def test_positive_dimension_cell_needs_a_boundary():
    """Test that a positive dimensional cell needs its boundary map."""
    C = UK(standard_simplex(0, 2))
    with pytest.raises(SplurgeEquivariantValueError):
        boundary_cell(C, 0, 1, 1)


def test_coherent_nerve_of_the_walking_arrow():
    """Test the homotopy coherent nerve of the walking arrow."""
    X = coherent_nerve(UK(standard_simplex(0, 2)), up_to=2)
    assert X.level_size(0) == 2
    assert X.level_size(1) == 3


@pytest.mark.parametrize("C", [ordinal(1), ordinal(2)])
def test_coherent_nerve_of_a_discrete_category(C):
    """Test that the coherent nerve of a discrete category is its nerve."""
    X = coherent_nerve(discrete_scategory(C, 3), up_to=3)
    assert is_isomorphic(X, nerve(C, 3)) is not None


def test_coherent_nerve_is_a_quasicategory():
    """Test inner horn filling in a coherent nerve."""
    X = coherent_nerve(UK(standard_simplex(1, 2)), up_to=2)
    assert is_quasicategory(X, 2).passed


def test_total_size_counts_every_mapping_space():
    """Two identity spaces of 3 simplices each plus the 9 simplices of Δ[1] up to level 2."""
    C = UK(standard_simplex(1, 2))
    assert C.total_size() == 15
    assert "15 map simplices" in C.describe()


def test_letter_bound_detects_cycles():
    """Test the longest chain of cell letters for chains, parallel cells and loops."""
    C = discrete_scategory(discrete_category(["x", "y", "z"]), 1)
    assert letter_bound(C, []) == 0
    assert letter_bound(C, [(0, 1), (1, 2)]) == 2
    assert letter_bound(C, [(0, 1), (0, 1)]) == 1
    assert letter_bound(C, [(0, 1), (1, 0)]) is None
    assert letter_bound(point_scategory(1), [(0, 0)]) is None
