import logging

import pytest

from splurge_equivariant.config import DEFAULT_CONFIG
from splurge_equivariant.exceptions import (
    SplurgeEquivariantSearchBudgetExceededError,
    SplurgeEquivariantValueError,
)
from splurge_equivariant.presheaf import (
    BiSimplexShape,
    SimplexShape,
    coproduct,
    count_maps,
    find_isomorphism,
    identity,
    iter_maps,
    product,
    pushout,
)
from splurge_equivariant.simpset import boundary, discrete_sset, point, simplex_operator, standard_simplex


def test_maps_between_simplices_are_monotone_functions():
    """Test map counts between standard simplices."""
    assert count_maps(point(2), standard_simplex(1, 2)) == 2
    assert count_maps(standard_simplex(1, 2), standard_simplex(1, 2)) == 3
    assert count_maps(standard_simplex(1, 2), standard_simplex(2, 2)) == 6


def test_enumerated_maps_are_natural():
    """Test that every enumerated map is natural."""
    for f in iter_maps(standard_simplex(2, 2), standard_simplex(1, 2)):
        assert f.is_natural()


def test_budget_is_enforced():
    """Test that a small search budget raises."""
    with pytest.raises(SplurgeEquivariantSearchBudgetExceededError):
        list(iter_maps(standard_simplex(2, 2), standard_simplex(2, 2), budget=1))


def test_fixed_assignment_restricts_enumeration():
    """Test enumeration extending a partial assignment."""
    X = standard_simplex(1, 2)
    maps = list(iter_maps(X, X, fixed={(0,): {0: 1}}))
    # only the constant map at vertex 1 sends 0 to 1
    assert len(maps) == 1


def test_pushout_glues_two_edges():
    """Test gluing two edges along a vertex."""
    end = simplex_operator((1,), 1, 2)
    start = simplex_operator((0,), 1, 2)
    glued = pushout(end, start).apex
    assert glued.size((0,)) == 3
    assert len(glued.nondegenerate((1,))) == 2


def test_product_of_intervals():
    """Test level sizes of the product of two intervals."""
    square = product(standard_simplex(1, 2), standard_simplex(1, 2)).apex
    assert square.size((0,)) == 4
    assert len(square.nondegenerate((1,))) == 5
    assert len(square.nondegenerate((2,))) == 2


def test_coproduct_sizes_add():
    """Test that coproduct sizes add levelwise."""
    total = coproduct(standard_simplex(1, 1), point(1)).apex
    assert total.size((0,)) == 3
    assert total.size((1,)) == 4


def test_find_isomorphism():
    """Test isomorphism search between isomorphic and non-isomorphic objects."""
    assert find_isomorphism(boundary(1, 2), discrete_sset(["a", "b"], 2)) is not None
    assert find_isomorphism(standard_simplex(1, 2), discrete_sset(["a", "b"], 2)) is None


def test_identity_composes_trivially():
    """Test composition with the identity."""
    X = standard_simplex(2, 2)
    f = next(iter_maps(X, X))
    assert f.compose(identity(X)).same_as(f)
    assert identity(X).is_isomorphism()


def test_shapes_do_not_mix():
    """Test that simplicial and bisimplicial objects cannot be combined."""
    assert SimplexShape(2) != BiSimplexShape(2)
    with pytest.raises(SplurgeEquivariantValueError):
        count_maps(point(1), point(2))


def test_large_candidate_spaces_are_logged(caplog, monkeypatch):
    """The configured threshold decides when a hom enumeration warns."""
    monkeypatch.setattr(DEFAULT_CONFIG, "hom_warning_threshold", 0)
    with caplog.at_level(logging.WARNING, logger="splurge_equivariant.presheaf"):
        assert count_maps(point(1), standard_simplex(1, 1)) == 2
    assert "candidate space" in caplog.text


def test_small_candidate_spaces_stay_quiet(caplog):
    """Test that no warning is logged below the threshold."""
    with caplog.at_level(logging.WARNING, logger="splurge_equivariant.presheaf"):
        list(iter_maps(point(1), standard_simplex(1, 1), warning_threshold=10))
    assert "candidate space" not in caplog.text
