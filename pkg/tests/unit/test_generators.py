import pytest

from splurge_equivariant.exceptions import SplurgeEquivariantConfigurationError, SplurgeEquivariantValueError
from splurge_equivariant.generators import generating_cofibrations
from splurge_equivariant.presheaf import find_isomorphism
from splurge_equivariant.simpset import boundary, standard_simplex


def test_boundary_inclusions_for_quasicategories():
    """Test the boundary inclusion catalog for quasi-categories."""
    gens = generating_cofibrations("qcat", 2, 2)
    assert [g.name for g in gens] == ["d0", "d1", "d2"]
    last = gens[-1].morphism
    assert find_isomorphism(last.source, boundary(2, 2)) is not None
    assert find_isomorphism(last.target, standard_simplex(2, 2)) is not None


def test_catalog_is_capped_by_truncation():
    """Test that no generator exceeds the truncation."""
    assert len(generating_cofibrations("qcat", 5, 2)) == 3


def test_reedy_generators_cover_every_pair():
    """Test one Reedy generator per pair (m, n) with m + n within the bound."""
    gens = generating_cofibrations("css", 2, 2)
    assert [g.degree for g in gens] == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
    assert all(g.square is None for g in gens)


def test_simplicial_category_catalog_starts_with_an_object():
    """Test that the simplicial category catalog begins with the object generator."""
    gens = generating_cofibrations("sc", 1, 2)
    assert gens[0].is_object
    assert [g.cell_dim for g in gens[1:]] == [0, 1]
    assert not any(g.is_object for g in gens[1:])


@pytest.mark.parametrize("model", ["secat_c", "secat_f"])
def test_precategory_generators_carry_squares(model):
    """Test that precategory generators record their two pushout squares."""
    gens = generating_cofibrations(model, 1, 2)
    assert len(gens) == 3
    for g in gens:
        assert g.square is not None
        assert g.morphism is g.square.a2_to_b2


def test_unknown_model():
    """Test rejection of an unknown model name."""
    with pytest.raises(SplurgeEquivariantConfigurationError):
        generating_cofibrations("spectra", 1, 2)


def test_negative_dimension():
    """Test rejection of a negative maximum dimension."""
    with pytest.raises(SplurgeEquivariantValueError):
        generating_cofibrations("qcat", -1, 2)
