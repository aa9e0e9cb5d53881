import pytest

from splurge_equivariant.categories import (
    FiniteFunctor,
    codiscrete_category,
    coproduct_categories,
    discrete_category,
    group_category,
    ordinal,
    poset_category,
    product_categories,
    walking_isomorphism,
)
from splurge_equivariant.exceptions import SplurgeEquivariantStructureError
from splurge_equivariant.fingroup import cyclic_group


def test_ordinal_homs():
    """Test morphism counts of the ordinal [2]."""
    C = ordinal(2)
    assert len(C.objects) == 3
    assert len(C.morphisms) == 6
    assert len(C.hom(0, 2)) == 1
    assert C.hom(2, 0) == ()


def test_walking_isomorphism_identifies_its_objects():
    """Test that the walking isomorphism makes its two objects isomorphic."""
    C = walking_isomorphism()
    (f,) = C.hom(0, 1)
    assert C.is_isomorphism(f)
    assert C.isomorphic_objects(0, 1)
    assert not ordinal(1).isomorphic_objects(0, 1)


def test_group_category_composes_by_multiplication():
    """Test composition in the one-object category of a group."""
    G = cyclic_group(3)
    C = group_category(G)
    assert len(C.hom(0, 0)) == 3
    assert C.compose(1, 2) == 0
    assert all(C.is_isomorphism(f) for f in range(3))


def test_products_and_coproducts():
    """Test object and morphism counts of products and coproducts of categories."""
    square = product_categories(ordinal(1), ordinal(1))
    assert len(square.objects) == 4
    assert len(square.morphisms) == 9
    both = coproduct_categories(ordinal(1), discrete_category(["x"]))
    assert len(both.objects) == 3
    assert both.hom(0, 2) == ()


def test_non_transitive_relation_is_rejected():
    """Test that a non-transitive order relation raises a structure error."""
    with pytest.raises(SplurgeEquivariantStructureError):
        poset_category([0, 1, 2], lambda a, b: a == b or b == a + 1)


def test_functor_to_the_walking_isomorphism():
    """Test functor properties into the walking isomorphism and out of it."""
    C, D = ordinal(1), walking_isomorphism()
    on_objects = (0, 1)
    on_morphisms = tuple(D.hom(C.source[f], C.target[f])[0] for f in range(len(C.morphisms)))
    F = FiniteFunctor(C, D, on_objects, on_morphisms)
    F.validate()
    assert F.is_essentially_surjective()
    assert not F.is_fully_faithful()

    G = FiniteFunctor(D, codiscrete_category(["a", "b"]), (0, 1), tuple(range(4)))
    G.validate()
    assert G.is_equivalence()
