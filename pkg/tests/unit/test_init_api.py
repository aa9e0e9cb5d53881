import splurge_equivariant
from splurge_equivariant import (
    FiniteGroup,
    group_by_name,
    horn,
    is_quasicategory,
    nerve,
    orbit_category,
    standard_simplex,
)
from splurge_equivariant.categories import walking_isomorphism


def test_public_names_resolve():
    for name in splurge_equivariant.__all__:
        assert hasattr(splurge_equivariant, name), name


def test_package_level_workflow():
    G = group_by_name("Z2")
    assert isinstance(G, FiniteGroup)
    assert len(orbit_category(G).objects) == 2

    assert is_quasicategory(nerve(walking_isomorphism(), 3), 3).passed
    assert not is_quasicategory(horn(2, 1, 2), 2).passed
    assert [standard_simplex(1, 2).level_size(k) for k in range(3)] == [2, 3, 4]
