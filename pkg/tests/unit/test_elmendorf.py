import random

import pytest

from splurge_equivariant.elmendorf import (
    STRICT_NOTE,
    check_elmendorf_adjunction,
    check_triangles,
    constant_diagram,
    elmendorf_lan,
    elmendorf_restrict,
    fixed_point_diagram,
)
from splurge_equivariant.equivariant import tensor_orbit, trivial_gobject
from splurge_equivariant.fingroup import cyclic_group, orbit_category
from splurge_equivariant.presheaf import find_isomorphism
from splurge_equivariant.random_objects import KIND_SSET, random_gobject
from splurge_equivariant.reports import PASS
from splurge_equivariant.simpset import boundary, point, standard_simplex


def test_restriction_of_a_constant_diagram_acts_trivially():
    """Test restriction of a constant orbit diagram."""
    G = cyclic_group(2)
    X = elmendorf_restrict(constant_diagram(orbit_category(G), boundary(1, 1)))
    X.validate()
    assert all(a.key == X.action[G.identity].key for a in X.action)


def test_restriction_of_fixed_points_recovers_the_object():
    """Test that restricting the fixed-point diagram gives back the G-object."""
    G = cyclic_group(2)
    X = tensor_orbit(G, G.trivial_subgroup, standard_simplex(1, 2)).gobject
    F = fixed_point_diagram(X)
    F.validate()
    restricted = elmendorf_restrict(F)
    assert find_isomorphism(restricted.value, X.value) is not None
    assert [a.key for a in restricted.action] == [a.key for a in X.action]


def test_kan_extension_is_empty_away_from_free_orbits():
    """Test the left Kan extension of a free orbit."""
    G = cyclic_group(2)
    O = orbit_category(G)
    lan = elmendorf_lan(tensor_orbit(G, G.trivial_subgroup, point(1)).gobject, O)
    whole = next(i for i, H in enumerate(O.objects) if H.order == G.order)
    assert lan.diagram.values[whole].is_empty()
    assert lan.diagram.values[O.trivial_index].size((0,)) == 2


def test_triangle_identities():
    """Test both triangle identities of the fixed-point diagram adjunction."""
    G = cyclic_group(2)
    X = trivial_gobject(G, point(1))
    F = fixed_point_diagram(tensor_orbit(G, G.trivial_subgroup, point(1)).gobject)
    assert check_triangles(X, F) == (True, True)


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("order", [2, 4])
def test_adjunction_on_random_instances(seed, order):
    """Test the orbit diagram adjunction on random diagrams."""
    rng = random.Random(seed)
    G = cyclic_group(order)
    X = random_gobject(rng, G, KIND_SSET, 1, pieces=1)
    F = fixed_point_diagram(random_gobject(rng, G, KIND_SSET, 1, pieces=1))
    report = check_elmendorf_adjunction(X, F)
    assert report.verdict == PASS, report.to_dict()
    assert report.left_count == report.right_count
    assert STRICT_NOTE in report.notes
