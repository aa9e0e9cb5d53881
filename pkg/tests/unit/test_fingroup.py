import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splurge_equivariant.exceptions import (
    SplurgeEquivariantConfigurationError,
    SplurgeEquivariantInvalidSubgroupError,
    SplurgeEquivariantParsingError,
    SplurgeEquivariantStructureError,
)
from splurge_equivariant.fingroup import (
    FiniteGroup,
    FSubgroupFamily,
    coset_gset,
    cyclic_group,
    dihedral_group,
    equivariant_maps,
    fixed_points_gset,
    group_by_name,
    group_from_json,
    group_to_json,
    normalizer,
    orbit_category,
    subgroup_from_names,
    subgroups,
    symmetric_group,
    trivial_group,
)

S3_ROTATIONS = ["012", "120", "201"]


def test_symmetric_group_has_six_subgroups():
    """Test the subgroup list of S_3."""
    G = symmetric_group(3)
    found = subgroups(G)
    assert len(found) == 6
    assert [H.order for H in found] == [1, 2, 2, 2, 3, 6]


def test_subgroup_counts_of_small_groups():
    """Test subgroup counts of small groups."""
    assert len(subgroups(trivial_group())) == 1
    assert len(subgroups(cyclic_group(6))) == 4
    assert len(subgroups(dihedral_group(4))) == 10


def test_normal_subgroup_fixes_every_coset():
    """Test that a normal subgroup fixes every coset of itself."""
    G = symmetric_group(3)
    A3 = subgroup_from_names(G, S3_ROTATIONS)
    orbit = coset_gset(G, A3)
    assert orbit.size == 2
    assert fixed_points_gset(orbit, A3) == (0, 1)
    assert normalizer(A3).order == 6


def test_transposition_fixes_one_coset_of_another():
    """Test fixed cosets of a transposition acting on S_3 modulo another one."""
    G = symmetric_group(3)
    H = subgroup_from_names(G, ["012", "021"])
    K = subgroup_from_names(G, ["012", "102"])
    assert len(fixed_points_gset(coset_gset(G, H), H)) == 1
    assert len(fixed_points_gset(coset_gset(G, H), K)) == 1
    assert len(fixed_points_gset(coset_gset(G, H), G.whole)) == 0


def test_orbit_homs_match_fixed_points_for_all_s3_pairs():
    """Test that hom(G/H, G/K) has |(G/K)^H| elements for S_3."""
    G = symmetric_group(3)
    O = orbit_category(G)
    pairs = 0
    for i, H in enumerate(O.objects):
        for j, K in enumerate(O.objects):
            assert len(O.hom(i, j)) == len(fixed_points_gset(O.orbits[j], H))
            pairs += 1
    assert pairs == 36


def test_orbit_category_of_z2():
    """Test the orbit category of Z/2."""
    O = orbit_category(cyclic_group(2))
    assert [len(O.hom(i, j)) for i in range(2) for j in range(2)] == [2, 1, 0, 1]


def test_orbit_category_composition_and_translations():
    """Test composition of orbit maps given by right translation."""
    G = symmetric_group(3)
    O = orbit_category(G)
    e = O.trivial_index
    assert O.objects[e].is_trivial()
    for g in G.elements:
        for h in G.elements:
            # x(gh) = (xg)h
            composite = O.compose(e, e, e, O.right_translation(h), O.right_translation(g))
            assert composite == O.right_translation(G.mul[g][h])
    assert O.right_translation(G.identity) == O.identity(e)


def test_equivariant_maps_respect_stabilizers():
    """Test equivariant maps between the free Z/4 orbit and Z/4 modulo its order-two subgroup."""
    G = cyclic_group(4)
    H = subgroup_from_names(G, ["0", "2"])
    X = coset_gset(G, G.trivial_subgroup)
    Y = coset_gset(G, H)
    assert len(equivariant_maps(X, Y)) == 2
    assert equivariant_maps(Y, X) == []


def test_group_json_round_trip():
    """Test writing and reading a group table."""
    G = dihedral_group(3)
    payload = group_to_json(G)
    H = group_from_json(payload)
    assert H.names == G.names
    assert H.mul == G.mul
    assert group_to_json(H) == payload


def test_group_json_accepts_element_names():
    """Test group tables given by element names."""
    G = group_from_json({"elements": ["e", "a"], "mul": [["e", "a"], ["a", "e"]], "id": "e"})
    assert G.order == 2
    assert G.mul == ((0, 1), (1, 0))


def test_group_json_missing_field():
    """Test that a table without a multiplication is a parse error."""
    with pytest.raises(SplurgeEquivariantParsingError) as info:
        group_from_json({"elements": ["e"], "id": 0})
    assert info.value.details["field"] == "mul"


def test_non_associative_table_is_rejected():
    """Test rejection of a non-associative multiplication table."""
    with pytest.raises(SplurgeEquivariantStructureError):
        FiniteGroup(("e", "a", "b"), ((0, 1, 2), (1, 0, 0), (2, 2, 0)), 0)


def test_member_list_that_is_not_a_subgroup():
    """Test rejection of member lists that are not closed."""
    G = symmetric_group(3)
    with pytest.raises(SplurgeEquivariantInvalidSubgroupError):
        subgroup_from_names(G, ["012", "120"])


def test_family_requires_trivial_subgroup():
    """Test that a subgroup family must contain the trivial subgroup."""
    G = cyclic_group(2)
    family = FSubgroupFamily.from_member_lists(G, [["0", "1"]])
    assert not family.contains_trivial()
    with pytest.raises(SplurgeEquivariantConfigurationError):
        family.require_trivial()
    assert FSubgroupFamily.all_subgroups(G).contains_trivial()


def test_group_by_name():
    """Test built-in group names."""
    assert group_by_name("Z/3").order == 3
    assert group_by_name("S3").order == 6
    assert group_by_name("D4").order == 8
    assert group_by_name("trivial").order == 1


@given(st.integers(min_value=1, max_value=8))
@settings(deadline=None)
def test_cyclic_orbit_homs_count_fixed_cosets(n):
    """Test orbit hom counts for cyclic groups."""
    G = cyclic_group(n)
    O = orbit_category(G)
    for i, H in enumerate(O.objects):
        for j in range(len(O.objects)):
            assert len(O.hom(i, j)) == len(fixed_points_gset(O.orbits[j], H))
