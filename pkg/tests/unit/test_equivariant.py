import random

import pytest

from splurge_equivariant.equivariant import (
    FINITE_APPROXIMATION,
    GMap,
    GObject,
    carrier_for,
    check_fixed_point_adjunction,
    check_cellularity_1,
    check_cellularity_2,
    check_cellularity_2_scat,
    check_cellularity_3,
    equivariant_homs,
    fixed_points,
    g_weak_equivalence_evidence,
    gobject_coproduct,
    replay_two_squares,
    tensor_equivariant_homs,
    tensor_orbit,
    trivial_gobject,
)
from splurge_equivariant.exceptions import (
    SplurgeEquivariantStructureError,
    SplurgeEquivariantUnsupportedCarrierError,
)
from splurge_equivariant.fingroup import FSubgroupFamily, cyclic_group, subgroup_from_names, subgroups, symmetric_group
from splurge_equivariant.generators import generating_cofibrations
from splurge_equivariant.presheaf import coproduct, find_isomorphism, identity
from splurge_equivariant.random_objects import (
    KIND_PRECAT,
    KIND_SCAT,
    KIND_SSET,
    random_attach,
    random_chain,
    random_gobject,
    random_sset,
)
from splurge_equivariant.reports import EVIDENCE_PASS, NONEXACT, PASS
from splurge_equivariant.scat import UK, letter_bound, point_scategory
from splurge_equivariant.simpset import boundary, boundary_inclusion, circle, point, standard_simplex


def test_swapped_copies_have_no_global_fixed_points():
    """Test fixed points of two swapped copies of an interval."""
    G = cyclic_group(2)
    T = tensor_orbit(G, G.trivial_subgroup, standard_simplex(1, 2))
    T.gobject.validate()
    assert fixed_points(T.gobject, G.whole).value.is_empty()
    assert fixed_points(T.gobject, G.trivial_subgroup).value.size((0,)) == 4


def test_trivial_action_fixes_everything():
    """Test that every subgroup fixes an object with trivial action."""
    G = symmetric_group(3)
    A = boundary(2, 2)
    X = trivial_gobject(G, A)
    for H in subgroups(G):
        assert find_isomorphism(fixed_points(X, H).value, A) is not None


def test_tensor_over_the_whole_group_is_the_base():
    """Test that G/G ⊗ A is A."""
    G = symmetric_group(3)
    T = tensor_orbit(G, G.whole, standard_simplex(1, 2))
    assert find_isomorphism(T.value, standard_simplex(1, 2)) is not None


def test_tensor_over_a_transposition():
    """Test the three copies of S_3 modulo a transposition."""
    G = symmetric_group(3)
    H = subgroup_from_names(G, ["012", "102"])
    T = tensor_orbit(G, H, boundary(1, 2))
    assert T.orbit.size == 3
    assert T.value.size((0,)) == 6
    T.gobject.validate()


def test_action_length_is_checked():
    """Test that an action must list one map per group element."""
    G = cyclic_group(2)
    with pytest.raises(SplurgeEquivariantStructureError):
        GObject(G, point(1), (identity(point(1)),))


def test_unsupported_carrier():
    """Test rejection of values with no carrier."""
    with pytest.raises(SplurgeEquivariantUnsupportedCarrierError):
        carrier_for(42)


def test_adjunction_with_a_point():
    """Test the fixed-point adjunction for a point and a free orbit."""
    G = cyclic_group(2)
    B = tensor_orbit(G, G.trivial_subgroup, point(2)).gobject
    whole = check_fixed_point_adjunction(G, G.whole, point(2), B)
    assert whole.verdict == PASS
    assert whole.left_count == whole.right_count == 0
    trivial = check_fixed_point_adjunction(G, G.trivial_subgroup, point(2), B)
    assert trivial.verdict == PASS
    assert trivial.right_count == 2


@pytest.mark.parametrize("seed", range(6))
def test_adjunction_on_random_instances(seed):
    """Test the fixed-point adjunction on random simplicial sets up to level 2."""
    rng = random.Random(seed)
    G = rng.choice([cyclic_group(2), symmetric_group(3)])
    B = random_gobject(rng, G, KIND_SSET, 2)
    A = random_sset(rng, 2, max_dim=1)
    for H in subgroups(G):
        report = check_fixed_point_adjunction(G, H, A, B)
        assert report.verdict == PASS, report.to_dict()


def test_cellularity_3_over_s3():
    """Test that fixed points commute with orbit tensors for every pair of subgroups of S_3."""
    G = symmetric_group(3)
    A = standard_simplex(1, 2)
    for H in subgroups(G):
        for K in subgroups(G):
            report = check_cellularity_3(G, H, K, A)
            assert report.verdict == PASS
            assert report.extra["copies"] == G.order // H.order


def test_cellularity_3_on_simplicial_categories():
    """Test the orbit tensor comparison for the point simplicial category."""
    G = cyclic_group(2)
    for H in subgroups(G):
        for K in subgroups(G):
            assert check_cellularity_3(G, H, K, point_scategory(2)).verdict == PASS


@pytest.mark.parametrize("seed", range(3))
def test_cellularity_1_on_random_chains(seed):
    """Test that fixed points commute with sequential colimits of random chains."""
    rng = random.Random(seed)
    G = cyclic_group(2)
    chain = random_chain(rng, G, KIND_SSET, 2, stages=3)
    for H in subgroups(G):
        report = check_cellularity_1(G, H, chain)
        assert report.verdict == PASS
        assert FINITE_APPROXIMATION in report.notes


@pytest.mark.parametrize("seed", range(3))
def test_cellularity_2_for_boundary_inclusions(seed):
    """Test that fixed points preserve pushouts along boundary inclusions."""
    rng = random.Random(seed)
    G = cyclic_group(2)
    generator = boundary_inclusion(1, 2)
    for K in subgroups(G):
        X = random_gobject(rng, G, KIND_SSET, 2)
        X, attach = random_attach(rng, G, K, generator.source, X)
        for H in subgroups(G):
            assert check_cellularity_2(G, K, H, generator, attach, X).verdict == PASS


def test_object_generator_on_simplicial_categories():
    """Test adjoining an orbit of objects to a simplicial category."""
    G = cyclic_group(2)
    X = trivial_gobject(G, point_scategory(2))
    fixed = check_cellularity_2_scat(G, G.trivial_subgroup, G.whole, X)
    assert fixed.verdict == PASS
    assert fixed.extra["new_objects"] == 2
    assert fixed.extra["fixed_cosets"] == 0
    underlying = check_cellularity_2_scat(G, G.trivial_subgroup, G.trivial_subgroup, X)
    assert underlying.verdict == PASS
    assert underlying.extra["fixed_cosets"] == 2


def test_two_square_replay_for_reduced_generators():
    """Test both pushout squares of a reduced generator attachment."""
    rng = random.Random(7)
    G = cyclic_group(2)
    generator = generating_cofibrations("secat_c", 1, 2)[-1]
    K = G.trivial_subgroup
    X = random_gobject(rng, G, KIND_PRECAT, 2)
    X, attach = random_attach(rng, G, K, generator.square.a2_to_b2.source, X)
    for H in subgroups(G):
        report = replay_two_squares(G, K, H, generator.square, attach, X)
        assert report.verdict == PASS
        assert report.extra["left_square"]
        assert report.extra["outer_rectangle"]


def test_identity_is_a_g_weak_equivalence():
    """Test that the identity passes on every fixed-point level."""
    G = cyclic_group(2)
    X = tensor_orbit(G, G.trivial_subgroup, circle(2)).gobject
    f = GMap(X, X, identity(X.value))
    f.validate()
    report = g_weak_equivalence_evidence(f, FSubgroupFamily.all_subgroups(G))
    assert report.verdict == PASS
    assert len(report.entries) == 2


def test_fixed_points_separate_swapped_and_fixed_circles():
    """Test that isomorphic underlying objects can differ in their fixed points."""
    G = cyclic_group(2)
    swapped = tensor_orbit(G, G.trivial_subgroup, circle(2)).gobject
    fixed = trivial_gobject(G, coproduct(circle(2), circle(2)).apex)
    assert find_isomorphism(swapped.value, fixed.value) is not None
    assert fixed_points(swapped, G.whole).value.is_empty()
    assert not fixed_points(fixed, G.whole).value.is_empty()


def test_coproduct_of_gobjects_is_equivariant():
    """Test the summandwise action on a coproduct of G-objects."""
    G = cyclic_group(2)
    X, cop = gobject_coproduct([tensor_orbit(G, G.trivial_subgroup, point(1)).gobject, trivial_gobject(G, point(1))])
    X.validate()
    assert len(cop.injections) == 2
    assert fixed_points(X, G.whole).value.size((0,)) == 1


@pytest.mark.parametrize("seed", range(100))
def test_adjunction_over_small_groups(seed):
    """hom_G(G/H ⊗ A, B) and hom(A, B^H) match for every subgroup H."""
    rng = random.Random(seed)
    G = rng.choice([cyclic_group(2), cyclic_group(4), symmetric_group(3)])
    B = random_gobject(rng, G, KIND_SSET, 1, pieces=1)
    A = random_sset(rng, 1, max_dim=1)
    for H in subgroups(G):
        report = check_fixed_point_adjunction(G, H, A, B)
        assert report.verdict == PASS, report.to_dict()


@pytest.mark.parametrize("order", [2, 3])
def test_tensor_homs_agree_with_a_full_scan_over_s3(order):
    """Test copywise enumeration against filtering every map."""
    G = symmetric_group(3)
    H = next(S for S in subgroups(G) if S.order == order)
    T = tensor_orbit(G, G.trivial_subgroup, point(1))
    B = tensor_orbit(G, H, point(1)).gobject
    copywise = {m.key for m in tensor_equivariant_homs(T, B)}
    scanned = {m.key for m in equivariant_homs(T.gobject, B)}
    assert copywise == scanned
    assert len(copywise) == G.order // order


def test_adjunction_over_s3_along_the_trivial_subgroup():
    """Test hom counts for the free S_3 orbit on an interval."""
    G = symmetric_group(3)
    B = tensor_orbit(G, G.trivial_subgroup, point(1)).gobject
    report = check_fixed_point_adjunction(G, G.trivial_subgroup, standard_simplex(1, 1), B)
    assert report.verdict == PASS
    assert report.left_count == report.right_count == 6


@pytest.mark.parametrize("dim", [0, 1, 2])
@pytest.mark.parametrize("group", [cyclic_group(2), symmetric_group(3)], ids=["Z2", "S3"])
def test_cellularity_2_for_simplicial_category_cells(group, dim):
    """Glued cells never chain into unbounded words, so no pushout is truncated."""
    rng = random.Random(dim)
    source = UK(boundary(dim, 2))
    for K in subgroups(group):
        X = random_gobject(rng, group, KIND_SCAT, 2)
        X, functor = random_attach(rng, group, K, source, X)
        for H in subgroups(group):
            report = check_cellularity_2_scat(group, K, H, X, dim=dim, attach=functor)
            assert report.verdict != NONEXACT, report.to_dict()
            assert report.verdict in (PASS, EVIDENCE_PASS), report.to_dict()


def test_attaching_onto_a_point_adds_a_loop_free_target():
    """Test the fallback when every attaching functor would create a loop."""
    G = cyclic_group(2)
    X = trivial_gobject(G, point_scategory(2))
    X, functor = random_attach(random.Random(0), G, G.trivial_subgroup, UK(boundary(1, 2)), X)
    assert len(X.value.objects) == 3
    F = functor.on_objects
    assert letter_bound(X.value, [(F[0], F[1]), (F[2], F[3])]) == 1
