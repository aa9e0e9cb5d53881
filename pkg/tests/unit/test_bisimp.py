import random

import pytest

from splurge_equivariant.bisimp import (
    SegalPrecategory,
    build_P,
    build_Q,
    build_pq,
    categories_isomorphic,
    check_reduce_universal,
    check_sm6,
    completeness_evidence,
    const_space,
    coreflect,
    cotensor,
    diagonal,
    folded_transpose,
    ho_category,
    is_precategory,
    is_segal_category,
    j_star,
    p_star,
    precat_mapping_space,
    projective_generator,
    pullback_corner,
    reduce,
    reedy_generator,
    row0,
    segal_check,
    tensor,
    terminal_bisset,
    total,
    transpose,
)
from splurge_equivariant.categories import (
    group_category,
    ordinal,
    walking_isomorphism,
)
from splurge_equivariant.exceptions import SplurgeEquivariantValueError
from splurge_equivariant.fingroup import cyclic_group
from splurge_equivariant.presheaf import find_isomorphism, map_to_terminal
from splurge_equivariant.random_objects import random_category, random_sset
from splurge_equivariant.reports import EVIDENCE_FAIL, EVIDENCE_PASS, FAIL, PASS
from splurge_equivariant.simpset import (
    boundary,
    circle,
    horn,
    horn_inclusion,
    is_isomorphic,
    nerve,
    point,
    standard_simplex,
)


def test_transpose_of_a_nerve_is_segal():
    """Test that the transpose of a nerve passes the Segal check at every index."""
    W = transpose(nerve(ordinal(2), 2))
    assert isinstance(W, SegalPrecategory)
    assert segal_check(W, 2).verdict == PASS
    ok, reports = is_segal_category(W)
    assert ok
    assert [r.k for r in reports] == [2]


def test_transpose_of_a_horn_fails_segal():
    """Test that an inner horn has no composite, so its Segal map is not a bijection."""
    report = segal_check(transpose(horn(2, 1, 2)), 2)
    assert report.verdict == FAIL
    assert not report.isomorphism


def test_segal_index_is_validated():
    """Test rejection of a Segal index above the truncation."""
    with pytest.raises(SplurgeEquivariantValueError):
        segal_check(transpose(standard_simplex(1, 2)), 3)


def test_constant_space_of_a_circle_is_not_a_precategory():
    """Test that only a discrete level-0 space gives a Segal precategory."""
    X = const_space(circle(2))
    assert not is_precategory(X)
    assert is_precategory(const_space(boundary(1, 2)))


@pytest.mark.parametrize("K", [standard_simplex(1, 2), horn(2, 0, 2), circle(2)])
def test_comparison_functors_of_a_transpose(K):
    """Test diagonal, row 0 and total simplicial set on transposed and constant spaces."""
    assert is_isomorphic(diagonal(transpose(K)), K) is not None
    assert is_isomorphic(row0(transpose(K)), K) is not None
    assert is_isomorphic(diagonal(const_space(K)), K) is not None
    T = total(transpose(K))
    assert [T.level_size(n) for n in range(3)] == [K.level_size(n) for n in range(3)]


def test_reduction_collapses_the_zero_space():
    """Test that reduction leaves one object per component of the level-0 space."""
    reduced = reduce(const_space(circle(2)))
    assert isinstance(reduced, SegalPrecategory)
    assert reduced.sizes[(0, 0)] == 1
    assert reduce(const_space(boundary(1, 2))).sizes[(0, 0)] == 2


def test_reduction_universal_property():
    """Test the hom bijection through the reduction unit on one pair."""
    report = check_reduce_universal(const_space(standard_simplex(1, 2)), transpose(nerve(walking_isomorphism(), 2)))
    assert report.verdict == PASS
    assert report.reduced_count == report.original_count


def test_coreflection_is_a_precategory():
    """Test that the largest Segal sub-precategory keeps a single object."""
    cone = coreflect(const_space(circle(2)))
    assert isinstance(cone.apex, SegalPrecategory)
    assert cone.apex.sizes[(0, 1)] == 1
    assert cone.legs[0].is_injective()


def test_p_is_empty_for_m_zero():
    """Test that P_{0,n} is empty."""
    assert build_P(0, 1, 2).is_empty()


def test_pq_construction_commutes():
    """Test that i_mn composed with the P leg equals the Q leg after the projective generator."""
    pq = build_pq(2, 1, 2)
    assert isinstance(pq.P, SegalPrecategory)
    assert isinstance(pq.Q, SegalPrecategory)
    left = pq.i_mn.compose(pq.p_leg)
    right = pq.q_leg.compose(pq.projective)
    assert left.same_as(right)


def test_p_one_n_is_the_folded_transpose():
    """Test the fold-map description of P_{1,n}."""
    assert find_isomorphism(build_P(1, 0, 2), transpose(standard_simplex(0, 2))) is not None
    assert find_isomorphism(build_P(1, 1, 2), folded_transpose(1, 2)) is not None
    assert find_isomorphism(build_P(1, 1, 2), transpose(standard_simplex(1, 2))) is None


def test_folded_transpose_sizes():
    """Test cell counts of two transposed simplices glued along their vertices."""
    F = folded_transpose(1, 2)
    assert F.sizes[(0, 0)] == 2
    assert F.sizes[(1, 0)] == 4


def test_sm6_triangle_on_a_small_example():
    """Test the three hom counts of the tensor/cotensor triangle on a point and an interval."""
    report = check_sm6(terminal_bisset(1), standard_simplex(1, 1), transpose(nerve(ordinal(1), 1)))
    assert report.verdict == PASS
    assert report.tensor_side == 2


def test_homotopy_category_of_a_nerve():
    """Test that the homotopy category of a transposed nerve recovers the category."""
    C = ordinal(2)
    assert categories_isomorphic(ho_category(transpose(nerve(C, 2))), C)


def test_completeness_evidence():
    """Test completeness evidence for the walking arrow and the walking isomorphism."""
    assert completeness_evidence(transpose(nerve(ordinal(1), 2))).verdict == EVIDENCE_PASS
    assert completeness_evidence(transpose(nerve(walking_isomorphism(), 2))).verdict == EVIDENCE_FAIL


def test_pullback_corner_for_inner_horns():
    """Test surjectivity of the pullback corner map for inner horn inclusions."""
    X = nerve(ordinal(1), 2)
    to_point = map_to_terminal(X, point(2))
    assert pullback_corner(horn_inclusion(2, 1, 2), to_point).surjective
    B = boundary(2, 2)
    assert not pullback_corner(horn_inclusion(2, 1, 2), map_to_terminal(B, point(2))).surjective


@pytest.mark.parametrize("K", [circle(2), boundary(1, 2), standard_simplex(1, 2)], ids=["S1", "d1", "simplex1"])
def test_reduction_is_idempotent(K):
    """Test that reducing twice gives the same Segal precategory."""
    once = reduce(const_space(K))
    assert find_isomorphism(reduce(once), once) is not None


@pytest.mark.parametrize("seed", range(20))
def test_reduction_universal_property_on_random_pairs(seed):
    """Every map into a Segal precategory factors uniquely through the reduction."""
    rng = random.Random(seed)
    K = random_sset(rng, 1, max_dim=1)
    X = const_space(K) if rng.random() < 0.5 else transpose(K)
    Y = transpose(nerve(random_category(rng), 1))
    report = check_reduce_universal(X, Y)
    assert report.verdict == PASS, report.to_dict()


def test_tensor_with_a_point_changes_nothing():
    """Test tensoring a Segal precategory with a point."""
    X = transpose(nerve(ordinal(1), 1))
    assert find_isomorphism(tensor(X, point(1)), X) is not None


def test_tensor_collapses_the_level_zero_space():
    """Test that the tensor of a point with an interval is reduced to one object."""
    T = tensor(terminal_bisset(1), standard_simplex(1, 1))
    assert T.sizes[(0, 0)] == 1
    assert is_precategory(T)


def test_cotensor_with_a_point_changes_nothing():
    """Test cotensoring with a point."""
    Y = transpose(nerve(walking_isomorphism(), 1))
    assert find_isomorphism(cotensor(Y, point(1)), Y) is not None


@pytest.mark.parametrize("seed", range(20))
def test_sm6_triangle_on_random_instances(seed):
    """Tensor, mapping space and cotensor see the same number of maps."""
    rng = random.Random(seed)
    X = transpose(random_sset(rng, 1, max_dim=1))
    K = random_sset(rng, 1, max_dim=1)
    Y = transpose(nerve(random_category(rng), 1))
    report = check_sm6(X, K, Y)
    assert report.verdict == PASS, report.to_dict()


def test_mapping_spaces_of_the_walking_arrow():
    """Test the fibers over vertex pairs of the walking arrow."""
    X = transpose(nerve(ordinal(1), 2))
    sizes = sorted(precat_mapping_space(X, x, y).size((0,)) for x in range(2) for y in range(2))
    assert sizes == [0, 1, 1, 1]
    with pytest.raises(SplurgeEquivariantValueError):
        precat_mapping_space(X, 0, 2)


def test_mapping_spaces_of_the_walking_isomorphism_are_points():
    """Test that every pair of objects of the walking isomorphism has a point as mapping space."""
    X = transpose(nerve(walking_isomorphism(), 2))
    for x in range(2):
        for y in range(2):
            assert precat_mapping_space(X, x, y).size((0,)) == 1


@pytest.mark.parametrize("K", [standard_simplex(2, 2), circle(2), horn(2, 0, 2)], ids=["simplex2", "S1", "horn"])
def test_p_star_and_j_star_agree_on_precategories(K):
    """Test that both comparison functors return row 0 of a transposed simplicial set."""
    W = transpose(K)
    assert find_isomorphism(p_star(W), j_star(W)) is not None
    assert is_isomorphic(p_star(W), K) is not None


def test_reedy_generator_grid_at_one_one():
    """Test cell counts of the Reedy generator for m = n = 1."""
    g = reedy_generator(1, 1, 1)
    assert g.source.grid() == [[4, 6], [6, 8]]
    assert g.target.grid() == [[4, 6], [6, 9]]
    assert g.is_injective()


@pytest.mark.parametrize("n", [0, 1])
def test_i_mn_is_a_reduced_generator_for_m_two(n):
    """For m = 2 both ends of i_mn are reductions of the generator's ends."""
    reedy = reedy_generator(2, n, 2)
    assert find_isomorphism(build_P(2, n, 2), reduce(reedy.source)) is not None
    assert find_isomorphism(build_Q(2, n, 2), reduce(reedy.target)) is not None
    assert find_isomorphism(build_P(2, n, 2), reduce(projective_generator(2, n, 2).source)) is not None


@pytest.mark.parametrize("seed", range(10))
def test_segal_checks_on_random_nerves(seed):
    """Test the Segal check on transposed nerves of small random categories."""
    ok, reports = is_segal_category(transpose(nerve(random_category(random.Random(seed)), 2)))
    assert ok
    assert all(r.verdict == PASS for r in reports)


@pytest.mark.parametrize("seed", range(10))
def test_homotopy_category_does_not_depend_on_the_section(seed):
    """Shuffling the representative 2-cells yields the same composition table."""
    C = random_category(random.Random(seed))
    X = transpose(nerve(C, 3))
    reference = ho_category(X)
    for shuffle in range(3):
        assert ho_category(X, seed=shuffle).composition == reference.composition
    assert categories_isomorphic(reference, C)


def test_one_object_nerve_of_z2_is_not_complete():
    """The swap is an isomorphism that is not an identity."""
    W = transpose(nerve(group_category(cyclic_group(2)), 2))
    report = completeness_evidence(W)
    assert report.verdict == EVIDENCE_FAIL
    assert report.source_pi0 == 1
    assert report.target_pi0 == 2
