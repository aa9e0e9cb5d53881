import random

import pytest

from splurge_equivariant.bisimp import TruncBiSSet
from splurge_equivariant.equivariant import GMap
from splurge_equivariant.exceptions import SplurgeEquivariantValueError
from splurge_equivariant.fingroup import cyclic_group, symmetric_group
from splurge_equivariant.random_objects import (
    KIND_BISSET,
    KIND_SCAT,
    KIND_SSET,
    random_attach,
    random_category,
    random_chain,
    random_gobject,
    random_sset,
    random_value,
)
from splurge_equivariant.scat import SCategory
from splurge_equivariant.serialization import encode
from splurge_equivariant.simpset import TruncSSet, boundary


@pytest.mark.parametrize("seed", range(5))
def test_random_sset_is_a_valid_subobject(seed):
    """Test that random simplicial sets validate."""
    X = random_sset(random.Random(seed), 2)
    X.validate()
    assert X.trunc == 2
    assert X.level_size(0) >= 1


def test_same_seed_same_object():
    """Test that a seed determines the generated object."""
    first = random_gobject(random.Random(7), cyclic_group(2), KIND_SSET, 1)
    second = random_gobject(random.Random(7), cyclic_group(2), KIND_SSET, 1)
    assert encode(first) == encode(second)


def test_carrier_kinds():
    """Test the value produced for each carrier kind."""
    rng = random.Random(3)
    assert isinstance(random_value(rng, KIND_SSET, 1), TruncSSet)
    assert isinstance(random_value(rng, KIND_BISSET, 1), TruncBiSSet)
    assert isinstance(random_value(rng, KIND_SCAT, 1), SCategory)
    with pytest.raises(SplurgeEquivariantValueError):
        random_value(rng, "spectrum", 1)


@pytest.mark.parametrize("seed", range(3))
def test_random_gobjects_carry_actions(seed):
    """Test that random G-objects carry one action map per element."""
    G = symmetric_group(3)
    X = random_gobject(random.Random(seed), G, KIND_SSET, 1)
    X.validate()
    assert len(X.action) == 6


def test_random_chain_is_equivariant():
    """Test that consecutive maps of a random chain compose."""
    G = cyclic_group(2)
    chain = random_chain(random.Random(1), G, KIND_SSET, 1, stages=3)
    assert len(chain) == 2
    for step in chain:
        step.validate()
    assert chain[0].target is chain[1].source


@pytest.mark.parametrize("seed", range(3))
def test_random_attach_gives_an_equivariant_map(seed):
    """Test that random attaching maps are equivariant."""
    G = cyclic_group(2)
    rng = random.Random(seed)
    X = random_gobject(rng, G, KIND_SSET, 1, pieces=1)
    X, attach = random_attach(rng, G, G.whole, boundary(1, 1), X)
    assert isinstance(attach, GMap)
    attach.validate()
    assert attach.target is X


@pytest.mark.parametrize("seed", range(5))
def test_random_categories_validate(seed):
    """Test that random categories satisfy the category laws."""
    C = random_category(random.Random(seed))
    C.validate()
    assert 1 <= len(C.objects) <= 3
