import pytest
from hypothesis import given
from hypothesis import strategies as st

from splurge_equivariant.exceptions import (
    SplurgeEquivariantTruncationMismatchError,
    SplurgeEquivariantValueError,
)
from splurge_equivariant.utils import InputValidator, derive_seed, freeze, thaw


def test_input_validator():
    assert InputValidator.non_negative(0) == 0
    assert InputValidator.in_range(2, 1, 3) == 2
    with pytest.raises(SplurgeEquivariantValueError):
        InputValidator.non_negative(-1, "truncation level")
    with pytest.raises(SplurgeEquivariantValueError):
        InputValidator.in_range(4, 1, 3, "horn index")


def test_same_trunc():
    assert InputValidator.same_trunc(2, 2, 2) == 2
    with pytest.raises(SplurgeEquivariantTruncationMismatchError):
        InputValidator.same_trunc(2, 3)


@given(st.integers(min_value=0, max_value=2**31), st.text(max_size=10), st.integers())
def test_derive_seed_is_reproducible(base, name, index):
    seed = derive_seed(base, name, index)
    assert seed == derive_seed(base, name, index)
    assert 0 <= seed < 2**32


def test_derive_seed_separates_cells():
    assert derive_seed(0, "adjunction", 1) != derive_seed(0, "adjunction", 2)


@given(st.recursive(st.integers(), lambda inner: st.lists(inner, max_size=3), max_leaves=10))
def test_freeze_makes_labels_hashable(value):
    frozen = freeze(value)
    hash(frozen)
    assert thaw(frozen) == value
