import pytest

from splurge_equivariant.config import CheckSuiteConfig
from splurge_equivariant.exceptions import SplurgeEquivariantConfigurationError
from splurge_equivariant.file_utils import JsonDocumentReader
from splurge_equivariant.fingroup import cyclic_group, group_to_json
from splurge_equivariant.reports import VERDICTS
from splurge_equivariant.suite import (
    ADJUNCTION,
    COND_1,
    COND_2,
    COND_3,
    PQ_IDENTITY,
    SM6,
    CheckSuite,
    load_group,
    run_suite,
)


def _config(**overrides):
    data = {"model": "qcat", "group": "Z2", "trunc": 1, "seeds": 1, "max_dim": 1, "budget": 20000}
    data.update(overrides)
    return CheckSuiteConfig.from_dict(data)


def test_cell_matrix_shape():
    """Test the number of cells in a suite."""
    cells = list(CheckSuite(_config()).cells())
    by_condition = {}
    for cell in cells:
        by_condition[cell.condition] = by_condition.get(cell.condition, 0) + 1
    # two subgroups squared, two generators, one seed
    assert by_condition == {COND_3: 8, COND_2: 8, COND_1: 2, ADJUNCTION: 2}


def test_run_is_deterministic():
    """Test that two runs with one seed give the same report."""
    first = run_suite(_config())
    second = run_suite(_config())
    assert first.to_dict() == second.to_dict()
    assert {r.verdict for r in first.results} <= set(VERDICTS)
    assert first.group == "Z2"


def test_threaded_run_matches_serial_run():
    """Test that worker threads do not change the report."""
    suite = CheckSuite(_config())
    assert suite.run(workers=2).to_dict() == suite.run(workers=1).to_dict()


def test_precategory_suites_add_pushout_and_sm6_cells():
    """Test the extra cells of precategory suites."""
    cells = list(CheckSuite(_config(model="secat_f", trunc=2)).cells())
    assert [c.generator for c in cells if c.condition == PQ_IDENTITY] == ["P1,0", "P1,1", "i2,0"]
    assert sum(1 for c in cells if c.condition == SM6) == 1


def test_orbit_comparison_needs_the_trivial_subgroup():
    """Test that the orbit comparison requires the trivial subgroup."""
    config = _config(family=[["0", "1"]], orbit_comparison=True)
    with pytest.raises(SplurgeEquivariantConfigurationError):
        CheckSuite(config)


def test_group_loaded_from_json(tmp_path):
    """Test loading a group table from JSON."""
    path = tmp_path / "z3.json"
    JsonDocumentReader().write(path, group_to_json(cyclic_group(3)))
    G = load_group(str(path))
    assert G.order == 3
    assert G.name == "Z3"
