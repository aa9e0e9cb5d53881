import pytest

from splurge_equivariant import config
from splurge_equivariant.exceptions import SplurgeEquivariantConfigurationError


def test_default_config_to_dict():
    d = config.DEFAULT_CONFIG.to_dict()
    assert d["default_encoding"] == "utf-8"
    assert d["default_trunc"] == 3
    assert d["attach_budget"] == 6
    assert d["workers"] == 1


def test_from_env_overrides(monkeypatch):
    monkeypatch.setenv("SPLURGE_EQ_DEFAULT_ENCODING", "latin-1")
    monkeypatch.setenv("SPLURGE_EQ_DEFAULT_TRUNC", "4")
    monkeypatch.setenv("SPLURGE_EQ_SEARCH_BUDGET", "1000")
    monkeypatch.setenv("SPLURGE_EQ_WORKERS", "2")

    cfg = config.EquivariantConfig.from_env()
    assert cfg.default_encoding == "latin-1"
    assert cfg.default_trunc == 4
    assert cfg.search_budget == 1000
    assert cfg.workers == 2


def test_from_env_rejects_malformed_numbers(monkeypatch):
    monkeypatch.setenv("SPLURGE_EQ_SEED_COUNT", "many")
    with pytest.raises(SplurgeEquivariantConfigurationError):
        config.EquivariantConfig.from_env()


def test_check_suite_config_from_dict(tmp_path):
    cfg = config.CheckSuiteConfig.from_dict(
        {"model": "SC", "group": "groups/s3.json", "trunc": 3, "note": "kept"}, base_dir=tmp_path
    )
    assert cfg.model == "sc"
    assert cfg.group == str(tmp_path / "groups/s3.json")
    assert cfg.family == "all"
    assert cfg.extra == {"note": "kept"}
    assert cfg.to_dict()["max_dim"] == 2
    assert not cfg.needs_segal


def test_check_suite_config_requires_model_and_group():
    with pytest.raises(SplurgeEquivariantConfigurationError):
        config.CheckSuiteConfig.from_dict({"model": "qcat"})


@pytest.mark.parametrize(
    "data",
    [
        {"model": "nope", "group": "Z2"},
        {"model": "css", "group": "Z2", "trunc": 1},
        {"model": "qcat", "group": "Z2", "budget": 0},
        {"model": "qcat", "group": "Z2", "max_dim": -1},
        {"model": "qcat", "group": "Z2", "trunc": "three"},
        {"model": "qcat", "group": "Z2", "family": "some"},
    ],
)
def test_check_suite_config_rejects_invalid_values(data):
    with pytest.raises(SplurgeEquivariantConfigurationError):
        config.CheckSuiteConfig.from_dict(data)
