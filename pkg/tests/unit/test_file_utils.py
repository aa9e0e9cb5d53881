import json

import pytest
import yaml

from splurge_equivariant.exceptions import (
    SplurgeEquivariantConfigurationError,
    SplurgeEquivariantFileNotFoundError,
    SplurgeEquivariantParsingError,
)
from splurge_equivariant.file_utils import (
    JsonDocumentReader,
    SafeTextFileIoAdapter,
    YamlConfigReader,
    dumps_canonical,
)


def test_yaml_config_reader_reads_dict(tmp_path):
    data = {"model": "qcat", "group": "Z2", "trunc": 2}
    p = tmp_path / "check.yaml"
    p.write_text(yaml.safe_dump(data), encoding="utf-8")

    reader = YamlConfigReader()
    assert reader.read(p) == data


def test_yaml_config_reader_syntax_error_raises(tmp_path):
    p = tmp_path / "really_bad.yaml"
    p.write_text("model: [qcat\n", encoding="utf-8")
    reader = YamlConfigReader()
    with pytest.raises(SplurgeEquivariantConfigurationError):
        reader.read(p)


def test_yaml_config_reader_requires_a_mapping(tmp_path):
    p = tmp_path / "list.yaml"
    p.write_text("- qcat\n- Z2\n", encoding="utf-8")
    with pytest.raises(SplurgeEquivariantConfigurationError):
        YamlConfigReader().read(p)


def test_safe_text_file_io_adapter_write_read(tmp_path):
    adapter = SafeTextFileIoAdapter()
    p = tmp_path / "nested" / "sample.txt"
    adapter.write_text(p, "hello world")
    assert adapter.exists(p)
    assert adapter.read_text(p) == "hello world"


def test_missing_file_raises_not_found(tmp_path):
    with pytest.raises(SplurgeEquivariantFileNotFoundError):
        SafeTextFileIoAdapter().read_text(tmp_path / "absent.json")


def test_json_reader_reports_position(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"kind": "sset",\n "trunc": }', encoding="utf-8")
    with pytest.raises(SplurgeEquivariantParsingError) as info:
        JsonDocumentReader().read(p)
    assert info.value.details["line"] == 2


def test_json_reader_requires_an_object(tmp_path):
    p = tmp_path / "array.json"
    p.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(SplurgeEquivariantParsingError) as info:
        JsonDocumentReader().read(p)
    assert info.value.details["field"] == "$"


def test_canonical_dump_is_stable(tmp_path):
    payload = {"b": [1, 2], "a": {"y": 1, "x": 2}}
    text = dumps_canonical(payload)
    assert text == dumps_canonical(json.loads(text))
    assert text.index('"a"') < text.index('"b"')
    assert text.endswith("\n")

    p = tmp_path / "out.json"
    JsonDocumentReader().write(p, payload)
    assert p.read_text(encoding="utf-8") == text
