from heatengine.config import (
    ConfigController,
    DEFAULTS_PATH,
    readJSONFile,
    deepMerge,
    pruneForDefaults,
    getByPath,
    setByPath,
)

import pytest
import json

def test_packaged_defaults():
    config = ConfigController()

    assert DEFAULTS_PATH.exists()
    assert config.getValue("gup.deltaMax") == 1e-3
    assert config.getValue("paths.steps") == 10_000
    assert config.getValue("report.significantDigits") == 9
    assert config.getValue("figures.poleExclusion") == 1e-9
    assert config.getValue("statmech.qualityThresholds.ok") == 1e-3
    assert config.getValue("figures.sweeps.fig6.range") == {"min": 11.0, "max": 50.0, "steps": 40}
    assert config.describeOverrides() == {}

def test_deep_merge_keeps_unrelated_keys():
    base = {"a": {"b": 1, "c": 2}, "d": 3}
    merged = deepMerge(base, {"a": {"b": 5}, "e": {"f": 6}})

    assert merged == {"a": {"b": 5, "c": 2}, "d": 3, "e": {"f": 6}}
    assert base == {"a": {"b": 1, "c": 2}, "d": 3}

def test_prune_for_defaults():
    defaults = {"gup": {"deltaMax": 1e-3}, "paths": {"steps": 10000.0}}

    assert pruneForDefaults(defaults, defaults) is None
    assert pruneForDefaults(defaults, {"gup": {"deltaMax": 1e-3}, "paths": {"steps": 10000}}) is None
    assert pruneForDefaults(defaults, {"gup": {"deltaMax": 1e-2}, "paths": {"steps": 10000}}) == {"gup": {"deltaMax": 1e-2}}
    assert pruneForDefaults({"flag": 1}, {"flag": True}) == {"flag": True}
    assert pruneForDefaults({}, {"new": 1}) == {"new": 1}

def test_paths():
    data = {"a": {"b": {"c": 1}}}

    assert getByPath(data, "a.b.c") == 1

    with pytest.raises(KeyError):
        getByPath(data, "a.x")

    with pytest.raises(KeyError):
        getByPath(data, "a.b.c.d")

    setByPath(data, "a.y.z", 2)
    setByPath(data, "a.b.c", 3)

    assert data == {"a": {"b": {"c": 3}, "y": {"z": 2}}}

def test_overrides_layer_over_defaults():
    config = ConfigController({"gup": {"deltaMax": 1e-2}})

    assert config.getValue("gup.deltaMax") == 1e-2
    assert config.getValue("paths.steps") == 10_000
    assert config.describeOverrides() == {"gup": {"deltaMax": 1e-2}}

def test_bulk_set_skips_unset_values():
    config = ConfigController()

    config.bulkSetValues({"deltaMax": None}, "gup")
    config.bulkSetValues({"paths.steps": 500, "validate.seed": None})

    assert config.getValue("gup.deltaMax") == 1e-3
    assert config.getValue("paths.steps") == 500
    assert config.describeOverrides() == {"paths": {"steps": 500}}

    config.bulkSetValues({"deltaMax": 0.05}, "gup.")
    assert config.getValue("gup.deltaMax") == 0.05

def test_missing_defaults_file(tmp_path, caplog):
    config = ConfigController(defaultsPath=tmp_path / "missing.json")

    assert config.config == {}
    assert "No packaged defaults" in caplog.text
    assert readJSONFile(tmp_path / "missing.json") == {}

def test_custom_defaults_file(tmp_path):
    path = tmp_path / "defaults.json"
    path.write_text(json.dumps({"paths": {"steps": 20}}), encoding="utf-8")

    config = ConfigController({"paths": {"steps": 40}}, defaultsPath=path)

    assert config.getValue("paths.steps") == 40
    assert config.describeOverrides() == {"paths": {"steps": 40}}
