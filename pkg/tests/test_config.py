import pytest

from equifgl.config import RunConfig, load_config, ConfigError


def test_defaults():
    cfg = load_config(None, {})
    assert cfg.cutoff == 8
    assert cfg.format == "text"


def test_file_and_overrides(tmp_path):
    path = tmp_path / "cfg"
    path.write_text("# comment\ncutoff = 10\nu_window = 10\nformat = json\n")
    cfg = load_config(str(path), {})
    assert cfg.cutoff == 10 and cfg.format == "json"
    cfg2 = load_config(str(path), {"cutoff": 4})
    assert cfg2.cutoff == 4


def test_env_var(tmp_path, monkeypatch):
    path = tmp_path / "cfg"
    path.write_text("seed = 9\n")
    monkeypatch.setenv("EQUIFGL_CONFIG", str(path))
    cfg = load_config(None, {})
    assert cfg.seed == 9


def test_validation_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_config(None, {"cutoff": -1})
    with pytest.raises(ConfigError):
        load_config(None, {"format": "yaml"})
    bad = tmp_path / "cfg"
    bad.write_text("nonsense_key = 1\n")
    with pytest.raises(ConfigError):
        load_config(str(bad), {})


def test_missing_file():
    with pytest.raises(ConfigError):
        load_config("/nonexistent/cfg", {})
