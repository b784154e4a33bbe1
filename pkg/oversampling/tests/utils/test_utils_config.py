"""INI loading, includes and settings parsing."""
# Standard Library
import os

# Pyramid
import plaster

import pytest

# Oversampling
from oversampling.system import DEFAULT_SETTINGS
from oversampling.system import Settings
from oversampling.utils.config import packaged_config_path
from oversampling.utils.config import prepare_config_uri
from oversampling.utils.config.exceptions import IncludeCycle
from oversampling.utils.config.exceptions import InvalidResourceScheme
from oversampling.utils.config.exceptions import NonExistingInclude
from oversampling.utils.config.loader import ConfigLoader


def write_ini(path, text: str) -> str:
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_prepare_config_uri():
    assert prepare_config_uri("oversampling/conf/test.ini") == "osc://oversampling/conf/test.ini"
    assert prepare_config_uri("osc://test.ini") == "osc://test.ini"


def test_packaged_config_path():
    path = packaged_config_path("test.ini")
    assert path.endswith(os.path.join("conf", "test.ini"))
    assert os.path.exists(path)


def test_test_ini_includes_base(test_config_path):
    """Keys of test.ini win, the rest come from the included base.ini."""
    loader = plaster.get_loader(prepare_config_uri(test_config_path))
    settings = loader.get_settings("app:main")
    assert settings["oversampling.jmax"] == "6"
    assert settings["oversampling.radicand"] == "2"


def test_settings_from_config_uri(test_config_path):
    settings = Settings.from_config_uri(test_config_path)
    assert settings.jmax == 6
    assert settings.enumerate_limit == 5000
    assert settings.verify_coverage is True
    assert settings.search_radius == DEFAULT_SETTINGS.search_radius


def test_settings_fixture(settings):
    assert settings.jmax == 6


def test_relative_file_include(tmp_path):
    write_ini(tmp_path / "extra.ini", "[app:main]\noversampling.jmax = 9\noversampling.search_radius = 3\n")
    main = write_ini(tmp_path / "main.ini", "[includes]\ninclude_ini_files =\n    file://extra.ini\n\n[app:main]\noversampling.jmax = 2\n")
    parser = ConfigLoader(main).parser
    assert parser.get("app:main", "oversampling.jmax") == "2"
    assert parser.get("app:main", "oversampling.search_radius") == "3"


def test_invalid_include_scheme(tmp_path):
    main = write_ini(tmp_path / "main.ini", "[includes]\ninclude_ini_files =\n    http://example.com/base.ini\n")
    with pytest.raises(InvalidResourceScheme):
        ConfigLoader(main)


def test_missing_include(tmp_path):
    main = write_ini(tmp_path / "main.ini", "[includes]\ninclude_ini_files =\n    file://nowhere.ini\n")
    with pytest.raises(NonExistingInclude):
        ConfigLoader(main)


def test_missing_resource_include(tmp_path):
    main = write_ini(tmp_path / "main.ini", "[includes]\ninclude_ini_files =\n    resource://oversampling/conf/nowhere.ini\n")
    with pytest.raises(NonExistingInclude):
        ConfigLoader(main)


def test_from_settings_types():
    settings = Settings.from_settings({
        "oversampling.jmax": "3",
        "oversampling.expansive_margin": "1e-6",
        "oversampling.verify_coverage": "false",
        "unrelated.key": "x",
    })
    assert settings.jmax == 3
    assert settings.expansive_margin == 1e-6
    assert settings.verify_coverage is False
    assert settings.radicand == DEFAULT_SETTINGS.radicand


def test_from_settings_expands_environment(monkeypatch):
    monkeypatch.setenv("OVERSAMPLING_RADIUS", "11")
    settings = Settings.from_settings({"oversampling.search_radius": "$OVERSAMPLING_RADIUS"})
    assert settings.search_radius == 11


def test_override_skips_none():
    settings = DEFAULT_SETTINGS.override(jmax=None, search_radius=2)
    assert settings.jmax == DEFAULT_SETTINGS.jmax
    assert settings.search_radius == 2


def test_nested_includes(tmp_path):
    """An include's own includes lose to the include itself."""
    write_ini(tmp_path / "deepest.ini", "[app:main]\noversampling.jmax = 1\noversampling.radicand = 3\n")
    write_ini(tmp_path / "middle.ini", "[includes]\ninclude_ini_files =\n    file://deepest.ini\n\n[app:main]\noversampling.jmax = 4\n")
    main = write_ini(tmp_path / "main.ini", "[includes]\ninclude_ini_files =\n    file://middle.ini\n\n[app:main]\n")
    parser = ConfigLoader(main).parser
    assert parser.get("app:main", "oversampling.jmax") == "4"
    assert parser.get("app:main", "oversampling.radicand") == "3"


def test_include_cycle(tmp_path):
    write_ini(tmp_path / "a.ini", "[includes]\ninclude_ini_files =\n    file://b.ini\n")
    write_ini(tmp_path / "b.ini", "[includes]\ninclude_ini_files =\n    file://a.ini\n")
    with pytest.raises(IncludeCycle):
        ConfigLoader(str(tmp_path / "a.ini"))


def test_logging_without_loggers_section(tmp_path):
    path = write_ini(tmp_path / "plain.ini", "[app:main]\noversampling.jmax = 2\n")
    loader = plaster.get_loader(prepare_config_uri(path))
    loader.setup_logging()
    assert Settings.from_config_uri(path).jmax == 2
