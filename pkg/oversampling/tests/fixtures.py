"""py.test fixtures for oversampling.

* Reading test.ini settings

* Named generator sets and regions of the worked examples
"""
# Standard Library
import os

# Pyramid
import plaster

import pytest

# Oversampling
from oversampling.system import Settings
from oversampling.system.devop.cmdline import setup_logging
from oversampling.system.frames import GeneratorSet
from oversampling.system.frames import builtin
from oversampling.system.sigain import RegionSet
from oversampling.system.sigain import box_pair
from oversampling.utils.config import packaged_config_path
from oversampling.utils.config import prepare_config_uri


def pytest_addoption(parser):
    parser.addoption("--ini", action="store", metavar="INI_FILE", help="use INI_FILE to configure the computations")


@pytest.fixture(scope='session')
def test_config_path(request) -> str:
    """Test INI path from the ``--ini`` option, defaulting to the packaged ``test.ini``.

    :return: Absolute path to test.ini file
    """
    ini = getattr(request.config.option, "ini", None)
    if ini:
        return os.path.abspath(ini)
    return packaged_config_path('test.ini')


@pytest.fixture(scope='session')
def ini_settings(test_config_path) -> dict:
    """The ``[app:main]`` section of the test INI, with logging configured from the same file."""
    config_uri = prepare_config_uri(test_config_path)
    setup_logging(config_uri)
    loader = plaster.get_loader(config_uri)
    settings = loader.get_settings('app:main')
    settings["_ini_file"] = config_uri
    return settings


@pytest.fixture(scope='session')
def settings(ini_settings) -> Settings:
    return Settings.from_settings(ini_settings)


@pytest.fixture(scope='session')
def fig1() -> GeneratorSet:
    return builtin("fig1")


@pytest.fixture(scope='session')
def shannon() -> GeneratorSet:
    return builtin("shannon")


@pytest.fixture(scope='session')
def class_one() -> GeneratorSet:
    return builtin("class-one")


@pytest.fixture
def fig1_support() -> RegionSet:
    return RegionSet.intervals([("-3/2", "-2/3"), (1, 2)])


@pytest.fixture
def box_pair_region() -> RegionSet:
    return box_pair()
