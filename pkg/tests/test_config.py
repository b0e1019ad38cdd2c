"""Tests for :mod:`holocodes.config`."""
from types import SimpleNamespace

import mock
import pytest

from holocodes import default_config
from holocodes.config import ConfigModuleError, HolocodesConfig


def test_default_settings():
    """Check if every default setting is loaded."""
    config = HolocodesConfig()
    assert config.SEARCH_BOUND == default_config.SEARCH_BOUND
    assert config.ORACLE_BOUND == default_config.ORACLE_BOUND
    assert config.TREE_DEPTH_BOUND == default_config.TREE_DEPTH_BOUND
    assert config.REGION_DEPTH_BOUND == default_config.REGION_DEPTH_BOUND
    assert config.JSON_INDENT == 2


def test_config_module():
    """Check if a config module overrides the defaults it names."""
    module = SimpleNamespace(SEARCH_BOUND=10, lowercase='ignored')
    with mock.patch('holocodes.config.importlib') as importlib:
        importlib.import_module.return_value = module
        config = HolocodesConfig('my_config')
    importlib.import_module.assert_called_once_with('my_config')
    assert config.SEARCH_BOUND == 10
    assert config.ORACLE_BOUND == default_config.ORACLE_BOUND
    assert not hasattr(config, 'lowercase')


def test_config_module_on_path():
    """Check if a real module is imported by its dotted path."""
    config = HolocodesConfig('tests.data.small_config')
    assert config.SEARCH_BOUND == 10
    assert config.TREE_DEPTH_BOUND == 1


def test_config_module_missing():
    """Check if a missing config module raises ConfigModuleError."""
    with pytest.raises(ConfigModuleError):
        HolocodesConfig('holocodes_missing_config_module')


def test_override():
    """Check if override sets upper cased names and skips None."""
    config = HolocodesConfig()
    assert config.override(search_bound=7, oracle_bound=None) is config
    assert config.SEARCH_BOUND == 7
    assert config.ORACLE_BOUND == default_config.ORACLE_BOUND


def test_as_dict():
    """Check if as_dict lists every setting."""
    settings = HolocodesConfig().override(depth=3).as_dict()
    assert settings['DEPTH'] == 3
    assert settings['FIELD_SIZE_BOUND'] == default_config.FIELD_SIZE_BOUND
    assert all(name.isupper() for name in settings)
