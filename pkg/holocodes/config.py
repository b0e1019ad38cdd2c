"""Holocodes configuration.

Settings are the UPPERCASE names of :mod:`holocodes.default_config`; an
optional config module and then command line flags override them.
"""
import importlib
import logging

from holocodes import default_config


logger = logging.getLogger(__name__)


class ConfigModuleError(Exception):
    """Indicate issues dealing with the config module."""


def _settings(module):
    return {
        name: getattr(module, name) for name in dir(module) if name.isupper()}


class HolocodesConfig(object):
    """Search bounds and defaults for one holocodes run."""

    def __init__(self, config_module=None):
        self._config_module = None
        self._apply(_settings(default_config))
        if config_module is not None:
            try:
                self._config_module = importlib.import_module(config_module)
            except ImportError:
                raise ConfigModuleError(
                    'Config module "{}" can\'t be imported.  Make sure it is '
                    'on the Python path.'
                    .format(config_module)
                )
            logger.debug('Loaded config module %s', config_module)
            self._apply(_settings(self._config_module))

    def _apply(self, settings):
        for name, value in settings.items():
            setattr(self, name, value)

    def override(self, **values):
        """Override settings with the values that are not ``None``.

        Keyword names are matched case insensitively, so ``search_bound``
        sets ``SEARCH_BOUND``.
        """
        self._apply({
            name.upper(): value
            for name, value in values.items() if value is not None
        })
        return self

    def as_dict(self):
        """Return every setting by name."""
        return _settings(self)
