"""plaster loader for the ``osc://`` scheme.

``plaster.get_loader('osc://path/to/settings.ini')`` reads the file like a ``file://`` PasteDeploy INI, with ``[includes]`` merged in first.
"""
# Standard Library
import logging
import os
import typing as t
from logging.config import fileConfig

import plaster_pastedeploy
from paste.deploy import loadwsgi

# Oversampling
from oversampling.utils.config.includer import IncludeAwareConfigParser


logger = logging.getLogger(__name__)


def path_defaults(path: str) -> t.Dict[str, str]:
    """``here`` and ``__file__`` interpolation values for an INI path."""
    path = os.path.abspath(path)
    return {'here': os.path.dirname(path), '__file__': path}


def configure_logging(parser: IncludeAwareConfigParser, path: str, defaults: dict, disable_existing_loggers: bool):
    """Apply the ``[loggers]`` sections of a parsed INI, or plain ``basicConfig`` when there are none."""
    if not parser.has_section('loggers'):
        logging.basicConfig()
        logger.debug("No [loggers] in %s", path)
        return
    fileConfig(parser, dict(defaults, **path_defaults(path)), disable_existing_loggers=disable_existing_loggers)


class ConfigLoader(loadwsgi.ConfigLoader):
    """PasteDeploy loader whose parser understands ``[includes]``."""

    def __init__(self, filename: str):
        self.filename = filename.strip()
        self.parser = IncludeAwareConfigParser(self.filename, defaults=path_defaults(self.filename))
        with open(self.filename) as f:
            self.parser.read_file(f)


class Loader(plaster_pastedeploy.Loader):
    """Settings and logging from include aware INI files."""

    def __init__(self, uri):
        # PasteDeploy only knows file URIs
        uri.scheme = 'file'
        super().__init__(uri)

    def _get_loader(self, defaults: t.Optional[dict] = None) -> ConfigLoader:
        loader = ConfigLoader(self.uri.path)
        loader.update_defaults(self._get_defaults(defaults))
        return loader

    def _get_parser(self, defaults: t.Optional[dict] = None) -> IncludeAwareConfigParser:
        return self._get_loader(defaults).parser

    def setup_logging(self, defaults: t.Optional[dict] = None, disable_existing_loggers: bool = False):
        """Configure logging from the file and its includes.

        :param defaults: Extra interpolation values for :func:`logging.config.fileConfig`
        :param disable_existing_loggers: Passed on to :func:`logging.config.fileConfig`
        """
        configure_logging(self._get_parser(), self.uri.path, defaults or {}, disable_existing_loggers)

    def __repr__(self) -> str:
        return '{0}.{1}(uri="{2}")'.format(type(self).__module__, type(self).__qualname__, self.uri)
