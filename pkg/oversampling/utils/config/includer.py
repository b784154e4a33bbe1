"""``[includes]`` support for settings INI files.

An INI may pull defaults from other files::

    [includes]
    include_ini_files =
        resource://oversampling/conf/base.ini
        file://local-overrides.ini

``resource://package/path`` names a file shipped inside a Python package. ``file://path`` names a file on disk, relative to the directory of the including file unless absolute.

Keys of the including file always win; among includes the first listed wins. Included files may include further files, each file at most once along a chain.
"""
# Standard Library
import configparser
import io
import os
import typing as t
from urllib.parse import urlparse

# Pyramid
from pyramid.settings import aslist

import pkg_resources
from paste.deploy import loadwsgi

# Oversampling
from oversampling.utils.config import exceptions as exc
from oversampling.utils.config import _resource_manager


INCLUDES_SECTION = 'includes'

INCLUDES_KEY = 'include_ini_files'


def _open_resource(package: str, resource: str, reference: str) -> t.IO[bytes]:
    path = os.path.join(*(package.split('.') + [resource]))
    requirement = pkg_resources.Requirement.parse(package)
    if not _resource_manager.resource_exists(requirement, path):
        raise exc.NonExistingInclude("Could not find {0}".format(reference))
    return _resource_manager.resource_stream(requirement, path)


def _file_path(location: str, including_file: str) -> str:
    if os.path.isabs(location):
        return location
    return os.path.join(os.path.dirname(os.path.abspath(including_file)), location)


def _open_file(path: str, reference: str) -> t.IO[bytes]:
    if not os.path.exists(path):
        raise exc.NonExistingInclude("Could not find {0}".format(reference))
    return io.open(path, 'rb')


#: Scheme → opener taking the parsed reference and the including file name
OPENERS: t.Dict[str, t.Callable] = {
    'resource': lambda parts, reference, including: _open_resource(parts.netloc, parts.path.lstrip('/'), reference),
    'file': lambda parts, reference, including: _open_file(_file_path(parts.netloc + parts.path, including), reference),
}


def include_key(reference: str, including_file: str) -> str:
    """Identity of an include, used to stop cycles."""
    parts = urlparse(reference)
    if parts.scheme == 'file':
        return os.path.normpath(_file_path(parts.netloc + parts.path, including_file))
    return reference


def open_include(reference: str, including_file: str) -> t.IO[bytes]:
    """Open an include reference for reading.

    :raises InvalidResourceScheme: scheme other than ``resource`` or ``file``
    :raises NonExistingInclude: the target cannot be found
    """
    parts = urlparse(reference)
    opener = OPENERS.get(parts.scheme)
    if opener is None:
        raise exc.InvalidResourceScheme("Supported schemes: {0}. Got {1} in {2}".format(
            ', '.join(sorted(OPENERS)), reference, including_file))
    return opener(parts, reference, including_file)


def read_included(reference: str, including_file: str) -> configparser.ConfigParser:
    with open_include(reference, including_file) as fp:
        text = fp.read().decode('utf-8')
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    parser.read_string(text, source=reference)
    return parser


class IncludeAwareConfigParser(loadwsgi.NicerConfigParser):
    """PasteDeploy config parser that merges the files listed under ``[includes]``."""

    optionxform = str

    def _read(self, fp: io.TextIOWrapper, fpname: str):
        super()._read(fp, fpname)
        self.process_includes(fpname)

    def merge_missing(self, other: configparser.ConfigParser):
        """Copy keys of ``other`` that this parser does not have yet."""
        for section in other.sections():
            if not self.has_section(section):
                self.add_section(section)
            present = set(self._sections[section])
            for key, value in other.items(section, raw=True):
                if key not in present:
                    self._sections[section][key] = value

    def process_includes(self, fpname: str):
        """Merge every include, depth first, in listed order.

        :raises IncludeCycle: a file includes itself through a chain
        """
        self._merge_includes(self, fpname, (include_key('file://' + os.path.abspath(fpname), fpname),))

    def _merge_includes(self, parser: configparser.RawConfigParser, fpname: str, chain: t.Tuple[str, ...]):
        if not parser.has_option(INCLUDES_SECTION, INCLUDES_KEY):
            return
        for reference in aslist(parser.get(INCLUDES_SECTION, INCLUDES_KEY, raw=True)):
            key = include_key(reference, fpname)
            if key in chain:
                raise exc.IncludeCycle("{0} includes itself through {1}".format(reference, ' -> '.join(chain)))
            included = read_included(reference, fpname)
            nested_name = key if urlparse(reference).scheme == 'file' else fpname
            self.merge_missing(included)
            self._merge_includes(included, nested_name, chain + (key,))
