"""INI configuration with include support."""
import pkg_resources


_resource_manager = pkg_resources.ResourceManager()

#: URI scheme registered for our plaster loader
SCHEME = 'osc'


def prepare_config_uri(config_uri: str) -> str:
    """Make sure a configuration uri has the prefix osc://.

    :param config_uri: Configuration uri, i.e.: oversampling/conf/development.ini
    :return: Configuration uri with the prefix osc://.
    """
    prefix = '{scheme}://'.format(scheme=SCHEME)
    if not config_uri.startswith(prefix):
        config_uri = '{prefix}{uri}'.format(prefix=prefix, uri=config_uri)
    return config_uri


def packaged_config_path(name: str = 'base.ini') -> str:
    """Absolute path of an INI file shipped inside the package.

    :param name: File name under ``oversampling/conf``
    :return: Filesystem path
    """
    return pkg_resources.resource_filename('oversampling', 'conf/{name}'.format(name=name))
