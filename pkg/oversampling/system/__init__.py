"""Settings shared by the computational subsystems.

Settings come from the ``[app:main]`` section of an INI file read through the include aware loader in :py:mod:`oversampling.utils.config`. Every key is prefixed with ``oversampling.``::

    [app:main]
    oversampling.radicand = 2
    oversampling.expansive_margin = 1e-9
    oversampling.search_radius = 6

Values not given in the INI fall back to the defaults of :py:class:`Settings`.
"""

# Standard Library
import os
import typing as t
from dataclasses import dataclass
from dataclasses import fields
from dataclasses import replace

# Pyramid
from pyramid.settings import asbool


PREFIX = "oversampling."


def _expandvars(value: t.Any) -> t.Any:
    processed = value
    if isinstance(value, dict):
        processed = expandvars_dict(value)
    elif isinstance(value, (str, bytes)):
        processed = os.path.expandvars(value)
    return processed


def expandvars_dict(settings: dict) -> dict:
    """Expand all environment variables in a settings dictionary.

    :returns: Dictionary with settings
    """
    return {key: _expandvars(value) for key, value in settings.items()}


@dataclass(frozen=True)
class Settings:
    """Tunables of the exact and approximate computations."""

    #: Square-free radicand d for generator and step function documents that do not name one
    radicand: int = 2

    #: Eigenvalues must exceed 1 + margin in modulus for a matrix to count as expansive
    expansive_margin: float = 1e-9

    #: Slack added to float comparisons against an epsilon
    float_slack: float = 1e-12

    #: Half width of the integer grid scanned for approximate transversal candidates
    search_radius: int = 6

    #: Default truncation level for the bounded condition checks
    jmax: int = 5

    #: Constellations up to this size are also verified by direct enumeration
    enumerate_limit: int = 20000

    #: Refuse to build constellations whose factors are not verified on coverage
    verify_coverage: bool = True

    @classmethod
    def from_settings(cls, settings: dict) -> "Settings":
        """Build settings from a flat INI settings dictionary.

        Keys without the ``oversampling.`` prefix are ignored.

        :param settings: Dictionary as returned by ``loader.get_settings('app:main')``
        :return: Settings instance
        """
        settings = expandvars_dict(settings)
        values = {}
        for field in fields(cls):
            key = PREFIX + field.name
            if key not in settings:
                continue
            raw = settings[key]
            if field.type is bool or field.type == "bool":
                values[field.name] = asbool(raw)
            elif field.type is int or field.type == "int":
                values[field.name] = int(raw)
            else:
                values[field.name] = float(raw)
        return cls(**values)

    @classmethod
    def from_config_uri(cls, config_uri: str) -> "Settings":
        """Read settings from an INI file.

        :param config_uri: Path to INI file, optionally with the ``osc://`` prefix
        :return: Settings instance
        """
        import plaster
        from oversampling.utils.config import prepare_config_uri

        loader = plaster.get_loader(prepare_config_uri(config_uri))
        return cls.from_settings(loader.get_settings('app:main'))

    def override(self, **kwargs) -> "Settings":
        """Return a copy with some values replaced; ``None`` values are skipped."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


#: Settings used when a caller does not pass any
DEFAULT_SETTINGS = Settings()
