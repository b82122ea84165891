"""
Configuration for pascal_det

Defaults live on the Config class as upper-case attributes. A settings file
in dotenv format can override them; the process environment is never read.
"""

import logging

from dotenv import dotenv_values

from pascal_det.exceptions import DomainError

logger = logging.getLogger(__name__)


class Config:
    """Runtime settings shared by the library components and the CLI"""

    # Largest matrix side det_laplace accepts
    LAPLACE_CAP = 8
    # Threads used by identity sweeps
    SWEEP_WORKERS = 1
    LOG_LEVEL = "WARNING"
    BENCH_DEFAULT_ITERS = 10

    def __init__(self, **overrides):
        for key, value in overrides.items():
            self._set(key, value)

    @classmethod
    def keys(cls):
        return sorted(name for name in dir(cls) if name.isupper())

    @classmethod
    def from_file(cls, path):
        """
        Load a Config from a dotenv-style settings file

        Args:
            path (str): Path to a file of KEY=value lines

        Returns:
            Config: defaults overridden by the file's values
        """
        values = dotenv_values(path)
        logger.info(f"Loaded {len(values)} settings from {path}")
        return cls(**{key: value for key, value in values.items() if value is not None})

    def get(self, key, default=None):
        return getattr(self, key, default)

    def as_dict(self):
        return {key: getattr(self, key) for key in self.keys()}

    def _set(self, key, value):
        if key not in self.keys():
            raise DomainError(f"unknown setting {key!r}")
        current = getattr(type(self), key)
        if isinstance(current, int):
            try:
                value = int(value)
            except (TypeError, ValueError):
                raise DomainError(f"setting {key} expects an integer, got {value!r}")
            if value < 1:
                raise DomainError(f"setting {key} must be positive, got {value}")
        else:
            value = str(value)
        setattr(self, key, value)
