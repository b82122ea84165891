"""
Base Component Class

Shared plumbing for the components that need runtime settings.
"""

import logging

from pascal_det.config import Config

logger = logging.getLogger(__name__)


class BaseComponent:
    """Base class for sweepers and benchmarks that read a Config"""

    def __init__(self, config=None):
        self.config = config or Config()

    def get_config(self, key, default=None):
        """
        Look up a setting on the component's Config

        Args:
            key: upper-case setting name such as "LAPLACE_CAP"
            default: returned when the Config has no such setting

        Returns:
            The setting's value, or default
        """
        return self.config.get(key, default)
