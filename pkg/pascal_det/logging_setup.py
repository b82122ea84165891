"""
Logging configuration for the command line front end
"""

import logging
import sys

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level="WARNING"):
    """
    Send log records to standard error so standard output stays parseable

    Args:
        level (str or int): Level name such as "INFO", or a logging constant
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger("pascal_det").setLevel(level)
