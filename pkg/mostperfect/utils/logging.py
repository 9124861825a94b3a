"""
Logging setup.
One stderr handler; JSON lines by default so census progress can be parsed by shard drivers.
"""
import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

LOG_FIELDS = '%(asctime)s %(levelname)s %(name)s %(message)s'
TEXT_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'

_HANDLER_NAME = 'mostperfect-stderr'


def configure_logging(level: str = 'INFO', fmt: str = 'json', stream=None) -> logging.Logger:
    """
    Install the package's stderr handler (idempotent).

    Args:
        level: Level name, e.g. 'INFO' or 'DEBUG'
        fmt: 'json' or 'text'
        stream: Target stream, stderr by default

    Returns:
        The package root logger
    """
    root = logging.getLogger('mostperfect')
    for handler in list(root.handlers):
        if handler.get_name() == _HANDLER_NAME:
            root.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.set_name(_HANDLER_NAME)
    if (fmt or 'json').lower() == 'json':
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FIELDS))
    else:
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))

    root.addHandler(handler)
    root.setLevel(_level(level))
    root.propagate = False
    return root


def _level(name: Optional[str]) -> int:
    value = logging.getLevelName((name or 'INFO').upper())
    return value if isinstance(value, int) else logging.INFO
