# -*- coding: utf-8 -*-

from logging import (
    CRITICAL,
    DEBUG,
    ERROR,
    FATAL,
    INFO,
    NOTSET,
    WARN,
    WARNING,
    Formatter,
    Handler,
    StreamHandler,
    getLogger,
)
from sys import stderr
from typing import Dict, Final, Literal, Optional, Union

SEVERITY_NAME_CRITICAL = "critical"
SEVERITY_NAME_FATAL = "fatal"
SEVERITY_NAME_ERROR = "error"
SEVERITY_NAME_WARNING = "warning"
SEVERITY_NAME_WARN = "warn"
SEVERITY_NAME_INFO = "info"
SEVERITY_NAME_DEBUG = "debug"
SEVERITY_NAME_NOTSET = "notset"
SEVERITY_NAME_OFF = "off"

SEVERITY_LEVELS: Final[Dict[str, int]] = {
    SEVERITY_NAME_CRITICAL: CRITICAL,
    SEVERITY_NAME_FATAL: FATAL,
    SEVERITY_NAME_ERROR: ERROR,
    SEVERITY_NAME_WARNING: WARNING,
    SEVERITY_NAME_WARN: WARN,
    SEVERITY_NAME_INFO: INFO,
    SEVERITY_NAME_DEBUG: DEBUG,
    SEVERITY_NAME_NOTSET: NOTSET,
    SEVERITY_NAME_OFF: CRITICAL + 100,
}

SEVERITIES = tuple(SEVERITY_LEVELS.keys())

LoggingStyleLiteral = Literal["%", "{", "$"]

FMT_TIME: Final[str] = "%(asctime)s.%(msecs)03d"
DEFAULT_FORMAT = f"{FMT_TIME} %(process)d %(name)s %(levelname)s %(message)s"
DEFAULT_DATEFMT: Final[str] = "%Y-%m-%d %H:%M:%S"
DEFAULT_STYLE: Final[LoggingStyleLiteral] = "%"

SIMPLE_FORMAT: Final[str] = "{levelname[0]} [{name}] {message}"
SIMPLE_STYLE: Final[LoggingStyleLiteral] = "{"

DEFAULT_LOGGER_NAME = "tropical_spectra"

logger = getLogger(DEFAULT_LOGGER_NAME)


def convert_level_number(level: Optional[Union[str, int]] = None) -> int:
    if level is None:
        return DEBUG
    if isinstance(level, int):
        return level
    if not isinstance(level, str):
        raise TypeError(f"Unsupported level type: {type(level)}")

    number = SEVERITY_LEVELS.get(level.lower())
    if number is not None:
        return number
    try:
        return int(level)
    except ValueError:
        raise ValueError(f"Unknown level: {level}")


def set_root_level(level: Union[str, int]) -> None:
    getLogger().setLevel(convert_level_number(level))


def _add_stream_handler(formatter: Formatter, level: int) -> Handler:
    # Reports are written to stdout, so log records stay on stderr.
    handler = StreamHandler(stderr)
    handler.setFormatter(formatter)
    handler.setLevel(level)
    getLogger().addHandler(handler)
    return handler


def add_default_colored_logging(level=DEBUG) -> Handler:
    from tropical_spectra.logging.colored_formatter import (
        ColoredFormatter,
        stream_supports_colors,
    )

    # Piped stderr falls back to the plain layout.
    if not stream_supports_colors(stderr):
        return add_default_logging(level)

    formatter = ColoredFormatter(
        fmt=DEFAULT_FORMAT,
        datefmt=DEFAULT_DATEFMT,
        style=DEFAULT_STYLE,
    )
    return _add_stream_handler(formatter, level)


def add_default_logging(level=DEBUG) -> Handler:
    formatter = Formatter(
        fmt=DEFAULT_FORMAT,
        datefmt=DEFAULT_DATEFMT,
        style=DEFAULT_STYLE,
    )
    return _add_stream_handler(formatter, level)


def add_simple_logging(level=DEBUG) -> Handler:
    formatter = Formatter(fmt=SIMPLE_FORMAT, style=SIMPLE_STYLE)
    return _add_stream_handler(formatter, level)
