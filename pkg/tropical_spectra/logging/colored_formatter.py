# -*- coding: utf-8 -*-

from typing import IO, Any, Dict

import coloredlogs

LEVEL_STYLES: Dict[str, Dict[str, Any]] = {
    "debug": {"color": "green", "faint": True},
    "info": {},
    "warning": {"color": "yellow"},
    "error": {"color": "red"},
    "critical": {"color": "red", "bold": True},
}

FIELD_STYLES: Dict[str, Dict[str, Any]] = {
    "asctime": {"color": "green"},
    "levelname": {"bold": True},
    "name": {"color": "blue"},
}


def stream_supports_colors(stream: IO[str]) -> bool:
    isatty = getattr(stream, "isatty", None)
    return bool(isatty is not None and isatty())


class ColoredFormatter(coloredlogs.ColoredFormatter):
    def __init__(self, fmt=None, datefmt=None, style="%"):
        super().__init__(
            fmt=fmt,
            datefmt=datefmt,
            style=style,
            level_styles=LEVEL_STYLES,
            field_styles=FIELD_STYLES,
        )
