# -*- coding: utf-8 -*-

from math import isinf
from typing import Any, Final, List, Optional, Sequence, Tuple

import numpy as np
import orjson

from tropical_spectra.core.scalar import format_scalar

FORMAT_TEXT: Final[str] = "text"
FORMAT_MACHINE: Final[str] = "machine"
FORMATS: Final[Sequence[str]] = (FORMAT_TEXT, FORMAT_MACHINE)

VERDICT_KEY: Final[str] = "verdict"
VERDICT_PASS: Final[str] = "pass"
VERDICT_FAIL: Final[str] = "fail"


def jsonable(value: Any) -> Any:
    """
    Nested lists of plain values; infinite floats become ``"-inf"``/``"+inf"``.
    """

    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return format_scalar(float(value)) if isinf(value) else float(value)
    if value is None:
        return None
    return str(value)


def format_value(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_scalar(float(value))
    if isinstance(value, str):
        return value
    return orjson.dumps(jsonable(value)).decode("utf-8")


class Report:
    """
    Ordered key/value report preceded by a reproducibility header.
    """

    def __init__(
        self,
        version: str,
        eps: float,
        window: Optional[int] = None,
        nmax: Optional[int] = None,
        seed: Optional[int] = None,
        source: str = "",
    ):
        self._header: List[Tuple[str, Any]] = [
            ("version", version),
            ("eps", eps),
            ("window", window),
            ("nmax", nmax),
            ("seed", seed),
            ("source", source),
        ]
        self._items: List[Tuple[str, Any]] = list()

    @property
    def items(self) -> List[Tuple[str, Any]]:
        return list(self._items)

    def add(self, key: str, value: Any):
        self._items.append((key, value))
        return self

    def add_verdict(self, passed: bool):
        return self.add(VERDICT_KEY, VERDICT_PASS if passed else VERDICT_FAIL)

    @property
    def failed(self) -> bool:
        return any(k == VERDICT_KEY and v == VERDICT_FAIL for k, v in self._items)

    def get(self, key: str, default: Any = None) -> Any:
        for k, v in reversed(self._items):
            if k == key:
                return v
        return default

    def lines(self, fmt: str = FORMAT_TEXT) -> List[str]:
        if fmt not in FORMATS:
            raise ValueError(f"Unknown report format: '{fmt}'")
        sep = ": " if fmt == FORMAT_TEXT else "="
        return [f"{k}{sep}{format_value(v)}" for k, v in self._header + self._items]

    def format(self, fmt: str = FORMAT_TEXT) -> str:
        return "\n".join(self.lines(fmt)) + "\n"


def format_table(columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """
    Whitespace separated table with a ``#`` header line.
    """

    lines = ["# " + " ".join(columns)]
    lines.extend(" ".join(format_value(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"
