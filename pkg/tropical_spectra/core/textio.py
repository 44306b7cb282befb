# -*- coding: utf-8 -*-
"""
Plain-text matrix and vector format.

A matrix file starts with ``tropical <n>`` followed by one ``<i> <j> <w>``
line per finite entry (0-based indices). A vector file starts with
``vec <n>`` followed by ``<i> <w>`` lines. ``#`` starts a comment and
missing entries are the semiring zero.
"""

from pathlib import Path
from re import Pattern
from re import compile as re_compile
from typing import Final, Iterator, List, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike

from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import (
    ZERO,
    Vector,
    as_vector,
    format_scalar,
    parse_scalar,
)
from tropical_spectra.exceptions import InvalidEntryError, MatrixFormatError

COMMENT_PATTERN: Final[Pattern] = re_compile(r"#.*$")
MATRIX_HEADER: Final[str] = "tropical"
VECTOR_HEADER: Final[str] = "vec"

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, line in enumerate(text.split("\n"), start=1):
        stripped = COMMENT_PATTERN.sub("", line).strip()
        if stripped:
            yield number, stripped.split()


def _parse_header(lines: Iterator[Tuple[int, List[str]]], keyword: str) -> int:
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise MatrixFormatError(0, f"Missing '{keyword} <n>' header")

    if len(tokens) != 2 or tokens[0] != keyword:
        raise MatrixFormatError(number, f"Expected '{keyword} <n>' header")
    try:
        n = int(tokens[1])
    except ValueError:
        raise MatrixFormatError(number, f"Invalid dimension '{tokens[1]}'")
    if n < 1:
        raise MatrixFormatError(number, f"Dimension must be positive: {n}")
    return n


def _parse_index(number: int, token: str, n: int) -> int:
    try:
        index = int(token)
    except ValueError:
        raise MatrixFormatError(number, f"Invalid index '{token}'")
    if not 0 <= index < n:
        raise MatrixFormatError(number, f"Index {index} is out of range [0, {n})")
    return index


def _parse_value(number: int, token: str, extended: bool) -> float:
    try:
        return parse_scalar(token, extended)
    except (ValueError, InvalidEntryError) as e:
        raise MatrixFormatError(number, f"Invalid weight '{token}': {e}")


def parse_matrix(text: str, extended: bool = False) -> TropicalMatrix:
    lines = _content_lines(text)
    n = _parse_header(lines, MATRIX_HEADER)

    entries = dict()
    for number, tokens in lines:
        if len(tokens) != 3:
            raise MatrixFormatError(number, "Expected '<i> <j> <w>'")
        i = _parse_index(number, tokens[0], n)
        j = _parse_index(number, tokens[1], n)
        if (i, j) in entries:
            raise MatrixFormatError(number, f"Duplicate entry ({i}, {j})")
        entries[(i, j)] = _parse_value(number, tokens[2], extended)
    return TropicalMatrix(n, entries, extended=extended)


def format_matrix(matrix: TropicalMatrix, comment: str = "") -> str:
    lines = list()
    if comment:
        lines.extend(f"# {line}" for line in comment.split("\n"))
    lines.append(f"{MATRIX_HEADER} {matrix.n}")
    for i, j, w in matrix.arcs():
        lines.append(f"{i} {j} {format_scalar(w)}")
    return "\n".join(lines) + "\n"


def parse_vector(text: str) -> Vector:
    lines = _content_lines(text)
    n = _parse_header(lines, VECTOR_HEADER)

    vector = np.full(n, ZERO, dtype=np.float64)
    seen = set()
    for number, tokens in lines:
        if len(tokens) != 2:
            raise MatrixFormatError(number, "Expected '<i> <w>'")
        i = _parse_index(number, tokens[0], n)
        if i in seen:
            raise MatrixFormatError(number, f"Duplicate entry {i}")
        seen.add(i)
        vector[i] = _parse_value(number, tokens[1], extended=True)
    return vector


def format_vector(values: ArrayLike, comment: str = "") -> str:
    vector = as_vector(values)
    lines = list()
    if comment:
        lines.extend(f"# {line}" for line in comment.split("\n"))
    lines.append(f"{VECTOR_HEADER} {vector.shape[0]}")
    for i, w in enumerate(vector):
        if w != ZERO:
            lines.append(f"{i} {format_scalar(float(w))}")
    return "\n".join(lines) + "\n"


def read_matrix(path: PathLike, encoding="utf-8", extended=False) -> TropicalMatrix:
    return parse_matrix(Path(path).read_text(encoding=encoding), extended)


def write_matrix(path: PathLike, matrix: TropicalMatrix, comment="") -> None:
    Path(path).write_text(format_matrix(matrix, comment), encoding="utf-8")


def read_vector(path: PathLike, encoding="utf-8") -> Vector:
    return parse_vector(Path(path).read_text(encoding=encoding))


def write_vector(path: PathLike, values: ArrayLike, comment="") -> None:
    Path(path).write_text(format_vector(values, comment), encoding="utf-8")
