# -*- coding: utf-8 -*-

from math import inf, isnan
from typing import Final, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.exceptions import DimensionMismatchError, InvalidEntryError

TropicalScalar = float
"""
An element of R ∪ {-inf}; the extended variant additionally admits +inf.
"""

Vector = NDArray[np.float64]

ZERO: Final[float] = -inf
ONE: Final[float] = 0.0
TOP: Final[float] = inf


def check_scalar(value: float, extended: bool = False) -> float:
    value = float(value)
    if isnan(value):
        raise InvalidEntryError("NaN is not a tropical scalar")
    if value == TOP and not extended:
        raise InvalidEntryError("+inf is only admitted by the extended semiring")
    return value


def oplus(a: float, b: float) -> float:
    return a if a >= b else b


def otimes(a: float, b: float) -> float:
    # ZERO stays absorbing against TOP in the completed semiring.
    if a == ZERO or b == ZERO:
        return ZERO
    return a + b


def otimes_array(a: ArrayLike, b: ArrayLike) -> NDArray[np.float64]:
    """
    Broadcast ``a ⊗ b`` with -inf absorbing, including ``-inf + inf``.
    """

    with np.errstate(invalid="ignore"):
        result = np.add(a, b, dtype=np.float64)
    result[np.isnan(result)] = ZERO
    return result


def as_vector(values: ArrayLike, n: int = -1) -> Vector:
    vector = np.array(values, dtype=np.float64)
    if vector.ndim != 1:
        raise InvalidEntryError(f"Expected a vector, got shape {vector.shape}")
    if n >= 0 and vector.shape[0] != n:
        raise DimensionMismatchError(n, vector.shape[0], "vector")
    if np.isnan(vector).any():
        raise InvalidEntryError("NaN is not a tropical scalar")
    return vector


def is_zero_vector(values: Sequence[float]) -> bool:
    return all(v == ZERO for v in values)


def vec_close(u: ArrayLike, v: ArrayLike, eps: ToleranceLike = None) -> bool:
    """
    Entrywise tropical equality: infinite entries must match exactly.
    """

    tol = as_tolerance(eps)
    a = np.asarray(u, dtype=np.float64)
    b = np.asarray(v, dtype=np.float64)
    if a.shape != b.shape:
        return False
    infinite = np.isinf(a) | np.isinf(b)
    if not np.array_equal(a[infinite], b[infinite]):
        return False
    finite = ~infinite
    return bool(np.all(np.abs(a[finite] - b[finite]) <= tol.eps))


def vec_gap(u: ArrayLike, v: ArrayLike) -> float:
    """
    Largest entrywise gap; +inf when the finite supports differ.
    """

    a = np.asarray(u, dtype=np.float64)
    b = np.asarray(v, dtype=np.float64)
    infinite = np.isinf(a) | np.isinf(b)
    if not np.array_equal(a[infinite], b[infinite]):
        return inf
    finite = ~infinite
    if not finite.any():
        return 0.0
    return float(np.max(np.abs(a[finite] - b[finite])))


def normalize_top(values: ArrayLike) -> Vector:
    """
    Shift a vector so that its largest finite entry is ONE.
    """

    vector = np.array(values, dtype=np.float64)
    finite = np.isfinite(vector)
    if finite.any():
        vector[finite] -= vector[finite].max()
    return vector


def format_scalar(value: float) -> str:
    if value == ZERO:
        return "-inf"
    if value == TOP:
        return "+inf"
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def parse_scalar(text: str, extended: bool = False) -> float:
    lowered = text.strip().lower()
    if lowered in ("-inf", "zero", "-infinity"):
        return ZERO
    if lowered in ("+inf", "inf", "infinity"):
        return check_scalar(TOP, extended)
    return check_scalar(float(lowered), extended)
