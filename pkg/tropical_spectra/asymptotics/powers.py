# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Final, Tuple

import numpy as np
from numpy.typing import NDArray

from tropical_spectra.core.matrix import TropicalMatrix, dense_mul, vec_mat
from tropical_spectra.core.scalar import ZERO
from tropical_spectra.spectral.structure import normalize

DEFAULT_FLOOR: Final[float] = -1e9
"""
Values at or below the floor count as effectively zero.
"""


@dataclass(frozen=True)
class PowerTrace:
    """
    ``values[n - 1]`` is the ``(i, j)`` entry of the n-th power for ``n = 1..N_max``.
    """

    i: int
    j: int
    values: Tuple[float, ...]
    normalized: bool

    @property
    def n_max(self) -> int:
        return len(self.values)

    def at(self, n: int) -> float:
        return self.values[n - 1]

    def rows(self) -> Tuple[Tuple[int, float], ...]:
        return tuple((n, v) for n, v in enumerate(self.values, start=1))

    @classmethod
    def from_stack(cls, stack: NDArray[np.float64], i: int, j: int, normalized: bool):
        return cls(i, j, tuple(float(v) for v in stack[:, i, j]), normalized)


def power_trace(
    a: TropicalMatrix,
    i: int,
    j: int,
    n_max: int,
    normalized: bool = True,
) -> PowerTrace:
    """
    Only row ``i`` of the running power is propagated.
    """

    if n_max < 1:
        raise ValueError(f"n_max must be positive: {n_max}")

    base = normalize(a) if normalized else a
    row = np.full(a.n, ZERO)
    row[i] = 0.0

    values = list()
    for _ in range(n_max):
        row = vec_mat(row, base)
        values.append(float(row[j]))
    return PowerTrace(i, j, tuple(values), normalized)


def power_stack(
    a: TropicalMatrix,
    n_max: int,
    normalized: bool = True,
) -> NDArray[np.float64]:
    """
    Array of shape ``(n_max, n, n)`` holding the powers ``1..n_max``.
    """

    if n_max < 1:
        raise ValueError(f"n_max must be positive: {n_max}")

    base = (normalize(a) if normalized else a).dense
    stack = np.empty((n_max, a.n, a.n), dtype=np.float64)
    stack[0] = base
    for k in range(1, n_max):
        stack[k] = dense_mul(stack[k - 1], base)
    return stack
