# -*- coding: utf-8 -*-

from typing import Final, Iterator, Optional, Tuple

import numpy as np

from tropical_spectra.core.graph import is_irreducible
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO, Vector
from tropical_spectra.exceptions import SearchCapReachedError

DEFAULT_SEED: Final[int] = 20240521
DEFAULT_LOW: Final[int] = -9
DEFAULT_HIGH: Final[int] = 9
DEFAULT_DENSITY: Final[float] = 0.5
DEFAULT_MAX_TRIES: Final[int] = 10000


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def random_matrix(
    rng: np.random.Generator,
    n: int,
    low: int = DEFAULT_LOW,
    high: int = DEFAULT_HIGH,
    density: float = DEFAULT_DENSITY,
) -> TropicalMatrix:
    """
    Integer weights uniform in ``[low, high]``; each entry present with
    probability ``density``.
    """

    weights = rng.integers(low, high, size=(n, n), endpoint=True).astype(np.float64)
    present = rng.random(size=(n, n)) < density
    return TropicalMatrix.from_dense(np.where(present, weights, ZERO))


def random_irreducible(
    rng: np.random.Generator,
    n: int,
    low: int = DEFAULT_LOW,
    high: int = DEFAULT_HIGH,
    density: float = DEFAULT_DENSITY,
    max_tries: int = DEFAULT_MAX_TRIES,
) -> TropicalMatrix:
    """
    Rejection sampling; one-node results always carry a loop.
    """

    for _ in range(max_tries):
        a = random_matrix(rng, n, low, high, density)
        if n == 1 and a.nnz == 0:
            continue
        if is_irreducible(a):
            return a
    raise SearchCapReachedError(max_tries, f"irreducible {n}x{n} matrix")


def random_vector(
    rng: np.random.Generator,
    n: int,
    low: int = DEFAULT_LOW,
    high: int = DEFAULT_HIGH,
) -> Vector:
    return rng.integers(low, high, size=n, endpoint=True).astype(np.float64)


def irreducible_suite(
    seed: Optional[int],
    count: int,
    n_range: Tuple[int, int] = (2, 8),
    low: int = DEFAULT_LOW,
    high: int = DEFAULT_HIGH,
    density: float = DEFAULT_DENSITY,
) -> Iterator[TropicalMatrix]:
    rng = make_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1], endpoint=True))
        yield random_irreducible(rng, n, low, high, density)
