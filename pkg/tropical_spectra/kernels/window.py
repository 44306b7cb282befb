# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import otimes_array
from tropical_spectra.eigen.check import EigenCheckReport, check_eigen
from tropical_spectra.kernels.base import LazyKernel
from tropical_spectra.logging.logging import logger
from tropical_spectra.spectral.closure import kleene_star


@dataclass(frozen=True)
class Window:
    """
    Restriction of a kernel to the nodes ``{0..n}``.

    ``truncated_rows`` lists the rows that lost at least one arc.
    """

    n: int
    matrix: TropicalMatrix
    dropped_arcs: int
    truncated_rows: Tuple[int, ...]
    kernel_name: str
    right_locally_finite: bool = True

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def exempt_rows(self) -> Tuple[int, ...]:
        """
        Rows whose eigen-equation defect is an artifact of the truncation.

        When every row loses a tail only the frontier row is exempt.
        """

        if self.right_locally_finite:
            return self.truncated_rows
        return (self.n,)

    @property
    def interior_rows(self) -> Tuple[int, ...]:
        exempt = set(self.exempt_rows)
        return tuple(i for i in range(self.size) if i not in exempt)


def truncate(kernel: LazyKernel, n: int) -> Window:
    if n < 0:
        raise ValueError(f"Window index must be nonnegative: {n}")

    entries = dict()
    dropped = 0
    truncated = list()
    for i in range(n + 1):
        arcs, lost = kernel.window_row(i, n)
        for j, w in arcs:
            entries[(i, j)] = w
        if lost:
            dropped += lost
            truncated.append(i)

    logger.debug(f"Window {kernel.name} N={n}: {len(entries)} arcs, {dropped} dropped")
    return Window(
        n=n,
        matrix=TropicalMatrix(n + 1, entries),
        dropped_arcs=dropped,
        truncated_rows=tuple(truncated),
        kernel_name=kernel.name,
        right_locally_finite=kernel.right_locally_finite,
    )


@dataclass(frozen=True)
class StarLimit:
    i: int
    j: int
    samples: Tuple[Tuple[int, float], ...]
    oracle: Optional[float]

    @property
    def last(self) -> float:
        return self.samples[-1][1]

    def gap(self) -> Optional[float]:
        if self.oracle is None or not self.samples:
            return None
        return abs(self.last - self.oracle)

    def is_monotone(self, eps: ToleranceLike = None) -> bool:
        tol = as_tolerance(eps)
        values = [v for _, v in self.samples]
        return all(tol.leq(a, b) for a, b in zip(values, values[1:]))


def window_star_limit(
    kernel: LazyKernel,
    i: int,
    j: int,
    n_list: Iterable[int],
    eps: ToleranceLike = None,
) -> StarLimit:
    sizes = sorted(set(n_list))
    if not sizes or min(i, j) < 0 or max(i, j) > sizes[0]:
        raise ValueError(f"Nodes ({i}, {j}) must lie in every window {sizes}")

    samples = tuple(
        (n, float(kleene_star(truncate(kernel, n).matrix, eps).star[(i, j)]))
        for n in sizes
    )
    star = kernel.closed_forms.star
    return StarLimit(i, j, samples, star(i, j) if star is not None else None)


@dataclass(frozen=True)
class TightnessReport:
    i: int
    j: int
    beta: float
    level_set: Tuple[int, ...]
    saturated: bool
    n: int


def property_T_probe(
    kernel: LazyKernel,
    i: int,
    j: int,
    beta: float,
    n: int,
    eps: ToleranceLike = None,
) -> TightnessReport:
    """
    Windowed super-level set ``{k : A*_ik + A*_kj >= beta}``.

    A level set that reaches the frontier node ``n`` is saturated and says
    nothing about the infinite kernel.
    """

    tol = as_tolerance(eps)
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"Nodes ({i}, {j}) must lie in the window {{0..{n}}}")

    star = kleene_star(truncate(kernel, n).matrix, tol).star.dense
    through = otimes_array(star[i, :], star[:, j])
    level = tuple(int(k) for k in np.nonzero(through >= beta - tol.eps)[0])
    return TightnessReport(i, j, beta, level, n in level, n)


def check_window_eigen(
    window: Window,
    lam: float,
    u: ArrayLike,
    eps: ToleranceLike = None,
) -> EigenCheckReport:
    return check_eigen(window.matrix, lam, u, eps, exempt_rows=window.exempt_rows)
