# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from tropical_spectra.asymptotics.powers import power_trace
from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.scalar import vec_gap
from tropical_spectra.kernels.base import LazyKernel
from tropical_spectra.kernels.martin import boundary_column, martin_kernel
from tropical_spectra.kernels.window import Window, check_window_eigen, truncate
from tropical_spectra.logging.logging import logger
from tropical_spectra.spectral.closure import kleene_star
from tropical_spectra.spectral.mean import max_cycle_mean


@dataclass(frozen=True)
class ClosedFormGaps:
    """
    Largest gap between each closed form and its window value.

    Closures are compared on ``{0..closure_block}``: the full window minus the
    frontier nodes where truncation breaks the closed form, or the inner half
    when the window only approaches it. Martin kernels use ``{0..inner}``.
    ``rho`` compares the window circuit mean, which may only approach the
    infinite one from below.
    """

    kernel: str
    window: int
    inner: int
    closure_block: int
    lam: Optional[float]
    gaps: Tuple[Tuple[str, float], ...]

    def as_dict(self) -> Dict[str, float]:
        return dict(self.gaps)

    def within(self, eps: ToleranceLike = None, skip: Tuple[str, ...] = ()) -> bool:
        tol = as_tolerance(eps)
        return all(gap <= tol.eps for name, gap in self.gaps if name not in skip)


def _table(inner: int, fn: Callable[[int, int], float]) -> np.ndarray:
    size = inner + 1
    rows = [[fn(i, j) for j in range(size)] for i in range(size)]
    return np.array(rows, dtype=np.float64)


def _boundary_columns(n: int) -> Tuple[int, ...]:
    return (n // 2 + 1, (3 * n) // 4, n)


def closed_form_gaps(
    kernel: LazyKernel,
    n: int,
    eps: ToleranceLike = None,
) -> ClosedFormGaps:
    forms = kernel.closed_forms
    tol = as_tolerance(eps)
    window: Window = truncate(kernel, n)
    inner = n // 2
    block = slice(0, inner + 1)
    margin = forms.closure_margin
    closure_block = inner if margin is None else n - margin
    closure = slice(0, closure_block + 1)
    gaps = list()

    if forms.rho is not None:
        gaps.append(("rho", abs(max_cycle_mean(window.matrix) - forms.rho)))

    if forms.plus is not None or forms.star is not None:
        result = kleene_star(window.matrix, tol)
        if forms.plus is not None:
            ref = _table(closure_block, forms.plus)
            gaps.append(("plus", vec_gap(result.plus.dense[closure, closure], ref)))
        if forms.star is not None:
            ref = _table(closure_block, forms.star)
            gaps.append(("star", vec_gap(result.star.dense[closure, closure], ref)))

    lam = forms.rho
    if lam is not None and forms.eigenvector is not None:
        u = [forms.eigenvector(lam, k) for k in range(window.size)]
        gaps.append(("eigenvector", check_window_eigen(window, lam, u, tol).residual))

    if lam is not None and forms.martin is not None:
        martin = martin_kernel(kernel, lam, 0, n, tol)
        ref = _table(inner, lambda i, j: forms.martin(lam, i, j))
        gaps.append(("martin", vec_gap(martin.values[block, block], ref)))

    if lam is not None and forms.boundary is not None:
        column = boundary_column(kernel, lam, 0, _boundary_columns(n), n, tol)
        if column.stabilized:
            ref = [forms.boundary(lam, i) for i in range(len(column.probes))]
            gaps.append(("boundary", vec_gap(column.vector(), ref)))
        else:
            gaps.append(("boundary", float("inf")))

    if forms.power is not None and forms.power_entry is not None:
        i, j, n_min = forms.power_entry
        trace = power_trace(window.matrix, i, j, n, normalized=False)
        lengths = range(n_min, n + 1)
        ref = [forms.power(i, j, m) for m in lengths]
        gaps.append(("power", vec_gap([trace.at(m) for m in lengths], ref)))

    logger.debug(f"Closed forms of {kernel.name} on N={n}: {gaps}")
    return ClosedFormGaps(kernel.name, n, inner, closure_block, lam, tuple(gaps))
