# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Final, Iterable, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO, otimes_array
from tropical_spectra.eigen.check import EigenCheckReport
from tropical_spectra.exceptions import InvalidLambdaError, UnreachableBasepointError
from tropical_spectra.kernels.base import LazyKernel
from tropical_spectra.kernels.window import check_window_eigen, truncate
from tropical_spectra.logging.logging import logger
from tropical_spectra.spectral.closure import scaled_closure

STABLE_SAMPLES: Final[int] = 3


@dataclass(frozen=True)
class MartinKernel:
    """
    ``values[i, j] = (A_λ)*_ij - π_j`` with ``π = (A_λ)*_{b·}``.
    """

    lam: float
    basepoint: int
    values: NDArray[np.float64]
    pi: NDArray[np.float64]

    def column(self, j: int) -> NDArray[np.float64]:
        return self.values[:, j].copy()

    def bound_excess(self) -> float:
        """
        Largest ``K_ij + π_i``; nonpositive up to rounding.
        """

        total = otimes_array(self.values, self.pi[:, None])
        finite = total != ZERO
        return float(total[finite].max()) if finite.any() else ZERO


def martin_matrix(
    a: TropicalMatrix,
    lam: float,
    basepoint: int = 0,
    eps: ToleranceLike = None,
) -> MartinKernel:
    closure = scaled_closure(a, lam, eps)
    if closure.diverged:
        raise InvalidLambdaError(f"λ={lam} is below the maximal circuit mean")

    star = closure.star.dense
    pi = star[basepoint, :].copy()
    unreachable = np.nonzero(pi == ZERO)[0]
    if unreachable.size:
        raise UnreachableBasepointError(basepoint, (int(k) for k in unreachable))

    values = star - pi[None, :]
    return MartinKernel(lam=lam, basepoint=basepoint, values=values, pi=pi)


def martin_kernel(
    kernel: LazyKernel,
    lam: float,
    basepoint: int,
    n: int,
    eps: ToleranceLike = None,
) -> MartinKernel:
    return martin_matrix(truncate(kernel, n).matrix, lam, basepoint, eps)


@dataclass(frozen=True)
class BoundaryProbe:
    i: int
    samples: Tuple[Tuple[int, float], ...]
    stabilized: bool
    limit: Optional[float]


def _probe(martin: MartinKernel, i: int, j_list: Sequence[int], eps) -> BoundaryProbe:
    tol = as_tolerance(eps)
    samples = tuple((j, float(martin.values[i, j])) for j in j_list)
    tail = [v for _, v in samples[-STABLE_SAMPLES:]]
    stabilized = len(tail) == STABLE_SAMPLES and all(
        tol.equal(v, tail[-1]) for v in tail
    )
    return BoundaryProbe(i, samples, stabilized, tail[-1] if stabilized else None)


def _check_columns(j_list: Iterable[int], n: int) -> Tuple[int, ...]:
    columns = tuple(j_list)
    if any(b <= a for a, b in zip(columns, columns[1:])):
        raise ValueError(f"Columns must increase: {list(columns)}")
    if not columns or columns[-1] > n:
        raise ValueError(f"Columns must be nonempty and at most {n}")
    return columns


def boundary_column_probe(
    kernel: LazyKernel,
    lam: float,
    basepoint: int,
    i_fixed: int,
    j_list: Iterable[int],
    n: int,
    eps: ToleranceLike = None,
) -> BoundaryProbe:
    """
    Follow ``K_ij`` for a fixed row as ``j`` runs through ``j_list``.
    """

    columns = _check_columns(j_list, n)
    martin = martin_kernel(kernel, lam, basepoint, n, eps)
    return _probe(martin, i_fixed, columns, eps)


@dataclass(frozen=True)
class BoundaryColumn:
    lam: float
    probes: Tuple[BoundaryProbe, ...]

    @property
    def stabilized(self) -> bool:
        return all(p.stabilized for p in self.probes)

    def vector(self) -> NDArray[np.float64]:
        if not self.stabilized:
            raise ValueError("The boundary column has not stabilized")
        return np.array([p.limit for p in self.probes], dtype=np.float64)

    def check_eigen(
        self,
        kernel: LazyKernel,
        eps: ToleranceLike = None,
    ) -> EigenCheckReport:
        """
        Eigen-equation of the limit column on the window spanned by its rows.
        """

        window = truncate(kernel, len(self.probes) - 1)
        return check_window_eigen(window, self.lam, self.vector(), eps)


def boundary_column(
    kernel: LazyKernel,
    lam: float,
    basepoint: int,
    j_list: Iterable[int],
    n: int,
    eps: ToleranceLike = None,
) -> BoundaryColumn:
    """
    Probe every row below the first sampled column.
    """

    columns = _check_columns(j_list, n)
    martin = martin_kernel(kernel, lam, basepoint, n, eps)
    probes = tuple(_probe(martin, i, columns, eps) for i in range(columns[0]))
    column = BoundaryColumn(lam, probes)
    if not column.stabilized:
        rows = [p.i for p in probes if not p.stabilized]
        logger.debug(f"Boundary column of {kernel.name} not stabilized at rows {rows}")
    return column
