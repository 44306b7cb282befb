# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np
from numpy.typing import ArrayLike

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix, mat_vec
from tropical_spectra.core.scalar import ZERO, as_vector, is_zero_vector
from tropical_spectra.exceptions import ZeroVectorError

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class EigenCheckReport:
    """
    Outcome of comparing ``Au`` with ``λu`` row by row.

    ``residual`` is measured only on rows where both sides are finite;
    rows where exactly one side is zero are listed in ``exact_zero_mismatch``.
    """

    residual: float
    exact_zero_mismatch: Tuple[int, ...]
    passed: bool
    exempt_rows: Tuple[int, ...] = ()

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL


def _sides(a: TropicalMatrix, lam: float, u: ArrayLike):
    vector = as_vector(u, a.n)
    if is_zero_vector(vector):
        raise ZeroVectorError()
    lhs = mat_vec(a, vector)
    rhs = np.where(vector == ZERO, ZERO, vector + lam)
    return lhs, rhs


def _checked_rows(n: int, exempt_rows: Iterable[int]) -> np.ndarray:
    rows = np.ones(n, dtype=bool)
    rows[list(exempt_rows)] = False
    return rows


def check_eigen(
    a: TropicalMatrix,
    lam: float,
    u: ArrayLike,
    eps: ToleranceLike = None,
    exempt_rows: Iterable[int] = (),
) -> EigenCheckReport:
    tol = as_tolerance(eps)
    exempt = tuple(sorted(set(exempt_rows)))
    lhs, rhs = _sides(a, lam, u)
    rows = _checked_rows(a.n, exempt)

    lhs_zero = lhs == ZERO
    rhs_zero = rhs == ZERO
    mismatch = np.nonzero(rows & (lhs_zero != rhs_zero))[0]

    finite = rows & ~lhs_zero & ~rhs_zero
    residual = float(np.max(np.abs(lhs[finite] - rhs[finite]))) if finite.any() else 0.0

    return EigenCheckReport(
        residual=residual,
        exact_zero_mismatch=tuple(int(i) for i in mismatch),
        passed=mismatch.size == 0 and residual <= tol.eps,
        exempt_rows=exempt,
    )


def check_super_eigen(
    a: TropicalMatrix,
    lam: float,
    u: ArrayLike,
    eps: ToleranceLike = None,
    exempt_rows: Iterable[int] = (),
) -> EigenCheckReport:
    """
    ``Au ≤ λu`` within eps; a zero on the left is below anything.
    """

    tol = as_tolerance(eps)
    exempt = tuple(sorted(set(exempt_rows)))
    lhs, rhs = _sides(a, lam, u)
    rows = _checked_rows(a.n, exempt)

    lhs_zero = lhs == ZERO
    rhs_zero = rhs == ZERO
    mismatch = np.nonzero(rows & ~lhs_zero & rhs_zero)[0]

    finite = rows & ~lhs_zero & ~rhs_zero
    excess = lhs[finite] - rhs[finite]
    residual = max(0.0, float(np.max(excess))) if excess.size else 0.0

    return EigenCheckReport(
        residual=residual,
        exact_zero_mismatch=tuple(int(i) for i in mismatch),
        passed=mismatch.size == 0 and residual <= tol.eps,
        exempt_rows=exempt,
    )
