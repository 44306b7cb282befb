# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Final, Optional

import numpy as np
from numpy.typing import NDArray

from tropical_spectra.asymptotics.powers import DEFAULT_FLOOR
from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix, dense_mul
from tropical_spectra.core.scalar import ZERO, TropicalScalar, otimes_array
from tropical_spectra.exceptions import AcyclicError
from tropical_spectra.logging.logging import logger
from tropical_spectra.spectral.closure import kleene_star
from tropical_spectra.spectral.mean import max_cycle_mean

PASSED: Final[str] = "pass"
INCONCLUSIVE: Final[str] = "inconclusive"
NOT_APPLICABLE: Final[str] = "not-applicable"


@dataclass(frozen=True)
class TransienceReport:
    """
    ``first_passage[i, j]`` is the power from which ``A^n_ij`` stays at or
    below the floor up to ``N_max``, or ``-1`` when it is still above.
    """

    verdict: str
    rho: TropicalScalar
    floor: float
    n_max: int
    first_passage: Optional[NDArray[np.int64]] = None

    @property
    def last_passage(self) -> int:
        if self.first_passage is None or (self.first_passage < 0).any():
            return -1
        return int(self.first_passage.max())


def transience_check(
    a: TropicalMatrix,
    floor: float = DEFAULT_FLOOR,
    n_max: int = 1000,
    eps: ToleranceLike = None,
) -> TransienceReport:
    tol = as_tolerance(eps)
    rho = max_cycle_mean(a)
    if not (rho == ZERO or rho < -tol.eps):
        return TransienceReport(NOT_APPLICABLE, rho, floor, n_max)

    first = np.ones((a.n, a.n), dtype=np.int64)
    above = np.zeros((a.n, a.n), dtype=bool)
    running = a.dense
    for n in range(1, n_max + 1):
        if n > 1:
            running = dense_mul(running, a.dense)
        now_above = running > floor
        first[now_above] = n + 1
        above = now_above

    first[above] = -1
    verdict = INCONCLUSIVE if above.any() else PASSED
    logger.debug(f"Transience {verdict}: rho={rho}, floor={floor}, N_max={n_max}")
    return TransienceReport(verdict, rho, floor, n_max, first)


@dataclass(frozen=True)
class SubcriticalBound:
    passed: bool
    worst_excess: float
    first_violation: Optional[int]


def subcritical_bound_check(
    a: TropicalMatrix,
    n_max: int,
    eps: ToleranceLike = None,
) -> SubcriticalBound:
    """
    Check ``A^n ≤ ρ(A)^n ⊗ Ã*`` entrywise for ``n = 1..n_max``.
    """

    tol = as_tolerance(eps)
    rho = max_cycle_mean(a)
    if rho == ZERO:
        raise AcyclicError()

    star = kleene_star(a.shift(-rho), tol).star.dense
    running = a.dense
    worst = 0.0
    violation = None
    for n in range(1, n_max + 1):
        if n > 1:
            running = dense_mul(running, a.dense)
        bound = otimes_array(star, n * rho)
        finite = running != ZERO
        if (finite & (bound == ZERO)).any():
            excess = np.inf
        elif finite.any():
            excess = float(np.max(running[finite] - bound[finite]))
        else:
            excess = 0.0
        worst = max(worst, excess)
        if excess > tol.eps and violation is None:
            violation = n
    return SubcriticalBound(violation is None, worst, violation)
