# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Final, List, Sequence

import numpy as np

from tropical_spectra.asymptotics.powers import DEFAULT_FLOOR, PowerTrace
from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.logging.logging import logger

PERIODIC: Final[str] = "periodic"
TRANSIENT: Final[str] = "transient-to-zero"
INCONCLUSIVE: Final[str] = "inconclusive"

MIN_VERIFIED_PERIODS: Final[int] = 3


@dataclass(frozen=True)
class CouplingReport:
    """
    ``sigma_ij`` and ``n_ij`` are meaningful only for a periodic verdict:
    ``A^{n + sigma_ij}_ij = A^n_ij`` holds for every ``n_ij <= n <= N_max - sigma_ij``.
    """

    sigma_ij: int
    n_ij: int
    verdict: str
    verified_steps: int = 0

    @property
    def periodic(self) -> bool:
        return self.verdict == PERIODIC


def divisors(value: int) -> List[int]:
    return [d for d in range(1, value + 1) if value % d == 0]


def _coupling_start(values: Sequence[float], sigma: int, eps: ToleranceLike) -> int:
    """
    Smallest power ``n`` from which the trace is ``sigma``-periodic.
    """

    tol = as_tolerance(eps)
    start = 1
    for m in range(len(values) - sigma):
        if not tol.equal(values[m + sigma], values[m]):
            start = m + 2
    return start


def _decays(values: Sequence[float], sigma: int, floor: float) -> bool:
    tail = np.array(values[len(values) // 2 :], dtype=np.float64)
    if tail.size == 0:
        return False
    if bool(np.all(tail <= floor)):
        return True

    blocks = tail.size // sigma
    if blocks < 2:
        return False
    maxima = tail[: blocks * sigma].reshape(blocks, sigma).max(axis=1)
    return bool(np.all(np.diff(maxima) < 0.0))


def detect_coupling(
    trace: PowerTrace,
    sigma_hint: int,
    eps: ToleranceLike = None,
    floor: float = DEFAULT_FLOOR,
) -> CouplingReport:
    if sigma_hint < 1:
        raise ValueError(f"sigma_hint must be positive: {sigma_hint}")

    values = trace.values
    tail = values[len(values) // 2 :]
    if tail and all(v <= floor for v in tail):
        logger.debug(f"Trace ({trace.i}, {trace.j}) stays below the floor {floor}")
        return CouplingReport(sigma_hint, len(values), TRANSIENT)

    for sigma in divisors(sigma_hint):
        start = _coupling_start(values, sigma, eps)
        verified = len(values) - sigma - (start - 1)
        if verified >= MIN_VERIFIED_PERIODS * sigma:
            logger.debug(
                f"Trace ({trace.i}, {trace.j}) couples at n={start} with period {sigma}"
            )
            return CouplingReport(sigma, start, PERIODIC, verified)

    if _decays(values, sigma_hint, floor):
        return CouplingReport(sigma_hint, len(values), TRANSIENT)

    logger.debug(f"Trace ({trace.i}, {trace.j}) is inconclusive at N_max={len(values)}")
    return CouplingReport(sigma_hint, len(values), INCONCLUSIVE)
