# -*- coding: utf-8 -*-

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.graph import reachability, scc
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import TOP, ZERO
from tropical_spectra.logging.logging import logger
from tropical_spectra.spectral.mean import class_cycle_means


@dataclass(frozen=True)
class ClosureResult:
    """
    ``plus = A ⊕ A² ⊕ ...`` and ``star = I ⊕ plus``.

    When some circuit has positive weight the closure is ``diverged`` and every
    entry whose paths may run through such a circuit is ``+inf``.
    """

    star: TropicalMatrix
    plus: TropicalMatrix
    diverged: bool


def floyd_warshall_plus(dense: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Path supremum over paths with at least one arc; circuits must be nonpositive.
    """

    plus = np.array(dense, dtype=np.float64)
    for k in range(plus.shape[0]):
        plus = np.maximum(plus, plus[:, k : k + 1] + plus[k : k + 1, :])
    return plus


def kleene_star(a: TropicalMatrix, eps: ToleranceLike = None) -> ClosureResult:
    tol = as_tolerance(eps)
    partition = scc(a)

    hot = [
        node
        for component, mean in class_cycle_means(a, partition)
        if mean > tol.eps
        for node in component
    ]

    dense = np.array(a.dense)
    if hot:
        dense[hot, :] = ZERO
        dense[:, hot] = ZERO

    plus = floyd_warshall_plus(dense)

    if hot:
        reach = reachability(a)
        through = (reach[:, hot].astype(np.int64) @ reach[hot, :].astype(np.int64)) > 0
        plus[through] = TOP
        logger.debug(
            f"Closure diverged: {len(hot)} nodes lie on supercritical classes, "
            f"{int(through.sum())} entries are +inf"
        )

    star = np.array(plus)
    np.fill_diagonal(star, np.maximum(np.diagonal(plus), 0.0))

    return ClosureResult(
        star=TropicalMatrix.from_dense(star, labels=a.labels, extended=bool(hot)),
        plus=TropicalMatrix.from_dense(plus, labels=a.labels, extended=bool(hot)),
        diverged=bool(hot),
    )


def scaled_closure(
    a: TropicalMatrix,
    lam: float,
    eps: ToleranceLike = None,
) -> ClosureResult:
    """
    Closure of ``A_λ``, that is A with ``λ`` subtracted from every entry.
    """

    return kleene_star(a.shift(-lam), eps)
