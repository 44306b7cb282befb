# -*- coding: utf-8 -*-

from typing import List, Tuple

import numpy as np
from numpy.typing import NDArray

from tropical_spectra.core.graph import SccPartition, scc
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO, TropicalScalar


def karp_cycle_mean(block: NDArray[np.float64]) -> float:
    """
    Maximal circuit mean of a strongly connected block by Karp's recurrence.

    ``walks[k, v]`` is the best weight of a walk with exactly ``k`` arcs from
    node 0 to ``v``; the mean is ``max_v min_k (walks[m, v] - walks[k, v]) / (m - k)``.
    """

    m = block.shape[0]
    walks = np.full((m + 1, m), ZERO, dtype=np.float64)
    walks[0, 0] = 0.0
    for k in range(1, m + 1):
        walks[k] = (walks[k - 1][:, None] + block).max(axis=0)

    best = ZERO
    for v in range(m):
        if walks[m, v] == ZERO:
            continue
        worst = np.inf
        for k in range(m):
            if walks[k, v] == ZERO:
                continue
            worst = min(worst, (walks[m, v] - walks[k, v]) / (m - k))
        best = max(best, worst)
    return float(best)


def class_cycle_means(
    a: TropicalMatrix,
    partition: SccPartition,
) -> List[Tuple[Tuple[int, ...], float]]:
    """
    Maximal circuit mean of every class that carries a circuit.
    """

    dense = a.dense
    result = list()
    for component in partition.nontrivial():
        index = np.array(component)
        result.append((component, karp_cycle_mean(dense[np.ix_(index, index)])))
    return result


def max_cycle_mean(a: TropicalMatrix) -> TropicalScalar:
    means = [mean for _, mean in class_cycle_means(a, scc(a))]
    return max(means) if means else ZERO
