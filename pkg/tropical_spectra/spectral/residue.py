# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from tropical_spectra.core.graph import is_irreducible
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO
from tropical_spectra.exceptions import (
    AcyclicError,
    NotIrreducibleError,
    SearchCapReachedError,
)
from tropical_spectra.spectral.cyclicity import cyclicity


@dataclass(frozen=True)
class ResidueResult:
    residue: int
    threshold: int
    gamma: int


def residue_search_cap(n: int, gamma: int) -> int:
    # Boolean powers of an irreducible matrix become periodic after at most
    # (n - 1)^2 + 1 steps; 4 * n * gamma rounds then confirm the period.
    return 4 * n * gamma + (n - 1) ** 2 + 1


def nu_residue(
    a: TropicalMatrix,
    i: int,
    j: int,
    cap: Optional[int] = None,
) -> ResidueResult:
    """
    Residue of the i→j path lengths modulo ``γ(A)`` and the threshold after
    which every length in that residue class is realized.
    """

    if not is_irreducible(a):
        raise NotIrreducibleError("nu_residue requires an irreducible matrix")

    gamma = cyclicity(range(a.n), ((u, v) for u, v, _ in a.arcs()))
    limit = cap if cap is not None else residue_search_cap(a.n, gamma)
    adjacency = (a.dense != ZERO).astype(np.int64)

    state = np.zeros(a.n, dtype=np.int64)
    state[i] = 1
    states: List[np.ndarray] = [state.astype(bool)]
    while True:
        length = len(states)
        if length > limit:
            raise SearchCapReachedError(limit, f"path lengths from {i} to {j}")
        state = (states[-1].astype(np.int64) @ adjacency) > 0
        states.append(state)
        if length >= gamma and np.array_equal(state, states[length - gamma]):
            break

    # states[length - gamma:] is one full period of the ultimate behaviour.
    period = states[length - gamma :]
    hits = [k for k in range(gamma) if period[k][j]]
    if not hits:
        raise AcyclicError(f"No long paths from {i} to {j}")
    residue = (length - gamma + hits[0]) % gamma

    threshold = 0
    for m in range(length - 1, -1, -1):
        if m % gamma == residue and not states[m][j]:
            threshold = m + 1
            break
    return ResidueResult(residue=residue, threshold=threshold, gamma=gamma)
