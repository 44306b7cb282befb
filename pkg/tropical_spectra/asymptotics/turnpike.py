# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from tropical_spectra.config import ToleranceLike
from tropical_spectra.core.graph import is_irreducible
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO, TropicalScalar
from tropical_spectra.exceptions import (
    NoCriticalNodesError,
    NoPathError,
    NotIrreducibleError,
)
from tropical_spectra.spectral.mean import max_cycle_mean
from tropical_spectra.spectral.structure import critical_structure


@dataclass(frozen=True)
class OptimalPath:
    nodes: Tuple[int, ...]
    weight: TropicalScalar
    noncritical_count: int

    @property
    def length(self) -> int:
        return len(self.nodes) - 1


@dataclass(frozen=True)
class TurnpikeProfile:
    i: int
    j: int
    counts: Tuple[Tuple[int, int], ...]

    @property
    def max_noncritical(self) -> int:
        """
        Empirical bound on the non-critical nodes of optimal paths.
        """

        return max((c for _, c in self.counts), default=0)


class PathTable:
    """
    Forward dynamic program from a fixed source node.

    ``best[k, v]`` is the maximal weight of a path with ``k`` arcs from the
    source to ``v`` and ``parent[k, v]`` the predecessor attaining it. Ties go
    to the smallest predecessor index.
    """

    def __init__(self, a: TropicalMatrix, source: int, n_max: int):
        dense = a.dense
        self._source = source
        self._best = np.full((n_max + 1, a.n), ZERO, dtype=np.float64)
        self._parent = np.full((n_max + 1, a.n), -1, dtype=np.int64)
        self._best[0, source] = 0.0
        for k in range(1, n_max + 1):
            candidates = self._best[k - 1][:, None] + dense
            self._parent[k] = np.argmax(candidates, axis=0)
            self._best[k] = candidates.max(axis=0)

    @property
    def best(self) -> NDArray[np.float64]:
        return self._best

    @property
    def n_max(self) -> int:
        return self._best.shape[0] - 1

    def path(self, target: int, n: int, critical: FrozenSet[int]) -> OptimalPath:
        weight = float(self._best[n, target])
        if weight == ZERO:
            raise NoPathError(self._source, target, n)

        nodes = [target]
        for k in range(n, 0, -1):
            nodes.append(int(self._parent[k, nodes[-1]]))
        nodes.reverse()

        noncritical = sum(1 for node in nodes if node not in critical)
        return OptimalPath(tuple(nodes), weight, noncritical)


def _critical_set(a: TropicalMatrix, eps: ToleranceLike) -> FrozenSet[int]:
    if max_cycle_mean(a) == ZERO:
        return frozenset()
    return frozenset(critical_structure(a, eps).recurrent)


def optimal_path(
    a: TropicalMatrix,
    i: int,
    j: int,
    n: int,
    eps: ToleranceLike = None,
    critical: Optional[Iterable[int]] = None,
) -> OptimalPath:
    """
    A maximal-weight path with ``n`` arcs from ``i`` to ``j``.

    Non-critical nodes are counted against ``critical`` when given, otherwise
    against the critical nodes of ``a`` (none when ``a`` is acyclic).
    """

    if n < 0:
        raise ValueError(f"Negative path length: {n}")
    if critical is None:
        critical = _critical_set(a, eps)
    return PathTable(a, i, n).path(j, n, frozenset(critical))


def turnpike_profile(
    a: TropicalMatrix,
    i: int,
    j: int,
    n_list: Iterable[int],
    eps: ToleranceLike = None,
) -> TurnpikeProfile:
    lengths = sorted(set(n_list))
    if not is_irreducible(a):
        raise NotIrreducibleError("turnpike_profile requires an irreducible matrix")

    critical = _critical_set(a, eps)
    if not critical:
        raise NoCriticalNodesError("The matrix has no critical nodes")

    table = PathTable(a, i, lengths[-1] if lengths else 0)
    counts = tuple((n, table.path(j, n, critical).noncritical_count) for n in lengths)
    return TurnpikeProfile(i, j, counts)
