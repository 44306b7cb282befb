# -*- coding: utf-8 -*-

from functools import reduce
from math import gcd, lcm
from typing import List, Sequence, Set, Tuple

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO

Rows = Sequence[Sequence[float]]


def brute_product(a: Rows, b: Rows) -> List[List[float]]:
    n = len(a)
    return [
        [max(a[i][k] + b[k][j] for k in range(n)) for j in range(n)] for i in range(n)
    ]


def brute_power(a: TropicalMatrix, k: int) -> List[List[float]]:
    rows = a.dense.tolist()
    result = [[0.0 if i == j else ZERO for j in range(a.n)] for i in range(a.n)]
    for _ in range(k):
        result = brute_product(result, rows)
    return result


def circuit_mean(a: TropicalMatrix) -> float:
    """
    Maximal mean over the elementary circuits listed by networkx.
    """

    graph = a.digraph()
    best = ZERO
    for cycle in nx.simple_cycles(graph):
        arcs = zip(cycle, cycle[1:] + cycle[:1])
        weight = sum(graph[u][v]["weight"] for u, v in arcs)
        best = max(best, weight / len(cycle))
    return best


def circuit_cyclicity(a: TropicalMatrix) -> int:
    graph = a.digraph()
    result = 1
    for component in nx.strongly_connected_components(graph):
        sub = graph.subgraph(component)
        lengths = [len(c) for c in nx.simple_cycles(sub)]
        if lengths:
            result = lcm(result, reduce(gcd, lengths))
    return result


def critical_circuits(
    a: TropicalMatrix,
    eps: float = 1e-9,
) -> Tuple[Set[int], Set[Tuple[int, int]]]:
    """
    Nodes and arcs of every elementary circuit whose mean is maximal.
    """

    rho = circuit_mean(a)
    graph = a.digraph()
    nodes: Set[int] = set()
    arcs: Set[Tuple[int, int]] = set()
    if rho == ZERO:
        return nodes, arcs
    for cycle in nx.simple_cycles(graph):
        pairs = list(zip(cycle, cycle[1:] + cycle[:1]))
        weight = sum(graph[u][v]["weight"] for u, v in pairs)
        if abs(weight / len(cycle) - rho) <= eps:
            nodes.update(cycle)
            arcs.update(pairs)
    return nodes, arcs


def strict_reach(a: TropicalMatrix) -> List[List[bool]]:
    """
    Warshall closure: ``reach[u][v]`` when a path with at least one arc
    leads from ``u`` to ``v``.
    """

    n = a.n
    reach = [[a[(u, v)] != ZERO for v in range(n)] for u in range(n)]
    for k in range(n):
        for u in range(n):
            if reach[u][k]:
                for v in range(n):
                    reach[u][v] = reach[u][v] or reach[k][v]
    return reach


def walk_lengths(a: TropicalMatrix, limit: int) -> List[NDArray[np.bool_]]:
    """
    Boolean powers: ``walks[m][u, v]`` when a walk of exactly ``m`` arcs
    leads from ``u`` to ``v``, for ``m`` in ``0..limit``.
    """

    adjacency = (a.dense != ZERO).astype(np.int64)
    walks = [np.eye(a.n, dtype=bool)]
    for _ in range(limit):
        walks.append((walks[-1].astype(np.int64) @ adjacency) > 0)
    return walks


def pairwise_join(u: Sequence[float], family: Sequence[Sequence[float]]) -> List[float]:
    """
    Join of the largest multiples of each non-proportional finite member
    of ``family`` lying below the finite vector ``u``.
    """

    join = [ZERO] * len(u)
    for v in family:
        gaps = [x - y for x, y in zip(u, v)]
        if max(gaps) - min(gaps) <= 1e-9:
            continue
        c = min(gaps)
        join = [max(j, c + y) for j, y in zip(join, v)]
    return join
