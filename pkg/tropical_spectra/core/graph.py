# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Iterable, List, Tuple

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from tropical_spectra.core.matrix import TropicalMatrix


@dataclass(frozen=True)
class SccPartition:
    """
    Strongly connected components of ``G(A)``.

    Classes are sorted by their smallest node; ``condensation`` lists one
    ``(source_class, target_class)`` pair for every arc between two classes,
    so it is a multiset over an acyclic simple graph.
    """

    class_of: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]
    condensation: Tuple[Tuple[int, int], ...]
    cyclic: Tuple[bool, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def nontrivial(self) -> List[Tuple[int, ...]]:
        """
        Classes that carry at least one circuit.
        """

        return [c for c, has_circuit in zip(self.classes, self.cyclic) if has_circuit]

    def condensation_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.count))
        graph.add_edges_from(self.condensation)
        return graph


def partition_digraph(n: int, arcs: Iterable[Tuple[int, int]]) -> SccPartition:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(arcs)

    components = sorted(
        (tuple(sorted(c)) for c in nx.strongly_connected_components(graph)),
        key=lambda c: c[0],
    )

    class_of = [0] * n
    for index, component in enumerate(components):
        for node in component:
            class_of[node] = index

    cyclic = [len(c) > 1 or graph.has_edge(c[0], c[0]) for c in components]
    condensation = tuple(
        (class_of[i], class_of[j])
        for i, j in sorted(graph.edges())
        if class_of[i] != class_of[j]
    )
    return SccPartition(
        class_of=tuple(class_of),
        classes=tuple(components),
        condensation=condensation,
        cyclic=tuple(cyclic),
    )


def scc(a: TropicalMatrix) -> SccPartition:
    return partition_digraph(a.n, ((i, j) for i, j, _ in a.arcs()))


def is_irreducible(a: TropicalMatrix) -> bool:
    # A single node is strongly connected even without a loop.
    return scc(a).count == 1


def reachability(a: TropicalMatrix) -> NDArray[np.bool_]:
    """
    Reflexive-transitive reachability: ``reach[i, j]`` iff a path leads from i to j.
    """

    reach = np.eye(a.n, dtype=bool)
    graph = a.digraph()
    for i in range(a.n):
        for j in nx.descendants(graph, i):
            reach[i, j] = True
    return reach
