# -*- coding: utf-8 -*-

from math import gcd, lcm
from typing import Iterable, Tuple

import networkx as nx

from tropical_spectra.core.graph import partition_digraph


def component_cyclicity(graph: nx.DiGraph) -> int:
    """
    Gcd of the circuit lengths of a strongly connected digraph with a circuit.

    With BFS levels from any root, every arc ``(u, v)`` closes a cycle defect
    ``level[u] + 1 - level[v]``; their gcd is the gcd of all circuit lengths.
    """

    root = min(graph.nodes)
    level = nx.single_source_shortest_path_length(graph, root)
    result = 0
    for u, v in graph.edges():
        result = gcd(result, abs(level[u] + 1 - level[v]))
    return result


def cyclicity(nodes: Iterable[int], arcs: Iterable[Tuple[int, int]]) -> int:
    node_list = sorted(set(nodes))
    arc_list = [(u, v) for u, v in arcs]
    position = {node: k for k, node in enumerate(node_list)}

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(node_list)))
    graph.add_edges_from((position[u], position[v]) for u, v in arc_list)

    partition = partition_digraph(len(node_list), graph.edges())
    result = 1
    for component in partition.nontrivial():
        result = lcm(result, component_cyclicity(graph.subgraph(component)))
    return result
