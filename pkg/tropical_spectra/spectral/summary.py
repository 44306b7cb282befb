# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Tuple

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.graph import partition_digraph
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO, TropicalScalar
from tropical_spectra.spectral.cyclicity import cyclicity
from tropical_spectra.spectral.mean import max_cycle_mean
from tropical_spectra.spectral.structure import critical_structure

Arc = Tuple[int, int]


@dataclass(frozen=True)
class SpectralSummary:
    rho: TropicalScalar
    critical_nodes: Tuple[int, ...]
    critical_arcs: Tuple[Arc, ...]
    critical_classes: Tuple[Tuple[int, ...], ...]
    recurrence_classes: Tuple[Tuple[int, ...], ...]
    gamma: int
    sigma: int
    eps: float
    marginal_nodes: Tuple[int, ...] = ()
    marginal_arcs: Tuple[Arc, ...] = ()

    @property
    def has_critical_nodes(self) -> bool:
        return bool(self.critical_nodes)


def spectral_summary(a: TropicalMatrix, eps: ToleranceLike = None) -> SpectralSummary:
    tol = as_tolerance(eps)
    gamma = cyclicity(range(a.n), ((i, j) for i, j, _ in a.arcs()))

    if max_cycle_mean(a) == ZERO:
        return SpectralSummary(
            rho=ZERO,
            critical_nodes=(),
            critical_arcs=(),
            critical_classes=(),
            recurrence_classes=(),
            gamma=gamma,
            sigma=1,
            eps=tol.eps,
        )

    structure = critical_structure(a, tol)
    nodes = structure.recurrent
    position = {node: k for k, node in enumerate(nodes)}
    partition = partition_digraph(
        len(nodes),
        ((position[i], position[j]) for i, j in structure.arcs),
    )
    critical_classes = tuple(
        tuple(nodes[k] for k in component) for component in partition.classes
    )

    return SpectralSummary(
        rho=structure.rho,
        critical_nodes=nodes,
        critical_arcs=structure.arcs,
        critical_classes=critical_classes,
        recurrence_classes=structure.classes,
        gamma=gamma,
        sigma=cyclicity(nodes, structure.arcs),
        eps=tol.eps,
        marginal_nodes=structure.marginal_nodes,
        marginal_arcs=structure.marginal_arcs,
    )
