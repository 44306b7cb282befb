# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import List, Set, Tuple

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO, TropicalScalar
from tropical_spectra.exceptions import AcyclicError
from tropical_spectra.logging.logging import logger
from tropical_spectra.spectral.closure import ClosureResult, kleene_star
from tropical_spectra.spectral.mean import max_cycle_mean

Arc = Tuple[int, int]


def normalize(a: TropicalMatrix) -> TropicalMatrix:
    rho = max_cycle_mean(a)
    if rho == ZERO:
        raise AcyclicError()
    return a.shift(-rho)


@dataclass(frozen=True)
class CriticalStructure:
    """
    Everything derived from the closure of the normalized matrix ``Ã``.

    Decisions within ``marginal_factor * eps`` of the acceptance boundary are
    listed in ``marginal_nodes`` and ``marginal_arcs`` whatever their outcome.
    """

    rho: TropicalScalar
    normalized: TropicalMatrix
    closure: ClosureResult
    recurrent: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]
    arcs: Tuple[Arc, ...]
    marginal_nodes: Tuple[int, ...]
    marginal_arcs: Tuple[Arc, ...]


def critical_structure(
    a: TropicalMatrix,
    eps: ToleranceLike = None,
) -> CriticalStructure:
    tol = as_tolerance(eps)
    rho = max_cycle_mean(a)
    if rho == ZERO:
        raise AcyclicError()

    normalized = a.shift(-rho)
    closure = kleene_star(normalized, tol)
    plus = closure.plus.dense

    recurrent = list()
    marginal_nodes = list()
    for i in range(a.n):
        accepted, marginal = tol.classify(float(plus[i, i]))
        if accepted:
            recurrent.append(i)
        if marginal:
            marginal_nodes.append(i)

    classes: List[Tuple[int, ...]] = list()
    assigned: Set[int] = set()
    for i in recurrent:
        if i in assigned:
            continue
        members = tuple(
            j
            for j in recurrent
            if j not in assigned and tol.is_one(float(plus[i, j] + plus[j, i]))
        )
        assigned.update(members)
        classes.append(members)

    arcs = list()
    marginal_arcs = list()
    for i, j, w in normalized.arcs():
        accepted, marginal = tol.classify(w + float(plus[j, i]))
        if accepted:
            arcs.append((i, j))
        if marginal:
            marginal_arcs.append((i, j))

    if marginal_nodes or marginal_arcs:
        logger.debug(
            f"Marginal critical decisions (eps={tol.eps}): "
            f"nodes={marginal_nodes}, arcs={marginal_arcs}"
        )

    return CriticalStructure(
        rho=rho,
        normalized=normalized,
        closure=closure,
        recurrent=tuple(recurrent),
        classes=tuple(classes),
        arcs=tuple(arcs),
        marginal_nodes=tuple(marginal_nodes),
        marginal_arcs=tuple(marginal_arcs),
    )


def recurrent_nodes(a: TropicalMatrix, eps: ToleranceLike = None) -> Tuple[int, ...]:
    return critical_structure(a, eps).recurrent


def recurrence_classes(
    a: TropicalMatrix,
    eps: ToleranceLike = None,
) -> Tuple[Tuple[int, ...], ...]:
    return critical_structure(a, eps).classes


def critical_graph(
    a: TropicalMatrix,
    eps: ToleranceLike = None,
) -> Tuple[Tuple[int, ...], Tuple[Arc, ...]]:
    """
    Nodes and arcs of the critical graph.

    An arc ``(i, j)`` is critical when ``Ã_ij + Ã⁺_ji`` equals one, i.e. it lies
    on a circuit of mean ``ρ(A)``.
    """

    structure = critical_structure(a, eps)
    return structure.recurrent, structure.arcs
