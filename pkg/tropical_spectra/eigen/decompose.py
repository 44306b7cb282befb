# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Dict, Sequence

import numpy as np
from numpy.typing import ArrayLike

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import (
    ZERO,
    TropicalScalar,
    Vector,
    as_vector,
    is_zero_vector,
    normalize_top,
    otimes_array,
    vec_close,
    vec_gap,
)
from tropical_spectra.eigen.check import check_eigen
from tropical_spectra.exceptions import NotEigenvectorError, ZeroVectorError
from tropical_spectra.spectral.structure import critical_structure


@dataclass(frozen=True)
class Decomposition:
    coefficients: Dict[int, TropicalScalar]
    reconstruction: Vector
    residual: float


def decompose(
    a: TropicalMatrix,
    u: ArrayLike,
    eps: ToleranceLike = None,
) -> Decomposition:
    """
    Write a ``ρ(A)``-eigenvector as ``⊕_{j critical} Ã*_{·j} ⊗ u_j``.
    """

    tol = as_tolerance(eps)
    vector = as_vector(u, a.n)
    structure = critical_structure(a, tol)

    report = check_eigen(a, structure.rho, vector, tol)
    if not report.passed:
        raise NotEigenvectorError(
            f"Not a ρ(A)-eigenvector: residual={report.residual}, "
            f"zero mismatch at {list(report.exact_zero_mismatch)}"
        )

    star = structure.closure.star.dense
    nodes = list(structure.recurrent)
    coefficients = {j: float(vector[j]) for j in nodes}

    if nodes:
        weights = np.array([coefficients[j] for j in nodes])
        reconstruction = otimes_array(star[:, nodes], weights[None, :]).max(axis=1)
    else:
        reconstruction = np.full(a.n, ZERO)

    return Decomposition(
        coefficients=coefficients,
        reconstruction=reconstruction,
        residual=vec_gap(vector, reconstruction),
    )


def best_sub_scaling(u: Vector, v: Vector) -> TropicalScalar:
    """
    Largest ``c`` with ``c ⊗ v ≤ u``; ZERO when ``v`` leaves the support of ``u``.
    """

    support = v != ZERO
    if not support.any():
        return ZERO
    return float(np.min(u[support] - v[support]))


def span_projection(u: ArrayLike, family: Sequence[ArrayLike]) -> Vector:
    """
    Greatest max-plus combination of ``family`` lying below ``u``.
    """

    vector = as_vector(u)
    join = np.full(vector.shape[0], ZERO)
    for v in family:
        member = as_vector(v, vector.shape[0])
        c = best_sub_scaling(vector, member)
        if c != ZERO:
            join = np.maximum(join, otimes_array(member, c))
    return join


def span_residual(u: ArrayLike, family: Sequence[ArrayLike]) -> float:
    return vec_gap(u, span_projection(u, family))


def is_extremal(
    u: ArrayLike,
    family: Sequence[ArrayLike],
    eps: ToleranceLike = None,
) -> bool:
    tol = as_tolerance(eps)
    vector = as_vector(u)
    if is_zero_vector(vector):
        raise ZeroVectorError()

    target = normalize_top(vector)
    others = [
        normalize_top(as_vector(v, vector.shape[0]))
        for v in family
        if not is_zero_vector(as_vector(v))
    ]
    others = [v for v in others if not vec_close(v, target, tol)]
    return not vec_close(span_projection(target, others), target, tol)
