# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix, mat_vec
from tropical_spectra.core.scalar import (
    ZERO,
    TropicalScalar,
    Vector,
    as_vector,
    otimes_array,
)
from tropical_spectra.eigen.check import check_eigen
from tropical_spectra.exceptions import AcyclicError, InvalidLambdaError
from tropical_spectra.spectral.closure import scaled_closure
from tropical_spectra.spectral.summary import spectral_summary


@dataclass(frozen=True)
class EigenBasis:
    """
    One normalized closure column ``Ã*_{·j}`` per critical class.

    ``representatives[k]`` is the node ``j`` of column ``k``; ``classes[k]``
    lists the members of its critical class and ``class_of[k]`` its index in
    the spectral summary.
    """

    lam: TropicalScalar
    columns: Tuple[Vector, ...]
    representatives: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]
    class_of: Tuple[int, ...]
    eps: float

    def __len__(self) -> int:
        return len(self.columns)

    def matrix(self) -> np.ndarray:
        """
        Columns stacked side by side, shape ``(n, len(basis))``.
        """

        return np.stack(self.columns, axis=1)

    def combine(self, coefficients: ArrayLike) -> Vector:
        """
        Max-plus combination ``⊕_k c_k ⊗ columns[k]``.
        """

        c = as_vector(coefficients, len(self.columns))
        return otimes_array(self.matrix(), c[None, :]).max(axis=1)


def principal_eigenbasis(a: TropicalMatrix, eps: ToleranceLike = None) -> EigenBasis:
    tol = as_tolerance(eps)
    summary = spectral_summary(a, tol)
    if summary.rho == ZERO:
        raise AcyclicError()
    if not summary.critical_nodes:
        return EigenBasis(summary.rho, (), (), (), (), tol.eps)

    star = scaled_closure(a, summary.rho, tol).star.dense
    representatives = tuple(min(c) for c in summary.critical_classes)
    return EigenBasis(
        lam=summary.rho,
        columns=tuple(star[:, j].copy() for j in representatives),
        representatives=representatives,
        classes=summary.critical_classes,
        class_of=tuple(range(len(representatives))),
        eps=tol.eps,
    )


def super_eigenvector(
    a: TropicalMatrix,
    lam: float,
    x: ArrayLike,
    eps: ToleranceLike = None,
) -> Vector:
    """
    ``(A_λ)* ⊗ x``, a λ-super-eigenvector whenever the closure converges.
    """

    closure = scaled_closure(a, lam, eps)
    if closure.diverged:
        raise InvalidLambdaError(f"The closure of A_λ diverges for λ={lam}")
    return mat_vec(closure.star, as_vector(x, a.n))


def column_is_eigenvector(
    a: TropicalMatrix,
    lam: float,
    i: int,
    eps: ToleranceLike = None,
) -> bool:
    closure = scaled_closure(a, lam, eps)
    if closure.diverged:
        return False
    return check_eigen(a, lam, closure.star.column(i), eps).passed
