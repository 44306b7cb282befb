# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix, mat_vec
from tropical_spectra.core.scalar import ZERO, as_vector, vec_close
from tropical_spectra.eigen.check import check_super_eigen
from tropical_spectra.exceptions import NotSuperEigenvectorError
from tropical_spectra.spectral.structure import CriticalStructure, critical_structure


@dataclass(frozen=True)
class ProportionalityVerdict:
    members: Tuple[int, ...]
    constant: Optional[float]
    passed: bool


@dataclass(frozen=True)
class MinimumPrincipleVerdict:
    node: int
    lhs: float
    rhs: float
    passed: bool


def _require_super_eigen(
    a: TropicalMatrix,
    structure: CriticalStructure,
    u: np.ndarray,
    eps: ToleranceLike,
    name: str,
) -> None:
    report = check_super_eigen(a, structure.rho, u, eps)
    if not report.passed:
        raise NotSuperEigenvectorError(
            f"{name} is not a ρ(A)-super-eigenvector: residual={report.residual}"
        )


def restriction_proportionality_check(
    a: TropicalMatrix,
    v: ArrayLike,
    w: ArrayLike,
    eps: ToleranceLike = None,
) -> List[ProportionalityVerdict]:
    """
    On every recurrence class ``C`` test ``v|C = c ⊗ w|C`` with ``c`` taken at
    the smallest node of ``C`` where both vectors are finite.
    """

    tol = as_tolerance(eps)
    first = as_vector(v, a.n)
    second = as_vector(w, a.n)
    structure = critical_structure(a, tol)
    _require_super_eigen(a, structure, first, tol, "v")
    _require_super_eigen(a, structure, second, tol, "w")

    result = list()
    for members in structure.classes:
        index = list(members)
        vc, wc = first[index], second[index]
        both = np.nonzero((vc != ZERO) & (wc != ZERO))[0]
        if both.size == 0:
            passed = bool(np.all(vc == ZERO) and np.all(wc == ZERO))
            result.append(ProportionalityVerdict(members, None, passed))
            continue
        k = int(both[0])
        constant = float(vc[k] - wc[k])
        scaled = np.where(wc == ZERO, ZERO, wc + constant)
        passed = vec_close(vc, scaled, tol)
        result.append(ProportionalityVerdict(members, constant, passed))
    return result


def minimum_principle_check(
    a: TropicalMatrix,
    u: ArrayLike,
    eps: ToleranceLike = None,
) -> List[MinimumPrincipleVerdict]:
    tol = as_tolerance(eps)
    vector = as_vector(u, a.n)
    structure = critical_structure(a, tol)
    _require_super_eigen(a, structure, vector, tol, "u")

    lhs = mat_vec(a, vector)
    result = list()
    for i in structure.recurrent:
        rhs = ZERO if vector[i] == ZERO else float(vector[i] + structure.rho)
        value = float(lhs[i])
        result.append(MinimumPrincipleVerdict(i, value, rhs, tol.equal(value, rhs)))
    return result
