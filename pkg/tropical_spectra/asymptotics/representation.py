# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
from numpy.typing import NDArray

from tropical_spectra.config import ToleranceLike, as_tolerance
from tropical_spectra.core.matrix import TropicalMatrix, dense_mul, power
from tropical_spectra.core.scalar import ZERO, otimes_array
from tropical_spectra.exceptions import NoCriticalNodesError
from tropical_spectra.spectral.closure import kleene_star
from tropical_spectra.spectral.structure import critical_structure


@dataclass(frozen=True)
class RepresentationCheck:
    n: int
    q: int
    q_prime: int
    lhs: float
    rhs: float
    passed: bool


class CyclicRepresentation:
    """
    Ultimate form of the normalized powers through the critical nodes::

        Ã^n_ij = max_{k critical} (Ã^q (Ã^σ)*)_ik + (Ã^q' (Ã^σ)*)_kj

    for ``q + q' ≡ n (mod σ)`` once ``n`` is past the coupling time. Powers and
    the closure of ``Ã^σ`` are computed once per instance.
    """

    def __init__(self, a: TropicalMatrix, sigma: int, eps: ToleranceLike = None):
        if sigma < 1:
            raise ValueError(f"sigma must be positive: {sigma}")

        self._tol = as_tolerance(eps)
        structure = critical_structure(a, self._tol)
        if not structure.recurrent:
            raise NoCriticalNodesError("The matrix has no critical nodes")

        self._sigma = sigma
        self._normalized = structure.normalized
        self._critical = list(structure.recurrent)
        period = power(self._normalized, sigma)
        self._period_star = kleene_star(period, self._tol).star.dense
        self._powers: Dict[int, NDArray[np.float64]] = dict()
        self._sides: Dict[int, NDArray[np.float64]] = dict()

    @property
    def sigma(self) -> int:
        return self._sigma

    def power(self, n: int) -> NDArray[np.float64]:
        if n not in self._powers:
            self._powers[n] = power(self._normalized, n).dense
        return self._powers[n]

    def side(self, q: int) -> NDArray[np.float64]:
        """
        ``Ã^q (Ã^σ)*``.
        """

        if q not in self._sides:
            self._sides[q] = dense_mul(self.power(q), self._period_star)
        return self._sides[q]

    def check(
        self,
        i: int,
        j: int,
        n: int,
        q: Optional[int] = None,
        q_prime: Optional[int] = None,
    ) -> RepresentationCheck:
        if q is None and q_prime is None:
            q, q_prime = n % self._sigma, 0
        elif q is None:
            q = (n - q_prime) % self._sigma
        elif q_prime is None:
            q_prime = (n - q) % self._sigma
        if not (0 <= q < self._sigma and 0 <= q_prime < self._sigma):
            raise ValueError(f"q={q} and q'={q_prime} must lie in [0, {self._sigma})")
        if (q + q_prime - n) % self._sigma != 0:
            raise ValueError(f"q + q' must be congruent to n={n} modulo {self._sigma}")

        lhs = float(self.power(n)[i, j])
        left = self.side(q)[i, self._critical]
        right = self.side(q_prime)[self._critical, j]
        terms = otimes_array(left, right)
        rhs = float(terms.max()) if terms.size else ZERO
        return RepresentationCheck(n, q, q_prime, lhs, rhs, self._tol.equal(lhs, rhs))


def verify_cyclic_representation(
    a: TropicalMatrix,
    i: int,
    j: int,
    n: int,
    sigma_ij: int,
    q: Optional[int] = None,
    q_prime: Optional[int] = None,
    eps: ToleranceLike = None,
) -> RepresentationCheck:
    return CyclicRepresentation(a, sigma_ij, eps).check(i, j, n, q, q_prime)
