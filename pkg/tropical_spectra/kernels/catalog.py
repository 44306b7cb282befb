# -*- coding: utf-8 -*-

from functools import lru_cache
from itertools import count
from math import fsum, isfinite
from typing import Callable, Dict, Final, List, Optional, Union

from overrides import override

from tropical_spectra.core.scalar import ZERO
from tropical_spectra.exceptions import KernelSpecError, UnknownKernelError
from tropical_spectra.kernels.base import Arc, ClosedForms, LazyKernel
from tropical_spectra.kernels.spec import KernelSpec

KERNEL_LADDER: Final[str] = "ladder"
KERNEL_LADDER_FLAT: Final[str] = "ladder-flat"
KERNEL_LADDER_LOOPS: Final[str] = "ladder-loops"
KERNEL_TIGHT1: Final[str] = "tight1"
KERNEL_TIGHT2: Final[str] = "tight2"
KERNEL_BIRTH: Final[str] = "birth"
KERNEL_TRIANGULAR: Final[str] = "triangular"
KERNEL_OSCILLATING: Final[str] = "oscillating"


def harmonic_gap(j: int, i: int) -> float:
    """
    ``sum_{k=j+1}^{i} 1/k``.
    """

    return fsum(1.0 / k for k in range(j + 1, i + 1))


def _finite(name: str, value: float) -> float:
    if not isfinite(value):
        raise KernelSpecError(f"Parameter '{name}' must be finite: {value}")
    return value


class LadderKernel(LazyKernel):
    @property
    @override
    def name(self) -> str:
        return KERNEL_LADDER

    @property
    @override
    def doc(self) -> str:
        return "Arcs i→i+1 of weight 0 and returns i→0 of weight -1/i"

    def return_weight(self, i: int) -> float:
        return -1.0 / i

    @override
    def row_arcs(self, i: int, horizon: Optional[int] = None) -> List[Arc]:
        arcs = [(i + 1, 0.0)]
        if i >= 1:
            arcs.append((0, self.return_weight(i)))
        return arcs

    @property
    @override
    def closed_forms(self) -> ClosedForms:
        return ClosedForms(rho=0.0, plus=lambda i, j: 0.0, star=lambda i, j: 0.0)


class LadderFlatKernel(LadderKernel):
    @property
    @override
    def name(self) -> str:
        return KERNEL_LADDER_FLAT

    @property
    @override
    def doc(self) -> str:
        return "Arcs i→i+1 of weight 0 and returns i→0 of weight -1"

    @override
    def return_weight(self, i: int) -> float:
        return -1.0

    @property
    @override
    def closed_forms(self) -> ClosedForms:
        return ClosedForms(rho=0.0)


class LadderLoopsKernel(LadderKernel):
    @property
    @override
    def name(self) -> str:
        return KERNEL_LADDER_LOOPS

    @property
    @override
    def doc(self) -> str:
        return "The ladder with a 0-loop at every node"

    @override
    def row_arcs(self, i: int, horizon: Optional[int] = None) -> List[Arc]:
        return [(i, 0.0)] + super().row_arcs(i, horizon)


class Tight1Kernel(LazyKernel):
    @property
    @override
    def name(self) -> str:
        return KERNEL_TIGHT1

    @property
    @override
    def doc(self) -> str:
        return "Up arcs of weight 0, down arcs of weight -1 and a 0-loop at node 0"

    @override
    def row_arcs(self, i: int, horizon: Optional[int] = None) -> List[Arc]:
        if i == 0:
            return [(0, 0.0), (1, 0.0)]
        return [(i + 1, 0.0), (i - 1, -1.0)]

    @staticmethod
    def plus(i: int, j: int) -> float:
        if i > j:
            return float(j - i)
        if i == j and i != 0:
            return -1.0
        return 0.0

    @staticmethod
    def star(i: int, j: int) -> float:
        return 0.0 if i == j else Tight1Kernel.plus(i, j)

    @property
    @override
    def closed_forms(self) -> ClosedForms:
        return ClosedForms(
            rho=0.0,
            plus=self.plus,
            star=self.star,
            eigenvector=lambda lam, k: float(-k),
            martin=lambda lam, i, j: self.star(i, j),
            boundary=lambda lam, i: 0.0,
            closure_margin=0,
        )


class Tight2Kernel(LazyKernel):
    @property
    @override
    def name(self) -> str:
        return KERNEL_TIGHT2

    @property
    @override
    def doc(self) -> str:
        return "Up arcs of weight 0 and down arcs i→i-1 of weight -1/i"

    @override
    def row_arcs(self, i: int, horizon: Optional[int] = None) -> List[Arc]:
        if i == 0:
            return [(1, 0.0)]
        return [(i + 1, 0.0), (i - 1, -1.0 / i)]

    @staticmethod
    def plus(i: int, j: int) -> float:
        if i > j:
            return -harmonic_gap(j, i)
        if i == j:
            return -1.0 / (i + 1)
        return 0.0

    @staticmethod
    def star(i: int, j: int) -> float:
        return 0.0 if i == j else Tight2Kernel.plus(i, j)

    @staticmethod
    def power(i: int, j: int, n: int) -> float:
        """
        Return walks ``0 → 0`` only; ``A^{2m}_00 = -H_m``.
        """

        if i != 0 or j != 0:
            raise ValueError("Only the (0, 0) powers are known in closed form")
        if n % 2:
            return ZERO
        return -harmonic_gap(0, n // 2)

    @property
    @override
    def closed_forms(self) -> ClosedForms:
        return ClosedForms(
            rho=0.0,
            plus=self.plus,
            star=self.star,
            eigenvector=lambda lam, k: 0.0,
            martin=lambda lam, i, j: self.star(i, j),
            boundary=lambda lam, i: 0.0,
            power=self.power,
            power_entry=(0, 0, 1),
            # The frontier node N returns through N-1 only.
            closure_margin=1,
        )


class BirthDeathKernel(LazyKernel):
    def __init__(self, p: float = -1.0, q: float = -3.0):
        self._p = _finite("p", p)
        self._q = _finite("q", q)

    @property
    @override
    def name(self) -> str:
        return KERNEL_BIRTH

    @property
    @override
    def doc(self) -> str:
        return "Birth arcs i→i+1 of weight p and death arcs i→i-1 of weight q"

    @property
    @override
    def parameters(self) -> Dict[str, float]:
        return {"p": self._p, "q": self._q}

    @property
    def rho(self) -> float:
        return (self._p + self._q) / 2.0

    @override
    def row_arcs(self, i: int, horizon: Optional[int] = None) -> List[Arc]:
        if i == 0:
            return [(1, self._p)]
        return [(i + 1, self._p), (i - 1, self._q)]

    def eigenvector(self, lam: float, k: int) -> float:
        return k * (lam - self._p)

    def martin(self, lam: float, i: int, j: int) -> float:
        value = i * (lam - self._p)
        if i > j:
            value += (i - j) * (self._p + self._q - 2.0 * lam)
        return value

    @property
    @override
    def closed_forms(self) -> ClosedForms:
        return ClosedForms(
            rho=self.rho,
            eigenvector=self.eigenvector,
            martin=self.martin,
            boundary=self.eigenvector,
        )

    @classmethod
    def from_spec(cls, spec: KernelSpec):
        spec.require_known("p", "q")
        return cls(p=spec.get("p", -1.0), q=spec.get("q", -3.0))


class TriangularKernel(LazyKernel):
    """
    Diagonal ``α_i = -1/(i+1)``, weight ``β`` on the subdiagonal and on every
    entry above the diagonal. Rows are not locally finite.
    """

    def __init__(self, beta: float = -1.0):
        self._beta = _finite("beta", beta)

    @property
    @override
    def name(self) -> str:
        return KERNEL_TRIANGULAR

    @property
    @override
    def doc(self) -> str:
        return "Weight beta below and above the diagonal, alpha_i = -1/(i+1) on it"

    @property
    @override
    def parameters(self) -> Dict[str, float]:
        return {"beta": self._beta}

    @property
    @override
    def right_locally_finite(self) -> bool:
        return False

    @staticmethod
    def alpha(i: int) -> float:
        return -1.0 / (i + 1)

    @override
    def row_arcs(self, i: int, horizon: Optional[int] = None) -> List[Arc]:
        if horizon is None:
            raise KernelSpecError(f"Rows of '{self.name}' need a horizon")
        arcs = [(i, self.alpha(i))]
        if i >= 1:
            arcs.append((i - 1, self._beta))
        arcs.extend((j, self._beta) for j in range(i + 1, horizon + 1))
        return arcs

    def martin(self, lam: float, i: int, j: int) -> float:
        if i < j:
            return 0.0
        if j >= 1:
            return (self._beta - lam) * (i - j - 1)
        return (self._beta - lam) * i

    @property
    @override
    def closed_forms(self) -> ClosedForms:
        return ClosedForms(rho=0.0, martin=self.martin, boundary=lambda lam, i: 0.0)

    @classmethod
    def from_spec(cls, spec: KernelSpec):
        spec.require_known("beta")
        return cls(beta=spec.get("beta", -1.0))


def oscillating_alpha(n: int) -> float:
    """
    ``α_n`` for ``n >= 2``: runs of -1 and -2 with lengths 1, 1, 2, 2, 3, 3, ...
    """

    if n < 2:
        raise ValueError(f"alpha is defined for n >= 2: {n}")

    position = n - 2
    for run in count():
        length = run // 2 + 1
        if position < length:
            return -1.0 if run % 2 == 0 else -2.0
        position -= length
    raise AssertionError("unreachable")


class OscillatingKernel(LazyKernel):
    """
    ``A_00 = 0``, ``A_01 = A_10 = -1``, ``A_{i,i+1} = 0`` and ``A_{i+1,1} = α_{i+1}``
    for ``i >= 1``. The powers ``A^n_11 = α_n`` never settle into a period.
    """

    @property
    @override
    def name(self) -> str:
        return KERNEL_OSCILLATING

    @property
    @override
    def doc(self) -> str:
        return "Returns to node 1 with weights alternating in growing runs of -1 and -2"

    @override
    def row_arcs(self, i: int, horizon: Optional[int] = None) -> List[Arc]:
        if i == 0:
            return [(0, 0.0), (1, -1.0)]
        if i == 1:
            return [(0, -1.0), (2, 0.0)]
        return [(i + 1, 0.0), (1, oscillating_alpha(i))]

    @staticmethod
    def power(i: int, j: int, n: int) -> float:
        if i != 1 or j != 1 or n < 2:
            raise ValueError("Only A^n_11 with n >= 2 is known in closed form")
        return oscillating_alpha(n)

    @property
    @override
    def closed_forms(self) -> ClosedForms:
        return ClosedForms(rho=0.0, power=self.power, power_entry=(1, 1, 2))


KernelFactory = Callable[[KernelSpec], LazyKernel]


def _without_parameters(cls) -> KernelFactory:
    def _factory(spec: KernelSpec) -> LazyKernel:
        spec.require_known()
        return cls()

    return _factory


@lru_cache
def kernel_factories() -> Dict[str, KernelFactory]:
    return {
        KERNEL_LADDER: _without_parameters(LadderKernel),
        KERNEL_LADDER_FLAT: _without_parameters(LadderFlatKernel),
        KERNEL_LADDER_LOOPS: _without_parameters(LadderLoopsKernel),
        KERNEL_TIGHT1: _without_parameters(Tight1Kernel),
        KERNEL_TIGHT2: _without_parameters(Tight2Kernel),
        KERNEL_BIRTH: BirthDeathKernel.from_spec,
        KERNEL_TRIANGULAR: TriangularKernel.from_spec,
        KERNEL_OSCILLATING: _without_parameters(OscillatingKernel),
    }


def catalog() -> List[LazyKernel]:
    """
    Every catalog kernel with its default parameters.
    """

    return [factory(KernelSpec(name)) for name, factory in kernel_factories().items()]


def load_kernel(spec: Union[str, KernelSpec]) -> LazyKernel:
    if isinstance(spec, str):
        spec = KernelSpec.from_text(spec)
    factory = kernel_factories().get(spec.name)
    if factory is None:
        names = ", ".join(kernel_factories())
        raise UnknownKernelError(
            f"Unknown kernel '{spec.name}', expected one of: {names}"
        )
    return factory(spec)
