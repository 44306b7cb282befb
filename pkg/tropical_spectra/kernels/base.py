# -*- coding: utf-8 -*-

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

Arc = Tuple[int, float]


@dataclass(frozen=True)
class ClosedForms:
    """
    Values of the infinite kernel known in closed form.

    Every field is optional. ``martin`` and ``boundary`` use basepoint 0.
    ``power`` is known only for the entry ``(i, j)`` of ``power_entry = (i, j, n_min)``
    and lengths ``n >= n_min``. ``closure_margin`` counts the frontier nodes of a
    window where ``plus`` and ``star`` stop holding; ``None`` means the window
    closure only approaches them and is compared on the inner half.
    """

    rho: Optional[float] = None
    plus: Optional[Callable[[int, int], float]] = None
    star: Optional[Callable[[int, int], float]] = None
    eigenvector: Optional[Callable[[float, int], float]] = None
    martin: Optional[Callable[[float, int, int], float]] = None
    boundary: Optional[Callable[[float, int], float]] = None
    power: Optional[Callable[[int, int, int], float]] = None
    power_entry: Optional[Tuple[int, int, int]] = None
    closure_margin: Optional[int] = None

    def available(self) -> List[str]:
        return [
            k
            for k, v in self.__dict__.items()
            if v is not None and k not in ("power_entry", "closure_margin")
        ]


class LazyKernel(ABC):
    """
    A kernel on the node set ℕ described one row at a time.

    Right locally finite kernels list every arc of a row. The others list
    arcs up to a ``horizon`` and report the rest as an escaping tail.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        raise NotImplementedError

    @property
    @abstractmethod
    def doc(self) -> str:
        raise NotImplementedError

    @property
    def parameters(self) -> Dict[str, float]:
        return dict()

    @property
    def right_locally_finite(self) -> bool:
        return True

    @property
    def closed_forms(self) -> ClosedForms:
        return ClosedForms()

    @abstractmethod
    def row_arcs(self, i: int, horizon: Optional[int] = None) -> List[Arc]:
        raise NotImplementedError

    def window_row(self, i: int, n: int) -> Tuple[List[Arc], int]:
        """
        Arcs of row ``i`` inside ``{0..n}`` and the number of dropped arcs.

        An escaping tail of a non locally finite row counts as one dropped arc.
        """

        arcs = self.row_arcs(i, n)
        kept = [(j, w) for j, w in arcs if j <= n]
        dropped = len(arcs) - len(kept)
        if not self.right_locally_finite:
            dropped += 1
        return kept, dropped

    def spec_text(self) -> str:
        params = " ".join(f"{k}={v!r}" for k, v in self.parameters.items())
        return f"{self.name} {params}" if params else self.name

    def __repr__(self):
        return f"{self.__class__.__name__}<{self.spec_text()}>"
