# -*- coding: utf-8 -*-

from tropical_spectra.core.matrix import TropicalMatrix


def two_loops() -> TropicalMatrix:
    """
    Loops of weight 0 at nodes 0 and 2 joined through node 1 by arcs of -2.
    """

    return TropicalMatrix.from_rows(
        [
            [0, -2, None],
            [-2, None, 0],
            [None, -2, 0],
        ]
    )


def three_cycle(weight: float = 0.0) -> TropicalMatrix:
    return TropicalMatrix(3, {(0, 1): weight, (1, 2): weight, (2, 0): weight})


def chain(n: int = 3) -> TropicalMatrix:
    return TropicalMatrix(n, {(i, i + 1): 0.0 for i in range(n - 1)})
