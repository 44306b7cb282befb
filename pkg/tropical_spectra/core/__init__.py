# -*- coding: utf-8 -*-

from tropical_spectra.core.graph import SccPartition, is_irreducible, scc
from tropical_spectra.core.matrix import TropicalMatrix, mat_mul, mat_vec, trace
from tropical_spectra.core.scalar import ONE, TOP, ZERO, oplus, otimes

__all__ = [
    "ONE",
    "TOP",
    "ZERO",
    "SccPartition",
    "TropicalMatrix",
    "is_irreducible",
    "mat_mul",
    "mat_vec",
    "oplus",
    "otimes",
    "scc",
    "trace",
]
