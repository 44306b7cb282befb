# -*- coding: utf-8 -*-

from tropical_spectra.spectral.closure import ClosureResult, kleene_star, scaled_closure
from tropical_spectra.spectral.cyclicity import cyclicity
from tropical_spectra.spectral.mean import max_cycle_mean
from tropical_spectra.spectral.residue import ResidueResult, nu_residue
from tropical_spectra.spectral.structure import (
    CriticalStructure,
    critical_graph,
    critical_structure,
    normalize,
    recurrence_classes,
    recurrent_nodes,
)
from tropical_spectra.spectral.summary import SpectralSummary, spectral_summary

__all__ = [
    "ClosureResult",
    "CriticalStructure",
    "ResidueResult",
    "SpectralSummary",
    "critical_graph",
    "critical_structure",
    "cyclicity",
    "kleene_star",
    "max_cycle_mean",
    "normalize",
    "nu_residue",
    "recurrence_classes",
    "recurrent_nodes",
    "scaled_closure",
    "spectral_summary",
]
