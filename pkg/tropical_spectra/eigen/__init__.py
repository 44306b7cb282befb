# -*- coding: utf-8 -*-

from tropical_spectra.eigen.basis import (
    EigenBasis,
    column_is_eigenvector,
    principal_eigenbasis,
    super_eigenvector,
)
from tropical_spectra.eigen.check import (
    EigenCheckReport,
    check_eigen,
    check_super_eigen,
)
from tropical_spectra.eigen.decompose import Decomposition, decompose, is_extremal
from tropical_spectra.eigen.export import export_eigenbasis
from tropical_spectra.eigen.principles import (
    MinimumPrincipleVerdict,
    ProportionalityVerdict,
    minimum_principle_check,
    restriction_proportionality_check,
)

__all__ = [
    "Decomposition",
    "EigenBasis",
    "EigenCheckReport",
    "MinimumPrincipleVerdict",
    "ProportionalityVerdict",
    "check_eigen",
    "check_super_eigen",
    "column_is_eigenvector",
    "decompose",
    "export_eigenbasis",
    "is_extremal",
    "minimum_principle_check",
    "principal_eigenbasis",
    "restriction_proportionality_check",
    "super_eigenvector",
]
