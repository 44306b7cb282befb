# -*- coding: utf-8 -*-

from tropical_spectra.kernels.base import ClosedForms, LazyKernel
from tropical_spectra.kernels.catalog import catalog, load_kernel
from tropical_spectra.kernels.martin import (
    BoundaryColumn,
    BoundaryProbe,
    MartinKernel,
    boundary_column,
    boundary_column_probe,
    martin_kernel,
    martin_matrix,
)
from tropical_spectra.kernels.spec import KernelSpec
from tropical_spectra.kernels.window import (
    StarLimit,
    TightnessReport,
    Window,
    check_window_eigen,
    property_T_probe,
    truncate,
    window_star_limit,
)

__all__ = [
    "BoundaryColumn",
    "BoundaryProbe",
    "ClosedForms",
    "KernelSpec",
    "LazyKernel",
    "MartinKernel",
    "StarLimit",
    "TightnessReport",
    "Window",
    "boundary_column",
    "boundary_column_probe",
    "catalog",
    "check_window_eigen",
    "load_kernel",
    "martin_kernel",
    "martin_matrix",
    "property_T_probe",
    "truncate",
    "window_star_limit",
]
