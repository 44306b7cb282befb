# -*- coding: utf-8 -*-

from tropical_spectra.asymptotics.coupling import CouplingReport, detect_coupling
from tropical_spectra.asymptotics.powers import PowerTrace, power_stack, power_trace
from tropical_spectra.asymptotics.representation import (
    CyclicRepresentation,
    RepresentationCheck,
    verify_cyclic_representation,
)
from tropical_spectra.asymptotics.transience import (
    SubcriticalBound,
    TransienceReport,
    subcritical_bound_check,
    transience_check,
)
from tropical_spectra.asymptotics.turnpike import (
    OptimalPath,
    TurnpikeProfile,
    optimal_path,
    turnpike_profile,
)

__all__ = [
    "CouplingReport",
    "CyclicRepresentation",
    "OptimalPath",
    "PowerTrace",
    "RepresentationCheck",
    "SubcriticalBound",
    "TransienceReport",
    "TurnpikeProfile",
    "detect_coupling",
    "optimal_path",
    "power_stack",
    "power_trace",
    "subcritical_bound_check",
    "transience_check",
    "turnpike_profile",
    "verify_cyclic_representation",
]
