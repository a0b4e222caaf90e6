"""Weight orbits, finite-dimensional simple modules and windowed infinite-dimensional modules."""

from downup_engine.modules.finite import (
    FiniteModulePresentation,
    annihilator_generators,
    build_Fc,
    build_Fc_bar,
    build_Fhw,
    verify_annihilates,
)
from downup_engine.modules.weights import Weight, WeightOrbit, orbit, simplicity_certificate
from downup_engine.modules.window import (
    WindowModule,
    conformal_weight_window,
    exotic_module_conformal,
    exotic_module_r1,
    universal_weight_window,
)

__all__ = [
    "FiniteModulePresentation",
    "Weight",
    "WeightOrbit",
    "WindowModule",
    "annihilator_generators",
    "build_Fc",
    "build_Fc_bar",
    "build_Fhw",
    "conformal_weight_window",
    "exotic_module_conformal",
    "exotic_module_r1",
    "orbit",
    "simplicity_certificate",
    "universal_weight_window",
    "verify_annihilates",
]
