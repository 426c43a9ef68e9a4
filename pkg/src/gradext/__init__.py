"""Exact computations over standard graded Artinian algebras: minimal free
resolutions, Ext against the ring, Auslander transposes and TR conditions."""

__version__ = "0.1.0"

from .algebra import AlgebraSpec, GradedAlgebra, build, hilbert
from .free_modules import FreeModule, ModuleMap, from_strings
from .resolutions import Presentation, minimal_resolution, minimize, module_hilbert, syzygy
from .duality import ext, is_reflexive, tr_condition, tr_report, transpose

__all__ = [
    "AlgebraSpec", "GradedAlgebra", "build", "hilbert",
    "FreeModule", "ModuleMap", "from_strings",
    "Presentation", "minimal_resolution", "minimize", "module_hilbert", "syzygy",
    "ext", "is_reflexive", "tr_condition", "tr_report", "transpose",
]
