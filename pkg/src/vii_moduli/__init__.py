"""Exact moduli spaces of rank-2 bundles on class VII surfaces with b2 = 1."""
from .picard import F, K, O, LineBundle, Pic0Element, dual, named_bundle, square_roots, tensor
from .surface import EffectiveDivisor, SurfaceKind, SurfaceModel, degree, effective_divisor, mk_surface, rho
from .moduli import ModuliReport, SimpleModuliReport, build_polystable_moduli, build_simple_moduli

__version__ = "0.1.0"

__all__ = [
    "F",
    "K",
    "O",
    "LineBundle",
    "Pic0Element",
    "dual",
    "named_bundle",
    "square_roots",
    "tensor",
    "EffectiveDivisor",
    "SurfaceKind",
    "SurfaceModel",
    "degree",
    "effective_divisor",
    "mk_surface",
    "rho",
    "ModuliReport",
    "SimpleModuliReport",
    "build_polystable_moduli",
    "build_simple_moduli",
]
