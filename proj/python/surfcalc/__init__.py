"""Calculus of moving surfaces: geometry, surface operators, transport-theorem
verification and interface balance laws. Thin wrapper over the C++ core."""

from surfcalc._core import (
    ConfigParseError,
    DegenerateChartError,
    SingularMatrixError,
    UnknownCatalogEntryError,
    ZeroJumpError,
    catalog,
    frame,
    integrate_surface,
    run_config,
    shock_speed_1d,
    simulate_interface_1d,
    surface_area,
    verify_generalized_reynolds,
    verify_reynolds,
    verify_surface_divergence,
    verify_surface_transport,
)

__all__ = [
    "ConfigParseError",
    "DegenerateChartError",
    "SingularMatrixError",
    "UnknownCatalogEntryError",
    "ZeroJumpError",
    "catalog",
    "frame",
    "integrate_surface",
    "run_config",
    "shock_speed_1d",
    "simulate_interface_1d",
    "surface_area",
    "verify_generalized_reynolds",
    "verify_reynolds",
    "verify_surface_divergence",
    "verify_surface_transport",
]

__version__ = "0.1.0"
