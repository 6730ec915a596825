"""Relative arc density of proximity catch digraphs as a test of spatial segregation and association."""

__version__ = "0.1.0"

from .geometry import ProximityParams, Triangle, region_index, vertex_region  # noqa: E402
from .pcd import Digraph, build_digraph, density, relative_density  # noqa: E402
from .sampling import Alternative  # noqa: E402
from .moments import mu_null, nu_null, omega_var_h  # noqa: E402
from .multitriangle import DelaunayMesh, density_multi, triangulate  # noqa: E402
from .efficacy import pae_assoc, pae_seg, hlae, power_assoc, power_seg  # noqa: E402
from .inference import McConfig, McResult, TestReport, asymptotic_test, mc_critical_value, mc_power  # noqa: E402

__all__ = [
    "ProximityParams", "Triangle", "region_index", "vertex_region",
    "Digraph", "build_digraph", "density", "relative_density",
    "Alternative", "mu_null", "nu_null", "omega_var_h",
    "DelaunayMesh", "density_multi", "triangulate",
    "pae_seg", "pae_assoc", "hlae", "power_seg", "power_assoc",
    "McConfig", "McResult", "TestReport", "asymptotic_test", "mc_critical_value", "mc_power",
]
