"""arclab: arc complexes of marked surfaces, collapses, cores, certificates."""

__version__ = "0.1.0"

from .arcs import (  # noqa: F401
    Arc,
    SurfaceSpec,
    crown,
    disjoint,
    enumerate_arcs,
    integral_strip,
    mobius_crown,
    polygon,
)
from .build import arc_complex, disjointness_graph, inner_complex  # noqa: F401
from .simplicial import Complex, Graph  # noqa: F401
