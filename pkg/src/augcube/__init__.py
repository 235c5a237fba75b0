"""Augmented cubes AQ_n: neighbourhood structure and (h-extra) connectivity."""

from augcube.core import (
    AugCube,
    EdgeKind,
    Graph,
    Half,
    build,
    classify_edge,
    comp_neighbor,
    crossed_neighbors,
    half,
    hyper_neighbor,
    neighbors,
)
from augcube.errors import (
    ArgumentError,
    AugCubeError,
    CapacityError,
    ParseError,
    ReportError,
    UnsupportedDimension,
)

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "AugCube",
    "AugCubeError",
    "CapacityError",
    "EdgeKind",
    "Graph",
    "Half",
    "ParseError",
    "ReportError",
    "UnsupportedDimension",
    "build",
    "classify_edge",
    "comp_neighbor",
    "crossed_neighbors",
    "half",
    "hyper_neighbor",
    "neighbors",
]
