"""Microstructure descriptors, texture, image quality and transport metrics
for voxel volumes.

The compiled core does the work; this package re-exports it. Volumes convert
to and from numpy as C-contiguous uint8 arrays with shape (nz, ny, nx).
"""

from ._mstruct import (  # noqa: F401
    Axis,
    BoundaryMode,
    ClusterVariant,
    ComponentLabels,
    Connectivity,
    Direction,
    FeatureStats,
    Glcm,
    GlcmAngle,
    GlcmParams,
    MstructError,
    PorosityCdf,
    Preconditioner,
    QualityReport,
    RadialProfile,
    SolverParams,
    SsimParams,
    Verdict,
    VoxelVolume,
    __version__,
    descriptors,
    gray_slice,
    load_volume,
    losses,
    physics,
    quality,
    report,
    save_volume,
    slice,
    synth,
    texture,
)

__all__ = [
    "Axis",
    "BoundaryMode",
    "ClusterVariant",
    "ComponentLabels",
    "Connectivity",
    "Direction",
    "FeatureStats",
    "Glcm",
    "GlcmAngle",
    "GlcmParams",
    "MstructError",
    "PorosityCdf",
    "Preconditioner",
    "QualityReport",
    "RadialProfile",
    "SolverParams",
    "SsimParams",
    "Verdict",
    "VoxelVolume",
    "__version__",
    "descriptors",
    "gray_slice",
    "load_volume",
    "losses",
    "physics",
    "quality",
    "report",
    "save_volume",
    "slice",
    "synth",
    "texture",
]
