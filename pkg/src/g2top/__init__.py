"""Exact computational topology: Grassmannians, Stiefel manifolds, G2 geometry.

The package computes integral and mod-p (co)homology of real Grassmannians,
oriented Grassmannians and Stiefel manifolds from explicit cell structures,
replays fibration spectral sequences with exact abelian-group arithmetic,
verifies graded ring presentations for the cohomology of the spaces involved,
and checks the octonionic identities behind associative calibration geometry.
"""

from .abelian import (
    FGAbelianGroup,
    GroupHom,
    IntegerMatrix,
    smith_normal_form,
    homology_at,
    uct_cohomology,
)

__version__ = "0.1.0"

__all__ = [
    "FGAbelianGroup",
    "GroupHom",
    "IntegerMatrix",
    "smith_normal_form",
    "homology_at",
    "uct_cohomology",
    "__version__",
]
