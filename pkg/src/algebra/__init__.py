"""Equivariant cohomology of GKM graphs: classes, Thom classes, eta and face rings."""

from .eta import EtaForm, compute_eta
from .gkm_classes import (
    GKMClass,
    GradedDims,
    constant_class,
    gkm_cohomology_basis,
    gkm_cohomology_dims,
)
from .hilbert import HilbertSeries, face_ring_hilbert
from .restriction import RestrictionReport, restriction_surjectivity
from .theorem_b import TheoremBReport, default_max_degree, verify_theorem_b
from .thom import ThomClass, ThomRelationsReport, thom_class, verify_thom_relations

__all__ = [
    "EtaForm",
    "GKMClass",
    "GradedDims",
    "HilbertSeries",
    "RestrictionReport",
    "TheoremBReport",
    "ThomClass",
    "ThomRelationsReport",
    "compute_eta",
    "constant_class",
    "default_max_degree",
    "face_ring_hilbert",
    "gkm_cohomology_basis",
    "gkm_cohomology_dims",
    "restriction_surjectivity",
    "thom_class",
    "verify_thom_relations",
    "verify_theorem_b",
]
