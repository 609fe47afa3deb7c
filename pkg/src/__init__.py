"""gkm-faces: combinatorics and equivariant cohomology of abstract GKM graphs."""

__version__ = "0.1.0"
