"""Point counting and dimension growth experiments for curves in P^1 x P^1
and affine hypersurfaces."""

__version__ = "0.1.0"
