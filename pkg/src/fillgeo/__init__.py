"""Tools for extremal filling geodesics on closed hyperbolic surfaces.

The package has four working parts:

* ``polygeom``: lengths, angles and areas of regular hyperbolic polygons,
  and the extremal length of a filling geodesic as a function of genus.
* ``isoperim``: numerical verification of a sharp isoperimetric inequality
  for unions of regular polygons, with equality classification.
* ``surfmap``: combinatorial maps (rotation systems) built from polygon
  edge gluings, surface invariants, and the canonical minimal gluing
  for each genus.
* ``reducer``: reduction of a filling multi-curve map to a triangle-free
  filling graph by repeatedly adding essential cutting curves.
"""

from .tolerances import Tolerance, DEFAULT_TOL
from .errors import DomainError, ValidationError, InternalInvariantError

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "DomainError",
    "ValidationError",
    "InternalInvariantError",
]

__version__ = "0.1.0"
