"""Homotopy classes of maps under the diagonal, computed algebraically.

Exact integer linear algebra on finitely generated abelian groups
(:mod:`diagmaps.fgab`), Whitehead's quadratic functor (:mod:`diagmaps.gamma`),
sphere table data (:mod:`diagmaps.spheres`), the matrix monoids and their
bimodule (:mod:`diagmaps.monoids`), the orbit calculus (:mod:`diagmaps.orbits`)
and Gamma-sequences (:mod:`diagmaps.gammaseq`).
"""

from .errors import DomainError, InputError
from .fgab import FgAbGroup, cyclic, free, from_invariants, group_from_presentation

__all__ = ["DomainError", "FgAbGroup", "InputError", "cyclic", "free", "from_invariants", "group_from_presentation"]
__version__ = "0.1.0"
