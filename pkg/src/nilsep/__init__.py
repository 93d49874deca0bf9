"""nilsep: constructive separability toolkit for torsion-free finitely
generated nilpotent groups.

The package provides exact integer lattice utilities, Mal'cev coordinate
arithmetic for built-in and user-presented nilpotent groups, canonical
subgroup machinery (membership, isolators, central series intersections),
word metrics on Cayley graphs, separating finite quotients with checkable
certificates, a brute-force depth oracle, and Farb/Sub profile generators.
"""

__version__ = "0.1.0"

from .intarith import BezoutResult, IntLattice, eff_bezout, generator_word, hnf_saturate, min_nondivisor
from .groups import Element, GroupCtx, build_group
from .subgroups import SubgroupDescriptor, induce

__all__ = [
    "BezoutResult",
    "IntLattice",
    "Element",
    "GroupCtx",
    "SubgroupDescriptor",
    "build_group",
    "eff_bezout",
    "generator_word",
    "hnf_saturate",
    "induce",
    "min_nondivisor",
    "__version__",
]
