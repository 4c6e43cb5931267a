"""Quantum double models D(G) at desk scale.

Two independent pillars: the algebraic anyon data of D(G) (fusion, braiding,
modular matrices) and a finite-torus lattice realization (star/plaquette and
ribbon operators), cross-validated against each other.
"""

from .groups import (
    FiniteGroup,
    ConjugacyClass,
    Subgroup,
    UnitaryIrrep,
    build_group,
    conjugacy_classes,
    centralizer,
    factorize,
    irreps,
)

__version__ = "0.1.0"
