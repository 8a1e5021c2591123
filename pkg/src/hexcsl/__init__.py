"""Exact coincidence site lattices of the hexagonal lattice Z[xi], its shifts and the honeycomb packing."""

from .coincidence import (
    IDENTITY,
    CoincidenceIsometry,
    Csl,
    count_csls,
    count_rotations,
    csl_of,
    dirichlet_coefficients,
    enumerate_csls,
    isometries,
    numerators,
)
from .eisenstein import (
    ONE,
    UNITS,
    XI,
    ZERO,
    EisensteinInt,
    EisensteinRational,
    Unit,
    factor,
    gcd,
    split_prime,
    xgcd,
)
from .multilattice import Multilattice, csml, honeycomb, honeycomb_index, multilattice_index
from .shifted import (
    AffinelyRelated,
    BothIndependent,
    IrrationalA,
    IrrationalB,
    RationalShift,
    is_member,
    oc_description,
    shifted_csl,
)

__version__ = "0.1.0"
