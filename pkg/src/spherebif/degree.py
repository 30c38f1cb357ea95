"""Rotation-equivariant gradient degrees of +-identity on unit balls.

For a representation with isotypic multiplicities {0: k0, i: ki, ...} the
degree of -Id on the open unit ball has SO(2)-coordinate (-1)^k0 and
Z_i-coordinate (-1)^(k0+1) * ki for each rotation number i >= 1 in the
support; the degree of Id is the ring unit regardless of the representation.
Both depend on multiplicities only, so no geometry is materialised. The
degree of -Id is multiplicative over direct sums and always invertible.
"""

from __future__ import annotations

from .euler import EulerRingElement, unit
from .reps import RepDecomposition


def deg_neg_id(rep: RepDecomposition) -> EulerRingElement:
    k0 = rep.mult.get(0, 0)
    sign = (-1) ** k0
    return EulerRingElement(sign, {i: -sign * ki for i, ki in rep.mult.items() if i >= 1})


def deg_identity(rep: RepDecomposition) -> EulerRingElement:
    return unit()
