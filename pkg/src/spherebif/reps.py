"""Exact isotypic combinatorics of SO(2)-representations on harmonic eigenspaces.

The degree-m eigenspace H(N, m) of the Laplace-Beltrami operator on S^{N-1}
consists of harmonic homogeneous polynomials of degree m. Rotations in the
(x1, x2)-plane split it into planar irreducibles labelled by a rotation
number j >= 0; the rotation number 0 piece is a sum of trivial lines and the
rotation number j >= 1 piece is a sum of 2-dimensional planes. A basis of
H(N, m) is indexed by weakly decreasing integer sequences
m = m_0 >= m_1 >= ... >= m_{N-2} >= 0, the last entry being the rotation
number, so the multiplicity of rotation number j is the sequence count

    k(m, j) = C(m + (N-3) - j, N-3).

The cumulative space V(m) = H(N,0) + ... + H(N,m) then carries rotation
number l with multiplicity r(m, l) = sum_{k=l}^{m} k(k, l).

A sequence ending in 0 contributes exactly one trivial line (its sine partner
vanishes identically); for j >= 1 it contributes one full plane. That
convention makes the enumeration oracle agree with the binomial counts and
makes (-1)^{k(m,0)} equal (-1)^{dim H(N,m)}.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import DomainError, NegativeMultiplicity


class RepDecomposition:
    """Finitely supported multiset {rotation number -> multiplicity}.

    Canonical form: no zero entries. Multiplicity at 0 counts trivial lines
    (dimension 1 each); multiplicity at m >= 1 counts planes (dimension 2).
    """

    __slots__ = ("mult",)

    def __init__(self, mult: dict[int, int] | None = None):
        clean: dict[int, int] = {}
        for j, c in (mult or {}).items():
            if c < 0:
                raise NegativeMultiplicity(f"multiplicity of rotation number {j} is {c} < 0")
            if j < 0:
                raise DomainError(f"rotation number must be >= 0, got {j}")
            if c:
                clean[int(j)] = int(c)
        self.mult = clean

    @property
    def total_dim(self) -> int:
        return self.mult.get(0, 0) + 2 * sum(c for j, c in self.mult.items() if j >= 1)

    def items(self):
        return sorted(self.mult.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, RepDecomposition) and self.mult == other.mult

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __bool__(self) -> bool:
        return bool(self.mult)

    def __repr__(self) -> str:
        inner = ", ".join(f"{j}: {c}" for j, c in self.items())
        return f"RepDecomposition({{{inner}}})"


EMPTY_REP = RepDecomposition()


def harmonic_multiplicity(N: int, m: int, j: int) -> int:
    """k(m, j) = C(m + N-3 - j, N-3), the rotation-number-j multiplicity in H(N, m)."""
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    if j < 0 or j > m:
        raise DomainError(f"rotation number j must satisfy 0 <= j <= m, got j={j}, m={m}")
    return comb(m + N - 3 - j, N - 3)


@lru_cache(maxsize=None)
def harmonic_decomp(N: int, m: int) -> RepDecomposition:
    """Isotypic decomposition of the degree-m harmonic eigenspace H(N, m)."""
    return RepDecomposition({j: harmonic_multiplicity(N, m, j) for j in range(m + 1)})


@lru_cache(maxsize=None)
def cumulative_decomp(N: int, m: int) -> RepDecomposition:
    """Isotypic decomposition of V(m) = H(N,0) + ... + H(N,m).

    r(m, l) = sum_{k=l}^{m} k(k, l); zero for l > m.
    """
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    mult = {
        l: sum(harmonic_multiplicity(N, k, l) for k in range(l, m + 1))
        for l in range(m + 1)
    }
    return RepDecomposition(mult)


def rep_sum(x: RepDecomposition, y: RepDecomposition) -> RepDecomposition:
    """Direct sum: pointwise addition of multiplicities."""
    mult = dict(x.mult)
    for j, c in y.mult.items():
        mult[j] = mult.get(j, 0) + c
    return RepDecomposition(mult)


def rep_sub(x: RepDecomposition, y: RepDecomposition) -> RepDecomposition:
    """Orthogonal complement x (-) y; requires y pointwise <= x."""
    mult = dict(x.mult)
    for j, c in y.mult.items():
        left = mult.get(j, 0) - c
        if left < 0:
            raise NegativeMultiplicity(
                f"cannot remove {c} copies of rotation number {j}: only {mult.get(j, 0)} present"
            )
        mult[j] = left
    return RepDecomposition(mult)


def rep_scale(x: RepDecomposition, n: int) -> RepDecomposition:
    """n disjoint copies of x (n >= 0)."""
    if n < 0:
        raise NegativeMultiplicity(f"copy count must be >= 0, got {n}")
    return RepDecomposition({j: n * c for j, c in x.mult.items()})


def oracle_enumerate(N: int, m: int) -> RepDecomposition:
    """Brute-force decomposition of H(N, m) by listing basis-index sequences.

    Walks every weakly decreasing sequence m = m_0 >= m_1 >= ... >= m_{N-2} >= 0
    and tallies one irreducible of rotation number m_{N-2} per sequence.
    Independent of the binomial route; intended for desk-scale cross-checks.
    """
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    mult: dict[int, int] = {}
    stack = [(m, N - 2)]
    while stack:
        value, remaining = stack.pop()
        if remaining == 0:
            mult[value] = mult.get(value, 0) + 1
        else:
            stack.extend((v, remaining - 1) for v in range(value + 1))
    return RepDecomposition(mult)
