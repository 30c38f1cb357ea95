"""Arithmetic in the Euler ring of SO(2).

Elements are finitely supported integer tuples indexed by the closed
subgroups SO(2), Z_1, Z_2, ...: one coordinate c0 at SO(2) and a sparse map
l -> cz[l] over the finite subgroups. Addition is coordinatewise;
multiplication is

    (x * y).c0    = x.c0 * y.c0
    (x * y).cz[l] = x.c0 * y.cz[l] + x.cz[l] * y.c0

so an element is invertible iff c0 = +-1, with inverse (c0, -cz).
"""

from __future__ import annotations

from .errors import NotInvertible


class EulerRingElement:
    """Canonical sparse element: cz holds no zero coordinates."""

    __slots__ = ("c0", "cz")

    def __init__(self, c0: int = 0, cz: dict[int, int] | None = None):
        self.c0 = int(c0)
        self.cz = {int(l): int(v) for l, v in (cz or {}).items() if v}

    def coord(self, l: int) -> int:
        """Coordinate at Z_l (l >= 1); l = 0 reads the SO(2)-coordinate."""
        return self.c0 if l == 0 else self.cz.get(l, 0)

    def items(self):
        return sorted(self.cz.items())

    def to_obj(self) -> dict:
        return {"so2": self.c0, "z": {str(l): v for l, v in self.items()}}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EulerRingElement)
            and self.c0 == other.c0
            and self.cz == other.cz
        )

    def __hash__(self) -> int:
        return hash((self.c0, tuple(self.items())))

    def __add__(self, other: "EulerRingElement") -> "EulerRingElement":
        return add(self, other)

    def __sub__(self, other: "EulerRingElement") -> "EulerRingElement":
        return add(self, neg(other))

    def __neg__(self) -> "EulerRingElement":
        return neg(self)

    def __mul__(self, other: "EulerRingElement") -> "EulerRingElement":
        return star(self, other)

    def __pow__(self, n: int) -> "EulerRingElement":
        return pow(self, n)

    def __bool__(self) -> bool:
        return bool(self.c0) or bool(self.cz)

    def __repr__(self) -> str:
        inner = ", ".join(f"{l}: {v}" for l, v in self.items())
        return f"EulerRingElement({self.c0}, {{{inner}}})"


def unit() -> EulerRingElement:
    return EulerRingElement(1)


def zero() -> EulerRingElement:
    return EulerRingElement(0)


def add(x: EulerRingElement, y: EulerRingElement) -> EulerRingElement:
    cz = dict(x.cz)
    for l, v in y.cz.items():
        cz[l] = cz.get(l, 0) + v
    return EulerRingElement(x.c0 + y.c0, cz)


def neg(x: EulerRingElement) -> EulerRingElement:
    return EulerRingElement(-x.c0, {l: -v for l, v in x.cz.items()})


def smul(k: int, x: EulerRingElement) -> EulerRingElement:
    """Integer scalar multiple in the underlying free abelian group."""
    return EulerRingElement(k * x.c0, {l: k * v for l, v in x.cz.items()})


def star(x: EulerRingElement, y: EulerRingElement) -> EulerRingElement:
    cz: dict[int, int] = {}
    for l in set(x.cz) | set(y.cz):
        cz[l] = x.c0 * y.cz.get(l, 0) + x.cz.get(l, 0) * y.c0
    return EulerRingElement(x.c0 * y.c0, cz)


def is_invertible(x: EulerRingElement) -> bool:
    return x.c0 in (1, -1)


def inverse(x: EulerRingElement) -> EulerRingElement:
    if not is_invertible(x):
        raise NotInvertible(f"element with SO(2)-coordinate {x.c0} has no inverse")
    return EulerRingElement(x.c0, {l: -v for l, v in x.cz.items()})


def pow(x: EulerRingElement, n: int) -> EulerRingElement:
    """n-th star power; negative n requires invertibility.

    Closed form for n >= 1: (c0, cz)^n = (c0^n, n * c0^(n-1) * cz).
    """
    if n < 0:
        x = inverse(x)
        n = -n
    if n == 0:
        return unit()
    scale = n * x.c0 ** (n - 1)
    return EulerRingElement(x.c0 ** n, {l: scale * v for l, v in x.cz.items()})
