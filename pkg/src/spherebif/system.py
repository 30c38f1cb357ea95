"""System signatures: the numeric trace of an elliptic system on S^{N-1}.

A system of p equations a_i * Lap u_i = grad_{u_i} F(u, lambda) is driven,
for everything this package computes, by four numbers derived from the sign
coefficients a_i in {-1,+1} and the degeneracy coefficients b_i in {0,1}:

    n_minus  = #{i : a_i = -1, b_i = 1}      n_plus  = #{i : a_i = +1, b_i = 1}
    n_minus0 = #{i : a_i = -1, b_i = 0}      n_plus0 = #{i : a_i = +1, b_i = 0}

together with the sphere dimension N and the number of critical orbits
(1 or 2). At least one nondegenerate direction is required: n_minus + n_plus > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvariantViolation, MalformedInput


@dataclass(frozen=True)
class DerivedCounts:
    n_minus: int
    n_plus: int
    n_minus0: int
    n_plus0: int

    @property
    def p(self) -> int:
        return self.n_minus + self.n_plus + self.n_minus0 + self.n_plus0


@dataclass(frozen=True)
class SystemSpec:
    N: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    orbits: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if not isinstance(self.N, int) or isinstance(self.N, bool) or self.N < 3:
            raise InvariantViolation(f"sphere dimension N must be an integer >= 3, got {self.N!r}")
        if self.orbits not in (1, 2):
            raise InvariantViolation(f"orbits must be 1 or 2, got {self.orbits!r}")
        if len(self.a) != len(self.b):
            raise InvariantViolation(
                f"coefficient vectors differ in length: len(a)={len(self.a)}, len(b)={len(self.b)}"
            )
        for name, vec, allowed in (("a", self.a, (-1, 1)), ("b", self.b, (0, 1))):
            for i, v in enumerate(vec):
                if isinstance(v, bool) or v not in allowed:
                    raise InvariantViolation(f"{name}[{i}] must be in {allowed}, got {v!r}")
        c = self.counts
        if c.n_minus + c.n_plus == 0:
            raise InvariantViolation("n_- + n_+ must be positive: no nondegenerate direction (all b_i = 0)")

    @property
    def p(self) -> int:
        return len(self.a)

    @property
    def counts(self) -> DerivedCounts:
        return derive_counts(self)

    def to_obj(self) -> dict:
        return {"N": self.N, "a": list(self.a), "b": list(self.b), "orbits": self.orbits}


def derive_counts(spec: SystemSpec) -> DerivedCounts:
    """Partition the p coordinate indices by (sign of a_i, b_i)."""
    n_minus = n_plus = n_minus0 = n_plus0 = 0
    for ai, bi in zip(spec.a, spec.b):
        if bi == 1:
            if ai == -1:
                n_minus += 1
            else:
                n_plus += 1
        else:
            if ai == -1:
                n_minus0 += 1
            else:
                n_plus0 += 1
    return DerivedCounts(n_minus, n_plus, n_minus0, n_plus0)


def parse_spec(document) -> SystemSpec:
    """Validate a parsed input record {"N":..., "a":[...], "b":[...], "orbits":...}.

    Structural problems raise MalformedInput; value-level problems raise
    InvariantViolation (from the SystemSpec constructor).
    """
    if not isinstance(document, Mapping):
        raise MalformedInput(f"system record must be a JSON object, got {type(document).__name__}")
    required = {"N", "a", "b", "orbits"}
    missing = sorted(required - set(document))
    if missing:
        raise MalformedInput(f"system record missing fields: {', '.join(missing)}")
    unknown = sorted(set(document) - required)
    if unknown:
        raise MalformedInput(f"system record has unknown fields: {', '.join(unknown)}")
    n = document["N"]
    a = document["a"]
    b = document["b"]
    orbits = document["orbits"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise MalformedInput(f"N must be an integer, got {n!r}")
    if not isinstance(orbits, int) or isinstance(orbits, bool):
        raise MalformedInput(f"orbits must be an integer, got {orbits!r}")
    for name, vec in (("a", a), ("b", b)):
        if not isinstance(vec, (list, tuple)):
            raise MalformedInput(f"{name} must be a list, got {type(vec).__name__}")
        for v in vec:
            if not isinstance(v, int) or isinstance(v, bool):
                raise MalformedInput(f"{name} entries must be integers, got {v!r}")
    if len(a) != len(b):
        raise MalformedInput(f"a and b must have equal length, got {len(a)} and {len(b)}")
    return SystemSpec(N=n, a=tuple(a), b=tuple(b), orbits=orbits)
