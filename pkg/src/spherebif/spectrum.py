"""Laplace-Beltrami eigenvalue ladder and the candidate bifurcation level set.

The sphere S^{N-1} has eigenvalues beta_m = m(m + N - 2) with eigenspace
H(N, m). The linearisation of the system at the trivial orbit has spectrum
contained in four rational families indexed by m:

    (beta_m - lambda)/(1 + beta_m)   with block multiplicity n_minus
    (-beta_m - lambda)/(1 + beta_m)  with block multiplicity n_plus
    beta_m/(1 + beta_m)              with block multiplicity n_minus0
    -beta_m/(1 + beta_m)             with block multiplicity n_plus0

Each block carries dim H(N, m) dimensions. Bifurcation can only happen where
the kernel outgrows the orbit, which pins the candidate set Lambda to
{beta_m}, {-beta_m} or their union depending on which of n_minus/n_plus
vanish; 0 = beta_0 always belongs. All arithmetic is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, MalformedInput
from .reps import harmonic_decomp
from .system import SystemSpec

FAMILIES = ("minus", "plus", "minus0", "plus0")


def beta(N: int, m: int) -> int:
    """m-th Laplace-Beltrami eigenvalue on S^{N-1}: m(m + N - 2)."""
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    return m * (m + N - 2)


@dataclass(frozen=True)
class Level:
    """A candidate bifurcation level: +beta_m, -beta_m (m >= 1), or 0."""

    kind: str  # "+", "-", or "0"
    m: int
    value: int

    def __post_init__(self):
        if self.kind not in ("+", "-", "0"):
            raise DomainError(f"level kind must be '+', '-' or '0', got {self.kind!r}")
        if self.kind == "0":
            if self.m != 0 or self.value != 0:
                raise DomainError("zero level must have m = 0 and value 0")
        elif self.m < 1:
            raise DomainError(f"signed level needs harmonic index m >= 1, got {self.m}")

    @property
    def label(self) -> str:
        return "0" if self.kind == "0" else f"{self.kind}{self.m}"


def zero_level() -> Level:
    return Level("0", 0, 0)


def plus_level(N: int, m: int) -> Level:
    return Level("+", m, beta(N, m))


def minus_level(N: int, m: int) -> Level:
    return Level("-", m, -beta(N, m))


def parse_level(N: int, text: str) -> Level:
    """Parse a level label "+m", "-m" or "0"."""
    text = text.strip()
    if text == "0":
        return zero_level()
    if len(text) >= 2 and text[0] in "+-" and text[1:].isdigit():
        m = int(text[1:])
        if m >= 1:
            return plus_level(N, m) if text[0] == "+" else minus_level(N, m)
    raise MalformedInput(f"level must look like '+m', '-m' (m >= 1) or '0', got {text!r}")


def lambda_set(spec: SystemSpec, m_max: int) -> list[Level]:
    """All candidate levels with |value| <= beta_{m_max}, sorted ascending.

    {+beta_m} when n_minus > 0, {-beta_m} when n_plus > 0, 0 always (it is
    beta_0 for either family and at least one nondegenerate direction exists).
    """
    if m_max < 0:
        raise DomainError(f"m_max must be >= 0, got {m_max}")
    c = spec.counts
    levels = [zero_level()]
    for m in range(1, m_max + 1):
        if c.n_minus > 0:
            levels.append(plus_level(spec.N, m))
        if c.n_plus > 0:
            levels.append(minus_level(spec.N, m))
    return sorted(levels, key=lambda lv: lv.value)


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: Fraction
    block_mult: int
    total_dim: int
    origins: tuple[tuple[str, int], ...]  # (family, m) pairs, merge-preserved

    def to_obj(self) -> dict:
        return {
            "eigenvalue": str(self.eigenvalue),
            "block_mult": self.block_mult,
            "total_dim": self.total_dim,
            "origins": [[fam, m] for fam, m in self.origins],
        }


def _family_values(N: int, m: int, lam: Fraction) -> dict[str, Fraction]:
    bm = beta(N, m)
    den = 1 + bm
    return {
        "minus": Fraction(bm - lam, den),
        "plus": Fraction(-bm - lam, den),
        "minus0": Fraction(bm, den),
        "plus0": Fraction(-bm, den),
    }


def spectrum_at(spec: SystemSpec, lam, m_max: int) -> list[SpectrumEntry]:
    """Exact spectrum table of the linearisation at parameter lambda.

    Emits the four families for each m <= m_max, dropping zero-multiplicity
    blocks and merging equal rational eigenvalues (multiplicities add, origin
    tags accumulate). Sorted by eigenvalue.
    """
    lam = Fraction(lam)
    c = spec.counts
    block_of = {"minus": c.n_minus, "plus": c.n_plus, "minus0": c.n_minus0, "plus0": c.n_plus0}
    merged: dict[Fraction, list] = {}
    for m in range(m_max + 1):
        dim_m = harmonic_decomp(spec.N, m).total_dim
        values = _family_values(spec.N, m, lam)
        for fam in FAMILIES:
            blocks = block_of[fam]
            if blocks == 0:
                continue
            ev = values[fam]
            slot = merged.setdefault(ev, [0, 0, []])
            slot[0] += blocks
            slot[1] += blocks * dim_m
            slot[2].append((fam, m))
    return [
        SpectrumEntry(ev, bm, td, tuple(origins))
        for ev, (bm, td, origins) in sorted(merged.items())
    ]


def _harmonic_index_cover(N: int, magnitude: Fraction) -> int:
    """Smallest m with beta_m >= magnitude (so candidate zero families are included)."""
    m = 0
    while beta(N, m) < magnitude:
        m += 1
    return m


def kernel_dim_excess(spec: SystemSpec, level) -> int:
    """Kernel dimension at the level beyond the orbit contribution.

    Total dimension of zero eigenvalues of the spectrum table at lambda,
    minus the n_minus0 + n_plus0 constant directions tangent to the critical
    orbit. Positive exactly when the level is a candidate bifurcation level.
    Accepts a Level or a raw rational lambda.
    """
    lam = Fraction(level.value) if isinstance(level, Level) else Fraction(level)
    entries = spectrum_at(spec, lam, _harmonic_index_cover(spec.N, abs(lam)))
    zero_dim = sum(e.total_dim for e in entries if e.eigenvalue == 0)
    c = spec.counts
    return zero_dim - (c.n_minus0 + c.n_plus0)
