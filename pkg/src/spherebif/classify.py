"""Continuum verdicts and mechanical verification of the closure obstruction.

A continuum of solutions bifurcating from a nonzero-index level is either
unbounded or returns to the trivial family with the indices over all its
intersection levels summing to the zero ring element. The verdict table
encodes when the latter is impossible outright; the pattern search settles
the remaining regimes by exhausting every candidate intersection multiset.

Search structure: index coordinates are triangular - the Z_l coordinate of
BIF(+-beta_k) vanishes for l > k, and the level-0 index is a pure
SO(2)-multiple - so assigning levels from the top down finalises one
Z-coordinate per step and dead branches are pruned as soon as a finalised
coordinate is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bifindex import bif
from .errors import AssertionFailure, InvariantViolation
from .euler import EulerRingElement, add, smul, zero
from .reps import cumulative_decomp
from .spectrum import Level, minus_level, plus_level, zero_level
from .system import DerivedCounts, SystemSpec

UNBOUNDED = "unbounded"
NO_BIFURCATION = "no-bifurcation"
INDEX_VANISHES = "index-vanishes"
AT_LEAST_ONE_OF_FOUR = "at-least-one-of-four-unbounded"


@dataclass(frozen=True)
class IntersectionPattern:
    """Candidate intersection multiset: alpha0 at level 0, alpha[l] at +-beta_|l|.

    Keys of ``alpha`` are signed harmonic indices (+l for +beta_l, -l for
    -beta_l); entries are positive, bounded by the orbit count.
    """

    alpha0: int
    alpha: tuple[tuple[int, int], ...]
    orbit_count: int

    def __post_init__(self):
        if self.orbit_count not in (1, 2):
            raise InvariantViolation(f"orbit_count must be 1 or 2, got {self.orbit_count}")
        cap = self.orbit_count
        if not 0 <= self.alpha0 <= cap:
            raise InvariantViolation(f"alpha0={self.alpha0} outside 0..{cap}")
        seen = set()
        for l, count in self.alpha:
            if l == 0 or l in seen:
                raise InvariantViolation(f"bad signed level key {l} in pattern")
            seen.add(l)
            if not 1 <= count <= cap:
                raise InvariantViolation(f"alpha[{l}]={count} outside 1..{cap}")
        if tuple(sorted(self.alpha)) != self.alpha:
            raise InvariantViolation("pattern keys must be sorted")

    @classmethod
    def make(cls, alpha0: int, alpha: dict[int, int], orbit_count: int) -> "IntersectionPattern":
        items = tuple(sorted((l, c) for l, c in alpha.items() if c))
        return cls(alpha0, items, orbit_count)

    @property
    def as_dict(self) -> dict[int, int]:
        return dict(self.alpha)

    @property
    def mu(self) -> int:
        """Largest harmonic index met at a nonzero level; 0 if only level 0 is met."""
        return max((abs(l) for l, _ in self.alpha), default=0)

    def pair_at(self, l: int) -> tuple[int, int]:
        d = self.as_dict
        return d.get(l, 0), d.get(-l, 0)

    def is_zero(self) -> bool:
        return self.alpha0 == 0 and not self.alpha

    def to_obj(self) -> dict:
        return {
            "alpha0": self.alpha0,
            "alpha": {f"{'+' if l > 0 else '-'}{abs(l)}": c for l, c in self.alpha},
            "mu": self.mu,
            "orbit_count": self.orbit_count,
        }


@dataclass(frozen=True)
class Verdict:
    level: Level
    orbit_count: int
    conclusion: str
    citations: tuple[str, ...]
    bounded_options: tuple[tuple[int, int], ...] | None = None

    def to_obj(self) -> dict:
        obj = {
            "level": self.level.label,
            "orbit_count": self.orbit_count,
            "conclusion": self.conclusion,
            "citations": list(self.citations),
        }
        if self.bounded_options is not None:
            obj["bounded_options"] = [list(p) for p in self.bounded_options]
        return obj


def _two_to_one_regime(c: DerivedCounts) -> str | None:
    """"a" when n_- = 2 n_+ with n_+ odd, "b" when n_+ = 2 n_- with n_- odd."""
    if c.n_plus % 2 == 1 and c.n_minus == 2 * c.n_plus:
        return "a"
    if c.n_minus % 2 == 1 and c.n_plus == 2 * c.n_minus:
        return "b"
    return None


def admissible_pairs(c: DerivedCounts) -> tuple[tuple[int, int], ...] | None:
    """Per-level (alpha_{+l}, alpha_{-l}) pairs a bounded two-orbit continuum may realise."""
    regime = _two_to_one_regime(c)
    if regime == "a":
        return ((1, 2), (2, 0))
    if regime == "b":
        return ((2, 1), (0, 2))
    return None


def verdict(spec: SystemSpec, level: Level) -> Verdict:
    """Classify the continuum bifurcating at the level, with rule citations."""
    c = spec.counts
    in_lambda = (
        level.kind == "0"
        or (level.kind == "+" and c.n_minus > 0)
        or (level.kind == "-" and c.n_plus > 0)
    )
    if not in_lambda:
        return Verdict(level, spec.orbits, NO_BIFURCATION, ("level-not-critical",))

    parity_differs = (c.n_minus - c.n_plus) % 2 == 1
    if level.kind == "0":
        if parity_differs:
            tag = "zero-level-parity-unbounded" if spec.orbits == 1 else "two-orbit-zero-level-unbounded"
            return Verdict(level, spec.orbits, UNBOUNDED, (tag,))
        return Verdict(level, spec.orbits, INDEX_VANISHES, ("zero-index-vanishes",))

    if spec.orbits == 1:
        return Verdict(level, spec.orbits, UNBOUNDED, ("one-orbit-nonzero-level-unbounded",))

    ratio_free = c.n_minus != 2 * c.n_plus and c.n_plus != 2 * c.n_minus
    if not parity_differs or ratio_free:
        citations = ["two-orbit-parity-or-ratio-unbounded"]
        if c.n_minus * c.n_plus == 0:
            citations.append("cooperative-unbounded")
        return Verdict(level, spec.orbits, UNBOUNDED, tuple(citations))

    return Verdict(
        level,
        spec.orbits,
        AT_LEAST_ONE_OF_FOUR,
        ("two-orbit-at-least-one-of-four", "two-orbit-bounded-intersection-pattern"),
        bounded_options=admissible_pairs(c),
    )


def index_table(spec: SystemSpec, mu_max: int) -> dict[int, EulerRingElement]:
    """Cross-checked index values keyed by signed harmonic index (0 for level 0)."""
    c = spec.counts
    table: dict[int, EulerRingElement] = {0: bif(spec, zero_level()).value}
    for l in range(1, mu_max + 1):
        if c.n_minus > 0:
            table[l] = bif(spec, plus_level(spec.N, l)).value
        if c.n_plus > 0:
            table[-l] = bif(spec, minus_level(spec.N, l)).value
    return table


def theta_sum(spec: SystemSpec, pattern: IntersectionPattern, indices=None) -> EulerRingElement:
    """alpha0*BIF(0) + sum_l alpha_l*BIF(+beta_l) + alpha_{-l}*BIF(-beta_l)."""
    c = spec.counts
    for l, count in pattern.alpha:
        if l > 0 and c.n_minus == 0:
            raise InvariantViolation(f"pattern meets +beta_{l} but that level is not critical (n_- = 0)")
        if l < 0 and c.n_plus == 0:
            raise InvariantViolation(f"pattern meets -beta_{-l} but that level is not critical (n_+ = 0)")
    table = indices if indices is not None else index_table(spec, pattern.mu)
    total = smul(pattern.alpha0, table[0])
    for l, count in pattern.alpha:
        total = add(total, smul(count, table[l]))
    return total


def _level_choices(c: DerivedCounts, cap: int) -> list[tuple[int, int]]:
    plus_range = range(cap + 1) if c.n_minus > 0 else range(1)
    minus_range = range(cap + 1) if c.n_plus > 0 else range(1)
    return [(ap, am) for ap in plus_range for am in minus_range]


def search_bounded_patterns(
    spec: SystemSpec,
    orbit_count: int | None = None,
    mu_max: int = 6,
    indices: dict[int, EulerRingElement] | None = None,
) -> list[IntersectionPattern]:
    """All nonzero patterns with mu <= mu_max whose index sum vanishes.

    Backtracks over levels mu_max, mu_max - 1, ..., 1 and finally alpha0.
    After assigning level l the Z_l coordinate of the running sum is final
    (lower levels cannot touch it), so any branch with a nonzero finalised
    coordinate is cut. alpha0 is canonicalised to 0 whenever the level-0
    index is the zero element, since it then contributes nothing.
    """
    oc = spec.orbits if orbit_count is None else orbit_count
    if oc not in (1, 2):
        raise InvariantViolation(f"orbit_count must be 1 or 2, got {oc}")
    c = spec.counts
    table = indices if indices is not None else index_table(spec, mu_max)
    bif0 = table[0]
    alpha0_choices = (0,) if not bif0 else tuple(range(oc + 1))
    choices = _level_choices(c, oc)
    results: list[IntersectionPattern] = []
    assignment: dict[int, int] = {}

    def finish(total: EulerRingElement) -> None:
        for a0 in alpha0_choices:
            final = add(total, smul(a0, bif0))
            if final == zero() and (a0 or assignment):
                results.append(IntersectionPattern.make(a0, assignment, oc))

    def descend(l: int, total: EulerRingElement) -> None:
        if l == 0:
            finish(total)
            return
        for ap, am in choices:
            branch = total
            if ap:
                branch = add(branch, smul(ap, table[l]))
            if am:
                branch = add(branch, smul(am, table[-l]))
            if branch.coord(l) != 0:
                continue
            if ap:
                assignment[l] = ap
            if am:
                assignment[-l] = am
            descend(l - 1, branch)
            assignment.pop(l, None)
            assignment.pop(-l, None)

    descend(mu_max, zero())
    return sorted(results, key=lambda p: (p.alpha0, p.alpha))


def enumerate_bounded_patterns(
    spec: SystemSpec,
    orbit_count: int | None = None,
    mu_max: int = 3,
    indices: dict[int, EulerRingElement] | None = None,
) -> list[IntersectionPattern]:
    """Naive full enumeration over all patterns; oracle twin of the pruned search."""
    oc = spec.orbits if orbit_count is None else orbit_count
    c = spec.counts
    table = indices if indices is not None else index_table(spec, mu_max)
    bif0 = table[0]
    alpha0_choices = (0,) if not bif0 else tuple(range(oc + 1))
    choices = _level_choices(c, oc)
    results = []

    def walk(l: int, assignment: dict[int, int]) -> None:
        if l == 0:
            for a0 in alpha0_choices:
                pattern = IntersectionPattern.make(a0, assignment, oc)
                if pattern.is_zero():
                    continue
                if theta_sum(spec, pattern, indices=table) == zero():
                    results.append(pattern)
            return
        for ap, am in choices:
            nxt = dict(assignment)
            if ap:
                nxt[l] = ap
            if am:
                nxt[-l] = am
            walk(l - 1, nxt)

    walk(mu_max, {})
    return sorted(results, key=lambda p: (p.alpha0, p.alpha))


def verify_theorems(
    spec: SystemSpec,
    mu_max: int = 6,
    indices: dict[int, EulerRingElement] | None = None,
) -> dict:
    """Run the pattern search and assert the classification results against it.

    Raises AssertionFailure naming the violated rule and the counterexample
    pattern; returns a summary record when every assertion holds.
    """
    c = spec.counts
    patterns = search_bounded_patterns(spec, spec.orbits, mu_max, indices=indices)
    checked: list[str] = []
    parity_same = (c.n_minus - c.n_plus) % 2 == 0
    regime = _two_to_one_regime(c)

    def fail(rule: str, pattern: IntersectionPattern, detail: str):
        raise AssertionFailure(rule, f"{detail} (N={spec.N}, counts={c})", pattern.to_obj())

    if spec.orbits == 1:
        checked.append("one-orbit-nonzero-level-unbounded")
        for p in patterns:
            fail("one-orbit-nonzero-level-unbounded", p, "one-orbit closure pattern found")
    else:
        if parity_same or regime is None:
            checked.append("two-orbit-parity-or-ratio-unbounded")
            if c.n_minus * c.n_plus == 0:
                checked.append("cooperative-unbounded")
            for p in patterns:
                fail("two-orbit-parity-or-ratio-unbounded", p, "two-orbit closure pattern found")
        else:
            checked.append("two-orbit-bounded-intersection-pattern")
            checked.append("two-orbit-top-level-dimension-odd")
            options = set(admissible_pairs(c))
            for p in patterns:
                for l in range(1, p.mu + 1):
                    pair = p.pair_at(l)
                    if pair != (0, 0) and pair not in options:
                        fail(
                            "two-orbit-bounded-intersection-pattern",
                            p,
                            f"level {l} realises {pair}, admissible: {sorted(options)}",
                        )
                if cumulative_decomp(spec.N, p.mu).total_dim % 2 == 0:
                    fail(
                        "two-orbit-top-level-dimension-odd",
                        p,
                        f"dim V({p.mu}) is even",
                    )

    checked.append("zero-level-closure-parity")
    for p in patterns:
        if p.alpha0 > 0 and not parity_same:
            fail("zero-level-closure-parity", p, "alpha0 > 0 with nonvanishing level-0 index")

    return {
        "spec": spec.to_obj(),
        "mu_max": mu_max,
        "orbit_count": spec.orbits,
        "assertions": checked,
        "patterns": [p.to_obj() for p in patterns],
        "status": "ok",
    }
