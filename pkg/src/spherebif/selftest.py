"""Grid-driven invariant suite and oracle cross-checks.

Everything here is exact, deterministic (seeded randomness only) and sized to
finish in seconds. Each check raises AssertionFailure on the first violation;
run_selftest returns a summary of check counts when the whole suite holds.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .bifindex import bif, bif_general
from .classify import enumerate_bounded_patterns, search_bounded_patterns, verify_theorems
from .degree import deg_neg_id
from .errors import AssertionFailure
from .euler import EulerRingElement, add, inverse, is_invertible, neg, star, unit, zero
from .euler import pow as ring_pow
from .reps import (
    RepDecomposition,
    cumulative_decomp,
    harmonic_decomp,
    harmonic_multiplicity,
    oracle_enumerate,
    rep_sum,
)
from .spectrum import beta, kernel_dim_excess, lambda_set
from .system import SystemSpec

GRIDS = {
    # N values, max n_-/n_+, n_-0/n_+0 values, level depth, search depth, truncation offsets
    "small": dict(Ns=(3, 4, 5), n_max=3, n0s=(0, 1), m_max=8, mu_max=5, offsets=(1, 2, 3, 4)),
    "full": dict(Ns=(3, 4, 5, 6), n_max=4, n0s=(0, 1), m_max=10, mu_max=6, offsets=(1, 2, 3, 4)),
}


def grid_specs(grid: str = "small", orbits: int = 1) -> list[SystemSpec]:
    """Every system signature in the named grid (coefficients in canonical order)."""
    g = GRIDS[grid]
    specs = []
    for N, nm, np_, nm0, np0 in product(
        g["Ns"], range(g["n_max"] + 1), range(g["n_max"] + 1), g["n0s"], g["n0s"]
    ):
        if nm + np_ == 0:
            continue
        a = (-1,) * nm + (1,) * np_ + (-1,) * nm0 + (1,) * np0
        b = (1,) * (nm + np_) + (0,) * (nm0 + np0)
        specs.append(SystemSpec(N=N, a=a, b=b, orbits=orbits))
    return specs


def _fail(rule: str, detail: str, counterexample=None):
    raise AssertionFailure(rule, detail, counterexample)


def check_representations(grid: str = "small") -> int:
    """Enumeration oracle, multiplicity identities, recursion, parity laws."""
    checks = 0
    for N in range(3, 7):
        for m in range(0, 11):
            h = harmonic_decomp(N, m)
            if h != oracle_enumerate(N, m):
                _fail("rep-oracle", f"harmonic_decomp != oracle_enumerate at N={N}, m={m}")
            if harmonic_multiplicity(N, m, m) != 1:
                _fail("rep-top-multiplicity", f"k(m,m) != 1 at N={N}, m={m}")
            if m >= 1 and harmonic_multiplicity(N, m, m - 1) != N - 2:
                _fail("rep-subtop-multiplicity", f"k(m,m-1) != N-2 at N={N}, m={m}")
            v = cumulative_decomp(N, m)
            if m >= 1:
                prev = cumulative_decomp(N, m - 1)
                if v != rep_sum(prev, h):
                    _fail("rep-cumulative-sum", f"V(m) != V(m-1) + H(m) at N={N}, m={m}")
                for l in range(0, m):
                    if v.mult.get(l, 0) != prev.mult.get(l, 0) + h.mult.get(l, 0):
                        _fail("rep-recursion", f"r(m,l) recursion fails at N={N}, m={m}, l={l}")
                if v.mult.get(m, 0) != 1:
                    _fail("rep-recursion", f"r(m,m) != 1 at N={N}, m={m}")
            if (-1) ** h.mult.get(0, 0) != (-1) ** h.total_dim:
                _fail("rep-parity", f"(-1)^k(m,0) != (-1)^dim H at N={N}, m={m}")
            if (-1) ** v.mult.get(0, 0) != (-1) ** v.total_dim:
                _fail("rep-parity", f"(-1)^r(m,0) != (-1)^dim V at N={N}, m={m}")
            if N == 3 and h.total_dim != 2 * m + 1:
                _fail("rep-dimension", f"dim H(3,m) != 2m+1 at m={m}")
            if N == 4 and h.total_dim % 2 != (m % 2 == 0):
                _fail("rep-dimension", f"dim H(4,{m}) has wrong parity")
            checks += 1
    return checks


def _random_element(rng: random.Random, max_support: int = 10, bound: int = 50) -> EulerRingElement:
    c0 = rng.randint(-bound, bound)
    support = rng.sample(range(1, 21), rng.randint(0, max_support))
    return EulerRingElement(c0, {l: rng.randint(-bound, bound) for l in support})


def check_euler_ring(cases: int = 200, seed: int = 7001) -> int:
    """Ring axioms, inverses, power laws and the power-difference identity."""
    rng = random.Random(seed)
    checks = 0
    for _ in range(cases):
        x = _random_element(rng)
        y = _random_element(rng)
        z = _random_element(rng)
        if star(x, y) != star(y, x):
            _fail("ring-commutative", f"x*y != y*x for {x!r}, {y!r}")
        if star(star(x, y), z) != star(x, star(y, z)):
            _fail("ring-associative", f"(x*y)*z != x*(y*z) for {x!r}, {y!r}, {z!r}")
        if star(x, add(y, z)) != add(star(x, y), star(x, z)):
            _fail("ring-distributive", f"x*(y+z) != x*y + x*z for {x!r}, {y!r}, {z!r}")
        if star(unit(), x) != x or add(zero(), x) != x or add(x, neg(x)) != zero():
            _fail("ring-neutral", f"unit/zero laws fail for {x!r}")

        inv_x = EulerRingElement(rng.choice((1, -1)), dict(x.cz))
        if not is_invertible(inv_x) or star(inv_x, inverse(inv_x)) != unit():
            _fail("ring-inverse", f"x * x^-1 != unit for {inv_x!r}")
        a_exp, b_exp = rng.randint(-4, 4), rng.randint(-4, 4)
        if star(ring_pow(inv_x, a_exp), ring_pow(inv_x, b_exp)) != ring_pow(inv_x, a_exp + b_exp):
            _fail("ring-power-law", f"x^a * x^b != x^(a+b) for {inv_x!r}, a={a_exp}, b={b_exp}")

        n = rng.randint(1, 5)
        lhs = star(ring_pow(x, n), add(ring_pow(y, n), neg(unit())))
        cz = {}
        for l in set(x.cz) | set(y.cz):
            cz[l] = (
                n
                * x.c0 ** (n - 1)
                * (x.cz.get(l, 0) * y.c0 ** n - x.cz.get(l, 0) + x.c0 * y.c0 ** (n - 1) * y.cz.get(l, 0))
            )
        rhs = EulerRingElement(x.c0 ** n * (y.c0 ** n - 1), cz)
        if lhs != rhs:
            _fail("ring-power-difference", f"x^n*(y^n - unit) closed form fails for {x!r}, {y!r}, n={n}")
        checks += 1
    return checks


def check_degree_product(random_cases: int = 100, seed: int = 7002) -> int:
    """deg(-Id) is multiplicative over direct sums; exhaustive small + random."""
    checks = 0
    small = [
        RepDecomposition(dict(zip(range(4), mults)))
        for mults in product(range(4), repeat=4)
    ]
    for x in small:
        for y in small:
            if deg_neg_id(rep_sum(x, y)) != star(deg_neg_id(x), deg_neg_id(y)):
                _fail("degree-product", f"product formula fails for {x!r}, {y!r}")
            checks += 1
    rng = random.Random(seed)
    for _ in range(random_cases):
        x = RepDecomposition({rng.randint(0, 12): rng.randint(0, 6) for _ in range(rng.randint(0, 6))})
        y = RepDecomposition({rng.randint(0, 12): rng.randint(0, 6) for _ in range(rng.randint(0, 6))})
        if deg_neg_id(rep_sum(x, y)) != star(deg_neg_id(x), deg_neg_id(y)):
            _fail("degree-product", f"product formula fails for {x!r}, {y!r}")
        n = rng.randint(0, 4)
        scaled = RepDecomposition({j: n * c for j, c in x.mult.items()})
        if ring_pow(deg_neg_id(x), n) != deg_neg_id(scaled):
            _fail("degree-power", f"deg^n != deg(n copies) for {x!r}, n={n}")
        checks += 1
    return checks


def check_spectrum(grid: str = "small") -> int:
    """Level-set shape, kernel-excess equivalence and eigenvalue sign rules."""
    g = GRIDS[grid]
    m_max = g["m_max"]
    checks = 0
    for spec in grid_specs(grid):
        c = spec.counts
        levels = lambda_set(spec, m_max)
        values = [lv.value for lv in levels]
        expected = [0]
        if c.n_minus > 0:
            expected += [beta(spec.N, m) for m in range(1, m_max + 1)]
        if c.n_plus > 0:
            expected += [-beta(spec.N, m) for m in range(1, m_max + 1)]
        if values != sorted(expected):
            _fail("lambda-set", f"unexpected level set for N={spec.N}, counts={c}")
        for lv in levels:
            if kernel_dim_excess(spec, lv) <= 0:
                _fail("kernel-excess", f"no kernel excess at {lv.label} for N={spec.N}, counts={c}")
        for m in range(1, m_max + 1):
            if c.n_minus == 0 and kernel_dim_excess(spec, beta(spec.N, m)) != 0:
                _fail("kernel-excess", f"+beta_{m} wrongly critical for counts={c}")
            if c.n_plus == 0 and kernel_dim_excess(spec, -beta(spec.N, m)) != 0:
                _fail("kernel-excess", f"-beta_{m} wrongly critical for counts={c}")
        # 1 < beta_1, beta_1 < beta_1 + 1 = N < beta_2, and non-integers: never spectral
        for lam in (1, Fraction(7, 2), Fraction(-7, 2), beta(spec.N, 1) + 1):
            if kernel_dim_excess(spec, lam) != 0:
                _fail("kernel-excess", f"non-eigenvalue {lam} reported critical for N={spec.N}")
        checks += 1

    for N in (3, 4, 5):
        for m in range(0, m_max + 1):
            bm = beta(N, m)
            for lam in (Fraction(-3), Fraction(0), Fraction(bm), Fraction(2 * bm + 1, 2)):
                if (Fraction(bm - lam, 1 + bm) < 0) != (bm < lam):
                    _fail("spectrum-sign", f"minus-family sign rule fails at N={N}, m={m}, lam={lam}")
                if (Fraction(-bm - lam, 1 + bm) < 0) != (bm > -lam):
                    _fail("spectrum-sign", f"plus-family sign rule fails at N={N}, m={m}, lam={lam}")
                if Fraction(bm, 1 + bm) < 0 or Fraction(-bm, 1 + bm) > 0:
                    _fail("spectrum-sign", f"degenerate-family sign rule fails at N={N}, m={m}")
                checks += 1
    return checks


def check_indices(grid: str = "small") -> int:
    """Route agreement, truncation independence and coordinate identities."""
    g = GRIDS[grid]
    checks = 0
    for spec in grid_specs(grid):
        c = spec.counts
        bif0 = bif(spec, lambda_set(spec, 0)[0]).value
        if (bif0 == zero()) != (c.n_minus % 2 == c.n_plus % 2):
            _fail("index-zero-parity", f"BIF(0) vanishing mismatch for counts={c}")
        for level in lambda_set(spec, g["m_max"]):
            if level.kind == "0":
                continue
            m = level.m
            values = {bif_general(spec, level, m + off).value for off in g["offsets"]}
            if len(values) != 1:
                _fail("index-truncation", f"truncation-dependent index at {level.label}, N={spec.N}")
            value = bif(spec, level, offsets=g["offsets"]).value  # raises RouteMismatch on its own
            n_dir = c.n_minus if level.kind == "+" else c.n_plus
            dim_v = cumulative_decomp(spec.N, m).total_dim
            if value.coord(m) != n_dir * (-1) ** (n_dir * dim_v + 1):
                _fail("index-top-coordinate", f"Z_m coordinate wrong at {level.label}, N={spec.N}, counts={c}")
            if any(l > m for l in value.cz):
                _fail("index-support", f"Z_l support above m at {level.label}, N={spec.N}")
            if value == zero():
                _fail("index-nonzero", f"vanishing index at {level.label}, N={spec.N}, counts={c}")
            checks += 1
    return checks


def check_search(grid: str = "small") -> int:
    """Theorem verification by search, plus pruned-vs-naive oracle agreement."""
    g = GRIDS[grid]
    checks = 0
    seen: set[tuple] = set()
    for spec in grid_specs(grid):
        c = spec.counts
        key = (spec.N, c.n_minus, c.n_plus, c.n_minus0, c.n_plus0)
        if key in seen:
            continue
        seen.add(key)
        for orbits in (1, 2):
            variant = SystemSpec(N=spec.N, a=spec.a, b=spec.b, orbits=orbits)
            verify_theorems(variant, mu_max=g["mu_max"])
            checks += 1

    representative = [
        SystemSpec(3, (-1,), (1,)),
        SystemSpec(3, (-1, 1), (1, 1)),
        SystemSpec(3, (-1, -1, 1), (1, 1, 1)),
        SystemSpec(4, (-1, -1, 1), (1, 1, 1)),
        SystemSpec(4, (1, 1, -1), (1, 1, 1)),
        SystemSpec(5, (-1, 1, 1, -1), (1, 1, 0, 0)),
    ]
    for spec in representative:
        for orbits in (1, 2):
            pruned = search_bounded_patterns(spec, orbits, mu_max=3)
            naive = enumerate_bounded_patterns(spec, orbits, mu_max=3)
            if pruned != naive:
                _fail(
                    "search-oracle",
                    f"pruned != naive for N={spec.N}, counts={spec.counts}, orbits={orbits}",
                )
            checks += 1
    return checks


def run_selftest(grid: str = "small") -> dict:
    """Full invariant suite; raises AssertionFailure on any violation."""
    if grid not in GRIDS:
        raise AssertionFailure("selftest-grid", f"unknown grid {grid!r}; choose from {sorted(GRIDS)}")
    sections = {
        "representations": check_representations(grid),
        "euler_ring": check_euler_ring(),
        "degree_product": check_degree_product(),
        "spectrum": check_spectrum(grid),
        "indices": check_indices(grid),
        "search": check_search(grid),
    }
    return {"grid": grid, "sections": sections, "status": "ok"}
