"""Bifurcation indices at candidate levels, by three independent routes.

Write D(X) for the degree of -Id on the unit ball of X, V(m) for the
cumulative space H(N,0) + ... + H(N,m), and H_m for H(N,m). The index of a
level is the jump of the reduced-functional degree across it:

  ring route (product of degrees):
      BIF(+beta_m) = D(V(m-1))^enm * (D(H_m)^enm - 1)        enm = n_minus > 0
      BIF(-beta_m) = D(V(m))^(-enp) * (D(H_m)^enp - 1)       enp = n_plus > 0
      BIF(0)       = ((-1)^enm - (-1)^enp) * 1

  closed route (explicit coordinates, l <= m, zero for l > m):
      BIF(+beta_m)[Z_l] = (-1)^(enm dim V(m)) enm ((-1)^(enm dim H_m) r(m-1,l) - r(m-1,l) - k(m,l))
      BIF(+beta_m)[SO2] = (-1)^(enm dim V(m-1)) ((-1)^(enm dim H_m) - 1)
      BIF(-beta_m)[Z_l] = (-1)^(enp dim V(m))   enp ((-1)^(enp dim H_m) r(m-1,l) - r(m-1,l) - k(m,l))
      BIF(-beta_m)[SO2] = (-1)^(enp dim V(m))   ((-1)^(enp dim H_m) - 1)

    Caution: writing the +beta_m SO(2)-exponent with dim V(m) instead of
    dim V(m-1) looks symmetric but flips the sign exactly when
    enm * dim H_m is odd, and then disagrees with the ring product. The
    cross-route check below would report it as a RouteMismatch.

  general route (finite-dimensional reduction at truncation n > m): the
    degree on either side of the level is deg(L)^-1 * D(negative eigenspace),
    where deg(L) = D(V(n))^n_plus * D(V(n) (-) V(0))^n_plus0 and the negative
    eigenspace collects, per coordinate block and using the exact sign of each
    spectral family on that side of the level,
        n_minus copies of the sum of H_k with beta_k < lambda,
        n_plus  copies of the sum of H_k with beta_k > -lambda,
        n_plus0 copies of V(n) (-) V(0),
    all within k <= n. "lambda just above/below the level" is realised by
    weak/strict inequalities, never by a numeric epsilon: the eigenspace
    assembly is constant on the open intervals between consecutive levels.

bif() runs every applicable route and insists they agree on all coordinates
before returning the ring value as canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .degree import deg_neg_id
from .errors import MissingDirection, RouteMismatch, TruncationTooSmall
from .euler import EulerRingElement, add, inverse, neg, smul, star, unit
from .euler import pow as ring_pow
from .reps import RepDecomposition, cumulative_decomp, harmonic_decomp, rep_scale, rep_sub, rep_sum
from .spectrum import Level, beta
from .system import SystemSpec

ROUTE_RING = "ring"
ROUTE_CLOSED = "closed"
ROUTE_GENERAL = "general"


@dataclass(frozen=True)
class BifurcationIndex:
    level: Level
    value: EulerRingElement
    route: str
    truncation: int | None = None

    def to_obj(self) -> dict:
        obj = {"level": self.level.label, "route": self.route, "value": self.value.to_obj()}
        if self.truncation is not None:
            obj["truncation"] = self.truncation
        return obj


def _require_direction(spec: SystemSpec, level: Level) -> int:
    c = spec.counts
    if level.kind == "+":
        if c.n_minus == 0:
            raise MissingDirection(f"level +{level.m}: no a=-1, b=1 equations (n_- = 0)")
        return c.n_minus
    if level.kind == "-":
        if c.n_plus == 0:
            raise MissingDirection(f"level -{level.m}: no a=+1, b=1 equations (n_+ = 0)")
        return c.n_plus
    return 0


def _zero_level_value(spec: SystemSpec) -> EulerRingElement:
    c = spec.counts
    return smul((-1) ** c.n_minus - (-1) ** c.n_plus, unit())


def bif_ring(spec: SystemSpec, level: Level) -> BifurcationIndex:
    """Index as a product of degrees of -Id on V(m-1) or V(m) and H_m."""
    if level.kind == "0":
        return BifurcationIndex(level, _zero_level_value(spec), ROUTE_RING)
    n = _require_direction(spec, level)
    m = level.m
    dh = deg_neg_id(harmonic_decomp(spec.N, m))
    if level.kind == "+":
        dv = deg_neg_id(cumulative_decomp(spec.N, m - 1))
        value = star(ring_pow(dv, n), add(ring_pow(dh, n), neg(unit())))
    else:
        dv = deg_neg_id(cumulative_decomp(spec.N, m))
        value = star(ring_pow(dv, -n), add(ring_pow(dh, n), neg(unit())))
    return BifurcationIndex(level, value, ROUTE_RING)


def bif_closed(spec: SystemSpec, level: Level) -> BifurcationIndex:
    """Index from the explicit coordinate formulas over the k/r tables."""
    if level.kind == "0":
        return BifurcationIndex(level, _zero_level_value(spec), ROUTE_CLOSED)
    n = _require_direction(spec, level)
    m = level.m
    h = harmonic_decomp(spec.N, m)
    v_prev = cumulative_decomp(spec.N, m - 1)
    v_here = cumulative_decomp(spec.N, m)
    sign_h = (-1) ** (n * h.total_dim)
    sign_v = (-1) ** (n * v_here.total_dim)
    cz = {}
    for l in range(1, m + 1):
        r_prev = v_prev.mult.get(l, 0)
        k_here = h.mult.get(l, 0)
        cz[l] = sign_v * n * (sign_h * r_prev - r_prev - k_here)
    if level.kind == "+":
        c0 = (-1) ** (n * v_prev.total_dim) * (sign_h - 1)
    else:
        c0 = sign_v * (sign_h - 1)
    return BifurcationIndex(level, EulerRingElement(c0, cz), ROUTE_CLOSED)


def _negative_space(spec: SystemSpec, lam: int, n: int, upper: bool) -> RepDecomposition:
    """Negative eigenspace of the truncated linearisation just above/below lam."""
    c = spec.counts
    space = RepDecomposition()
    for k in range(n + 1):
        bk = beta(spec.N, k)
        in_minus = bk < lam or (upper and bk == lam)      # (beta_k - lambda)/(1 + beta_k) < 0
        in_plus = bk > -lam or (upper and bk == -lam)     # (-beta_k - lambda)/(1 + beta_k) < 0
        blocks = (c.n_minus if in_minus else 0) + (c.n_plus if in_plus else 0)
        if blocks:
            space = rep_sum(space, rep_scale(harmonic_decomp(spec.N, k), blocks))
    if c.n_plus0:
        tail = rep_sub(cumulative_decomp(spec.N, n), cumulative_decomp(spec.N, 0))
        space = rep_sum(space, rep_scale(tail, c.n_plus0))
    return space


def bif_general(spec: SystemSpec, level: Level, n: int) -> BifurcationIndex:
    """Index at truncation n > m from the two-sided degree jump."""
    if n <= level.m:
        raise TruncationTooSmall(
            f"truncation n={n} must exceed the level's harmonic index m={level.m}"
        )
    _require_direction(spec, level)
    c = spec.counts
    v_n = cumulative_decomp(spec.N, n)
    tail = rep_sub(v_n, cumulative_decomp(spec.N, 0))
    deg_l = star(ring_pow(deg_neg_id(v_n), c.n_plus), ring_pow(deg_neg_id(tail), c.n_plus0))
    inv_l = inverse(deg_l)

    def side(upper: bool) -> EulerRingElement:
        return star(inv_l, deg_neg_id(_negative_space(spec, level.value, n, upper)))

    value = add(side(True), neg(side(False)))
    return BifurcationIndex(level, value, ROUTE_GENERAL, truncation=n)


@lru_cache(maxsize=None)
def bif(spec: SystemSpec, level: Level, offsets: tuple[int, ...] = (1, 2)) -> BifurcationIndex:
    """Cross-checked index: all routes must agree on every coordinate.

    Runs the ring and closed routes plus the general route at truncations
    m + offset for each offset, raises RouteMismatch carrying every value if
    any pair differs, and returns the ring value as canonical.
    """
    routes: dict[str, EulerRingElement] = {
        ROUTE_RING: bif_ring(spec, level).value,
        ROUTE_CLOSED: bif_closed(spec, level).value,
    }
    for off in offsets:
        routes[f"{ROUTE_GENERAL}(n={level.m + off})"] = bif_general(spec, level, level.m + off).value
    reference = routes[ROUTE_RING]
    if any(v != reference for v in routes.values()):
        raise RouteMismatch(
            f"bif({level.label}) routes disagree for N={spec.N}, counts={spec.counts}: "
            + "; ".join(f"{name}={val!r}" for name, val in sorted(routes.items())),
            values=routes,
        )
    return BifurcationIndex(level, reference, ROUTE_RING)


def all_routes(spec: SystemSpec, level: Level, offsets: tuple[int, ...] = (1, 2, 3, 4)) -> dict:
    """Every route's value for reporting; cross-validates via bif() first."""
    canonical = bif(spec, level, offsets)
    general = {
        str(level.m + off): bif_general(spec, level, level.m + off).value.to_obj()
        for off in offsets
    }
    return {
        "level": level.label,
        "value": canonical.value.to_obj(),
        "routes": {
            ROUTE_RING: bif_ring(spec, level).value.to_obj(),
            ROUTE_CLOSED: bif_closed(spec, level).value.to_obj(),
            ROUTE_GENERAL: general,
        },
    }
