import pytest

from spherebif import (
    EulerRingElement,
    LevelNotInLambda,
    MissingDirection,
    RouteMismatch,
    SystemSpec,
    TruncationTooSmall,
    bif,
    bif_closed,
    bif_general,
    bif_ring,
    cumulative_decomp,
    harmonic_decomp,
    lambda_set,
    minus_level,
    plus_level,
    zero_level,
)
from spherebif.euler import zero


def spec_of(n_minus, n_plus, n_minus0=0, n_plus0=0, N=3):
    a = (-1,) * n_minus + (1,) * n_plus + (-1,) * n_minus0 + (1,) * n_plus0
    b = (1,) * (n_minus + n_plus) + (0,) * (n_minus0 + n_plus0)
    return SystemSpec(N=N, a=a, b=b)


def test_ring_route_frozen_values():
    # hand ring computation: (-1,{}) * ((-1,{1:1}) - unit) = (2,{1:-1})
    assert bif_ring(spec_of(1, 0), plus_level(3, 1)).value == EulerRingElement(2, {1: -1})
    # inverse of deg(V(1)) enters with a negative power
    assert bif_ring(spec_of(0, 1), minus_level(3, 1)).value == EulerRingElement(-2, {1: -1})
    assert bif_ring(spec_of(1, 2), zero_level()).value == EulerRingElement(-2)


def test_closed_route_frozen_values():
    assert bif_closed(spec_of(1, 0), plus_level(3, 2)).value == EulerRingElement(-2, {1: 3, 2: 1})
    # even direction count kills the SO(2)-coordinate
    assert bif_closed(spec_of(2, 0), plus_level(3, 3)).value.c0 == 0
    assert bif_closed(spec_of(0, 2, N=4), minus_level(4, 2)).value.c0 == 0


def test_closed_route_so2_exponent_choice():
    # the corrected +beta_m SO(2)-coordinate uses dim V(m-1); using dim V(m)
    # instead flips the sign whenever n_- * dim H_m is odd and breaks
    # agreement with the ring product
    spec = spec_of(1, 0)
    for m in (1, 2):
        level = plus_level(3, m)
        n = 1
        dim_h = harmonic_decomp(3, m).total_dim
        dim_v = cumulative_decomp(3, m).total_dim
        dim_v_prev = cumulative_decomp(3, m - 1).total_dim
        corrected = (-1) ** (n * dim_v_prev) * ((-1) ** (n * dim_h) - 1)
        printed = (-1) ** (n * dim_v) * ((-1) ** (n * dim_h) - 1)
        assert bif_ring(spec, level).value.c0 == corrected
        assert printed == -corrected != corrected


def test_general_route_equals_ring_route():
    spec = spec_of(1, 0)
    level = plus_level(3, 1)
    assert bif_general(spec, level, 3).value == EulerRingElement(2, {1: -1})
    assert bif_general(spec, level, 4).value == bif_general(spec, level, 3).value


def test_general_route_zero_level_equal_parity():
    assert bif_general(spec_of(1, 1), zero_level(), 2).value == zero()


def test_truncation_errors():
    with pytest.raises(TruncationTooSmall):
        bif_general(spec_of(1, 0), plus_level(3, 2), 2)
    with pytest.raises(TruncationTooSmall):
        bif_general(spec_of(1, 0), zero_level(), 0)


def test_missing_direction_errors():
    with pytest.raises(MissingDirection):
        bif_ring(spec_of(0, 1), plus_level(3, 1))
    with pytest.raises(MissingDirection):
        bif_closed(spec_of(1, 0), minus_level(3, 1))
    with pytest.raises(MissingDirection):
        bif_general(spec_of(1, 0), minus_level(3, 2), 5)
    # a level outside the candidate set is a LevelNotInLambda as well
    with pytest.raises(LevelNotInLambda):
        bif(spec_of(0, 2), plus_level(3, 4))


def test_bif_cross_checks_and_returns_ring_value():
    spec = spec_of(2, 1, 1, 0, N=4)
    level = minus_level(4, 2)
    result = bif(spec, level)
    assert result.route == "ring"
    assert result.value == bif_ring(spec, level).value
    # nonzero at Z_2: n_+ * (-1)^(n_+ dim V(2) + 1) with dim V(2) = 14 for N=4
    assert result.value.coord(2) == 1 * (-1) ** (14 + 1) == -1


def test_route_mismatch_is_diagnosed(monkeypatch):
    import spherebif.bifindex as bifindex

    def wrong_closed(spec, level):
        return bifindex.BifurcationIndex(level, EulerRingElement(99), "closed")

    monkeypatch.setattr(bifindex, "bif_closed", wrong_closed)
    with pytest.raises(RouteMismatch) as err:
        bifindex.bif(spec_of(1, 0, N=6), plus_level(6, 1), offsets=(1,))
    assert "closed" in err.value.values
    assert "ring" in err.value.values
    assert err.value.values["closed"] == EulerRingElement(99)


def test_zero_index_parity_rule():
    assert bif(spec_of(1, 1), zero_level()).value == zero()
    assert bif(spec_of(2, 2, 1, 1), zero_level()).value == zero()
    assert bif(spec_of(1, 2), zero_level()).value == EulerRingElement(-2)
    assert bif(spec_of(2, 1), zero_level()).value == EulerRingElement(2)


def test_corollary_top_coordinate_small_grid():
    for N in (3, 4, 5):
        for n_minus, n_plus in ((1, 0), (2, 1), (3, 2), (0, 1), (1, 3)):
            spec = spec_of(n_minus, n_plus, N=N)
            for level in lambda_set(spec, 5):
                if level.kind == "0":
                    continue
                value = bif(spec, level).value
                m = level.m
                n_dir = n_minus if level.kind == "+" else n_plus
                dim_v = cumulative_decomp(N, m).total_dim
                assert value.coord(m) == n_dir * (-1) ** (n_dir * dim_v + 1)
                assert all(l <= m for l in value.cz)
                assert value != zero()
