import random

import pytest

from spherebif import (
    DomainError,
    NegativeMultiplicity,
    RepDecomposition,
    cumulative_decomp,
    harmonic_decomp,
    harmonic_multiplicity,
    oracle_enumerate,
    rep_scale,
    rep_sub,
    rep_sum,
)


def rd(mult):
    return RepDecomposition(mult)


# ---------------------------------------------------------------------------
# harmonic_multiplicity
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("N", [3, 4, 5, 6])
@pytest.mark.parametrize("m", range(0, 11))
def test_top_multiplicities(N, m):
    assert harmonic_multiplicity(N, m, m) == 1
    if m >= 1:
        assert harmonic_multiplicity(N, m, m - 1) == N - 2


def test_all_multiplicities_are_one_at_n3():
    assert harmonic_multiplicity(3, 7, 3) == 1
    assert all(harmonic_multiplicity(3, 7, j) == 1 for j in range(8))


def test_multiplicity_domain_errors():
    with pytest.raises(DomainError):
        harmonic_multiplicity(3, 5, -1)
    with pytest.raises(DomainError):
        harmonic_multiplicity(3, 5, 6)
    with pytest.raises(DomainError):
        harmonic_multiplicity(2, 5, 1)


# ---------------------------------------------------------------------------
# harmonic_decomp / oracle
# ---------------------------------------------------------------------------

def test_harmonic_decomp_frozen_values():
    assert harmonic_decomp(3, 2) == rd({0: 1, 1: 1, 2: 1})
    assert harmonic_decomp(3, 2).total_dim == 5
    assert harmonic_decomp(4, 0) == rd({0: 1})
    assert harmonic_decomp(4, 3) == rd({0: 4, 1: 3, 2: 2, 3: 1})
    assert harmonic_decomp(4, 3).total_dim == 16
    assert all(harmonic_decomp(4, 3).mult[j] == 4 - j for j in range(4))


def test_oracle_frozen_values():
    assert oracle_enumerate(3, 1) == rd({0: 1, 1: 1})
    assert oracle_enumerate(5, 0) == rd({0: 1})
    # sequences (2,0,0),(2,1,0),(2,1,1),(2,2,0),(2,2,1),(2,2,2) grouped by last entry
    assert oracle_enumerate(4, 2) == rd({0: 3, 1: 2, 2: 1})


@pytest.mark.parametrize("N", [3, 4, 5, 6])
@pytest.mark.parametrize("m", range(0, 11))
def test_oracle_equivalence(N, m):
    assert harmonic_decomp(N, m) == oracle_enumerate(N, m)


# ---------------------------------------------------------------------------
# cumulative_decomp
# ---------------------------------------------------------------------------

def test_cumulative_frozen_values():
    assert cumulative_decomp(3, 1) == rd({0: 2, 1: 1})
    assert cumulative_decomp(3, 1).total_dim == 4
    assert cumulative_decomp(5, 0) == rd({0: 1})
    assert cumulative_decomp(3, 2) == rd({0: 3, 1: 2, 2: 1})
    assert cumulative_decomp(3, 2).total_dim == 9
    # cross-check r(2, 1) = 1 + k(2, 1)
    assert cumulative_decomp(3, 2).mult[1] == 1 + harmonic_multiplicity(3, 2, 1)


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_cumulative_is_folded_sum(N):
    for m in range(0, 11):
        folded = RepDecomposition()
        for k in range(m + 1):
            folded = rep_sum(folded, harmonic_decomp(N, k))
        assert cumulative_decomp(N, m) == folded


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_cumulative_recursion(N):
    for m in range(1, 11):
        v, prev, h = cumulative_decomp(N, m), cumulative_decomp(N, m - 1), harmonic_decomp(N, m)
        assert v.mult.get(m) == 1
        for l in range(0, m):
            assert v.mult.get(l, 0) == prev.mult.get(l, 0) + h.mult.get(l, 0)
        assert all(l <= m for l in v.mult)


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_parity_identities(N):
    for m in range(0, 11):
        h, v = harmonic_decomp(N, m), cumulative_decomp(N, m)
        assert (-1) ** h.mult.get(0, 0) == (-1) ** h.total_dim
        assert (-1) ** v.mult.get(0, 0) == (-1) ** v.total_dim


def test_dimension_laws():
    for m in range(0, 11):
        assert harmonic_decomp(3, m).total_dim == 2 * m + 1
        assert harmonic_decomp(4, m).total_dim % 2 == (1 if m % 2 == 0 else 0)


# ---------------------------------------------------------------------------
# rep_sum / rep_sub / canonical form
# ---------------------------------------------------------------------------

def test_rep_sum_examples():
    assert rep_sum(rd({0: 1}), rd({1: 2})) == rd({0: 1, 1: 2})
    x = rd({0: 2, 3: 1})
    assert rep_sum(x, RepDecomposition()) == x
    assert rep_sum(harmonic_decomp(3, 0), harmonic_decomp(3, 1)) == cumulative_decomp(3, 1)


def test_rep_sub_examples():
    assert rep_sub(cumulative_decomp(3, 2), cumulative_decomp(3, 0)) == rd({0: 2, 1: 2, 2: 1})
    x = rd({0: 1, 4: 2})
    assert rep_sub(x, x) == RepDecomposition()
    with pytest.raises(NegativeMultiplicity):
        rep_sub(rd({0: 1}), rd({1: 1}))


def test_rep_sum_group_laws():
    rng = random.Random(412)
    for _ in range(60):
        def rand_rep():
            return rd({rng.randint(0, 8): rng.randint(1, 5) for _ in range(rng.randint(0, 5))})
        x, y, z = rand_rep(), rand_rep(), rand_rep()
        assert rep_sum(x, y) == rep_sum(y, x)
        assert rep_sum(rep_sum(x, y), z) == rep_sum(x, rep_sum(y, z))
        assert rep_sum(x, RepDecomposition()) == x
        assert rep_sum(x, y).total_dim == x.total_dim + y.total_dim
        assert rep_sub(rep_sum(x, y), y) == x
        assert rep_scale(x, 3) == rep_sum(x, rep_sum(x, x))


def test_canonical_form_drops_zeros():
    assert rd({0: 0, 2: 1}) == rd({2: 1})
    assert 0 not in rd({0: 0, 2: 1}).mult
    with pytest.raises(NegativeMultiplicity):
        rd({1: -1})
