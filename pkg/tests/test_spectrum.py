from fractions import Fraction

import pytest

from spherebif import (
    DomainError,
    MalformedInput,
    SystemSpec,
    beta,
    kernel_dim_excess,
    lambda_set,
    minus_level,
    parse_level,
    plus_level,
    spectrum_at,
    zero_level,
)


def spec_of(n_minus, n_plus, n_minus0=0, n_plus0=0, N=3, orbits=1):
    a = (-1,) * n_minus + (1,) * n_plus + (-1,) * n_minus0 + (1,) * n_plus0
    b = (1,) * (n_minus + n_plus) + (0,) * (n_minus0 + n_plus0)
    return SystemSpec(N=N, a=a, b=b, orbits=orbits)


def test_beta_values():
    assert beta(3, 0) == 0
    assert [beta(3, m) for m in (1, 2, 3)] == [2, 6, 12]
    assert beta(5, 2) == 10
    with pytest.raises(DomainError):
        beta(2, 1)
    with pytest.raises(DomainError):
        beta(3, -1)


def test_beta_strictly_increasing():
    for N in (3, 4, 5, 6):
        values = [beta(N, m) for m in range(12)]
        assert all(a < b for a, b in zip(values, values[1:]))


def test_lambda_set_three_cases():
    assert [lv.value for lv in lambda_set(spec_of(1, 0), 2)] == [0, 2, 6]
    assert [lv.value for lv in lambda_set(spec_of(0, 2), 2)] == [-6, -2, 0]
    assert [lv.value for lv in lambda_set(spec_of(1, 1), 1)] == [-2, 0, 2]


def test_lambda_set_labels_and_kinds():
    levels = lambda_set(spec_of(1, 1), 2)
    assert [lv.label for lv in levels] == ["-2", "-1", "0", "+1", "+2"]
    assert levels[2] == zero_level()


def test_spectrum_at_zero_crossing():
    # single a=-1, b=1 equation at lambda = beta_2 = 6: kernel is the m=2 eigenspace
    entries = spectrum_at(spec_of(1, 0), 6, 2)
    zero_entries = [e for e in entries if e.eigenvalue == 0]
    assert len(zero_entries) == 1
    assert zero_entries[0].block_mult == 1
    assert zero_entries[0].total_dim == 5
    assert zero_entries[0].origins == (("minus", 2),)


def test_spectrum_at_m0_degenerate_families():
    spec = spec_of(1, 0, n_minus0=1, n_plus0=1)
    entries = spectrum_at(spec, Fraction(7, 3), 0)
    by_value = {e.eigenvalue: e for e in entries}
    # beta_0 = 0 makes both degenerate families vanish at m = 0
    assert by_value[Fraction(0)].block_mult == 2
    assert by_value[Fraction(0)].origins == (("minus0", 0), ("plus0", 0))


def test_spectrum_at_plus_family():
    entries = spectrum_at(spec_of(0, 1), -2, 1)
    zero_entries = [e for e in entries if e.eigenvalue == 0]
    assert len(zero_entries) == 1
    assert zero_entries[0].block_mult == 1
    assert zero_entries[0].origins == (("plus", 1),)


def test_spectrum_merges_coincident_values():
    # n_- = n_+ = 1 at lambda = 0: both families give the same rationals pairwise
    entries = spectrum_at(spec_of(1, 1), 0, 1)
    zero_entry = [e for e in entries if e.eigenvalue == 0][0]
    assert zero_entry.block_mult == 2
    assert zero_entry.total_dim == 2
    assert zero_entry.origins == (("minus", 0), ("plus", 0))


def test_kernel_dim_excess_examples():
    assert kernel_dim_excess(spec_of(1, 0), plus_level(3, 1)) == 3
    assert kernel_dim_excess(spec_of(1, 0), 1) == 0
    assert kernel_dim_excess(spec_of(1, 1), zero_level()) == 2


def test_kernel_excess_matches_lambda_membership():
    for n_minus, n_plus in ((1, 0), (0, 1), (2, 1), (1, 1), (3, 2)):
        for n0 in ((0, 0), (1, 1)):
            spec = spec_of(n_minus, n_plus, *n0, N=4)
            critical = {lv.value for lv in lambda_set(spec, 6)}
            for m in range(0, 7):
                for value in (beta(4, m), -beta(4, m)):
                    assert (kernel_dim_excess(spec, value) > 0) == (value in critical)
            for value in (1, Fraction(7, 2), Fraction(-7, 2), 5):
                assert kernel_dim_excess(spec, value) == 0


def test_eigenvalue_sign_rules():
    for N in (3, 4, 5):
        for m in range(0, 9):
            bm = beta(N, m)
            for lam in (Fraction(-11, 3), Fraction(0), Fraction(bm), Fraction(bm + 1), Fraction(-bm - 2)):
                assert (Fraction(bm - lam, 1 + bm) < 0) == (bm < lam)
                assert (Fraction(-bm - lam, 1 + bm) < 0) == (bm > -lam)
                assert Fraction(bm, 1 + bm) >= 0
                assert Fraction(-bm, 1 + bm) <= 0


def test_level_constructors_validate():
    with pytest.raises(DomainError):
        plus_level(3, 0)
    with pytest.raises(DomainError):
        minus_level(3, -1)
    assert plus_level(4, 2).value == 8
    assert minus_level(4, 2).value == -8


def test_parse_level():
    assert parse_level(3, "+2") == plus_level(3, 2)
    assert parse_level(3, "-3") == minus_level(3, 3)
    assert parse_level(3, "0") == zero_level()
    for bad in ("2", "+0", "-0", "+x", "", "++1"):
        with pytest.raises(MalformedInput):
            parse_level(3, bad)
