import random

import pytest

from spherebif import (
    DerivedCounts,
    InvariantViolation,
    MalformedInput,
    SystemSpec,
    derive_counts,
    parse_spec,
)


def test_parse_single_minus_coefficient():
    spec = parse_spec({"N": 3, "a": [-1], "b": [1], "orbits": 1})
    assert spec.counts == DerivedCounts(1, 0, 0, 0)
    assert spec.p == 1


def test_parse_mixed_counts():
    spec = parse_spec({"N": 4, "a": [-1, 1, 1], "b": [1, 1, 0], "orbits": 2})
    c = spec.counts
    assert (c.n_minus, c.n_plus, c.n_minus0, c.n_plus0) == (1, 1, 0, 1)


def test_parse_rejects_fully_degenerate_system():
    with pytest.raises(InvariantViolation):
        parse_spec({"N": 3, "a": [1], "b": [0], "orbits": 1})


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ([-1, -1], [1, 1], (2, 0, 0, 0)),
        ([-1, 1, -1, 1], [1, 1, 0, 0], (1, 1, 1, 1)),
        ([1, 1, 1], [1, 1, 1], (0, 3, 0, 0)),
    ],
)
def test_derive_counts(a, b, expected):
    spec = SystemSpec(N=4, a=tuple(a), b=tuple(b))
    c = derive_counts(spec)
    assert (c.n_minus, c.n_plus, c.n_minus0, c.n_plus0) == expected


def test_counts_partition_p():
    rng = random.Random(411)
    for _ in range(100):
        p = rng.randint(1, 10)
        a = tuple(rng.choice((-1, 1)) for _ in range(p))
        b = tuple(rng.choice((0, 1)) for _ in range(p))
        if not any(bi == 1 for bi in b):
            b = b[:-1] + (1,)
        spec = SystemSpec(N=rng.randint(3, 7), a=a, b=b, orbits=rng.choice((1, 2)))
        assert spec.counts.p == p


@pytest.mark.parametrize(
    "document",
    [
        {"N": 3, "a": [-1], "b": [1]},                                  # missing orbits
        {"N": 3, "a": [-1], "b": [1, 1], "orbits": 1},                  # arity mismatch
        {"N": 3, "a": [-1], "b": [1], "orbits": 1, "extra": 0},         # unknown field
        {"N": "3", "a": [-1], "b": [1], "orbits": 1},                   # wrong type
        {"N": 3, "a": -1, "b": [1], "orbits": 1},                       # a not a list
        {"N": 3, "a": [True], "b": [1], "orbits": 1},                   # bool is not an int here
        [1, 2, 3],                                                      # not an object
    ],
)
def test_parse_malformed(document):
    with pytest.raises(MalformedInput):
        parse_spec(document)


@pytest.mark.parametrize(
    "document",
    [
        {"N": 2, "a": [-1], "b": [1], "orbits": 1},      # sphere dimension too small
        {"N": 3, "a": [-2], "b": [1], "orbits": 1},      # a value outside {-1, 1}
        {"N": 3, "a": [-1], "b": [2], "orbits": 1},      # b value outside {0, 1}
        {"N": 3, "a": [-1], "b": [1], "orbits": 3},      # orbit count
        {"N": 3, "a": [1, -1], "b": [0, 0], "orbits": 1},  # n_- + n_+ = 0
    ],
)
def test_parse_invariant_violations(document):
    with pytest.raises(InvariantViolation):
        parse_spec(document)


def test_parse_is_deterministic():
    doc = {"N": 5, "a": [-1, 1], "b": [1, 0], "orbits": 2}
    assert parse_spec(doc) == parse_spec(dict(doc))
