"""Distance engines: exhaustive enumeration, Brouwer-Zimmermann and the
randomized witness search, cross-checked against brute-force oracles.
"""

import numpy as np
import pytest

from plotkin import (
    Mat,
    bch_code,
    field_create,
    field_for_order,
    from_generator,
    low_weight_witness,
    min_distance_bz,
    min_distance_exhaustive,
    weight,
    weight_distribution,
)

from conftest import oracle_min_distance, oracle_weight_distribution, random_code


def hamming74():
    return bch_code(field_create(2), 7, 3)


def test_exhaustive_hamming():
    res = min_distance_exhaustive(hamming74())
    assert res.status == "exact"
    assert res.lower == res.upper == 3
    assert res.work == 2 ** 4 - 1
    assert weight(res.witness) == 3


def test_weight_distribution_hamming():
    counts = weight_distribution(hamming74())
    assert list(counts) == [1, 0, 0, 7, 7, 0, 0, 1]


def test_weight_distribution_simplex():
    """The [7,3] simplex code: seven words, all of weight 4."""
    F2 = field_create(2)
    G = Mat(F2, [[1, 0, 0, 1, 1, 0, 1],
                 [0, 1, 0, 1, 0, 1, 1],
                 [0, 0, 1, 0, 1, 1, 1]])
    counts = weight_distribution(from_generator(F2, G))
    assert list(counts) == [1, 0, 0, 0, 7, 0, 0, 0]


@pytest.mark.parametrize("q,n,k", [(2, 9, 4), (3, 7, 3), (4, 6, 3), (5, 6, 2), (9, 5, 2)])
def test_exhaustive_matches_oracle(q, n, k):
    for seed in range(3):
        C = random_code(q, n, k, seed=seed * 7 + q)
        res = min_distance_exhaustive(C)
        assert res.lower == oracle_min_distance(C.field, C.G.a)
        assert C.contains(res.witness)
        assert weight(res.witness) == res.upper


def test_weight_distribution_matches_oracle():
    C = random_code(3, 8, 3, seed=77)
    got = list(weight_distribution(C))
    assert got == oracle_weight_distribution(C.field, C.G.a, C.n)


def test_exhaustive_refuses_oversized_and_zero():
    C = random_code(2, 30, 25, seed=1)
    with pytest.raises(ValueError, match="ceiling"):
        min_distance_exhaustive(C)
    F2 = field_create(2)
    from plotkin import dual

    Z = dual(from_generator(F2, Mat(F2, np.eye(3, dtype=np.uint8))))
    with pytest.raises(ValueError):
        min_distance_exhaustive(Z)
    with pytest.raises(ValueError):
        min_distance_bz(Z)


def test_bz_exact_on_hamming_and_repetition():
    res = min_distance_bz(hamming74())
    assert res.status == "exact" and res.upper == 3
    F3 = field_create(3)
    rep = from_generator(F3, Mat(F3, [[1] * 9]))
    res = min_distance_bz(rep)
    assert res.status == "exact" and res.upper == 9


def test_bz_budget_zero_gives_trivial_bounds():
    C = hamming74()
    res = min_distance_bz(C, budget=0)
    assert res.status == "bounds"
    assert res.lower == 1
    assert res.upper == C.n - C.k + 1
    with pytest.raises(ValueError):
        min_distance_bz(C, budget=-1)


@pytest.mark.parametrize("q", (2, 3, 4, 7, 8))
def test_bz_agrees_with_exhaustive(q):
    for seed in range(4):
        C = random_code(q, 10, 4, seed=seed * 13 + q)
        a = min_distance_exhaustive(C)
        b = min_distance_bz(C)
        assert b.status == "exact"
        assert b.upper == a.upper
        if b.witness is not None:
            assert C.contains(b.witness)
            assert weight(b.witness) == b.upper


def test_bz_work_is_bounded_by_budget():
    C = random_code(4, 12, 6, seed=9)
    budget = 500
    res = min_distance_bz(C, budget=budget)
    assert res.work <= budget


def test_witness_finds_true_distance_on_small_code():
    C = random_code(4, 10, 4, seed=42)
    d = min_distance_exhaustive(C).upper
    res = low_weight_witness(C, target=d, budget=10 ** 6, seed=3)
    assert res.status == "witness"
    assert res.upper == d
    assert C.contains(res.witness)
    assert weight(res.witness) == res.upper
    assert res.seed == 3


def test_witness_is_deterministic_per_seed():
    C = random_code(3, 12, 5, seed=50)
    a = low_weight_witness(C, target=1, budget=2000, seed=7)
    b = low_weight_witness(C, target=1, budget=2000, seed=7)
    assert a.upper == b.upper and a.work == b.work
    assert np.array_equal(a.witness, b.witness)


def test_witness_never_reports_below_true_distance():
    for seed in range(5):
        C = random_code(2, 12, 5, seed=60 + seed)
        d = min_distance_exhaustive(C).upper
        res = low_weight_witness(C, target=1, budget=5000, seed=seed)
        if res.witness is not None:
            assert res.upper >= d


def test_witness_rejects_bad_target():
    with pytest.raises(ValueError):
        low_weight_witness(hamming74(), target=0)


def test_result_strings():
    assert "Exact d=3" in str(min_distance_exhaustive(hamming74()))
    assert "Bounds 1<=d<=4" in str(min_distance_bz(hamming74(), budget=0))
    w = low_weight_witness(hamming74(), target=3, budget=1000, seed=0)
    assert str(w).startswith("Witness d<=")
