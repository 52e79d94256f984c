"""Linear algebra over GF(q): rref, rank, nullspace, systematic form,
products and the generator-matrix file format.
"""

import numpy as np
import pytest

from plotkin import Mat, field_for_order, nullspace, rank, rref, systematic_form
from plotkin.matrix import (
    hstack,
    matmul,
    read_generator_file,
    vecmat,
    vstack,
    write_generator_file,
)

from conftest import oracle_encode


def rand_mat(q, rows, cols, seed):
    F = field_for_order(q)
    rng = np.random.default_rng(seed)
    return Mat(F, rng.integers(0, q, size=(rows, cols)).astype(np.uint8))


def test_mat_validates_entries():
    F3 = field_for_order(3)
    with pytest.raises(ValueError):
        Mat(F3, [[0, 3]])
    with pytest.raises(ValueError):
        Mat(F3, [1, 2])  # one-dimensional


def test_rref_known_example():
    F2 = field_for_order(2)
    M = Mat(F2, [[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    R, r, pivots = rref(M)
    assert r == 2
    assert pivots == [0, 1]
    assert np.array_equal(R.a[:2], [[1, 0, 1], [0, 1, 1]])
    assert not R.a[2].any()


@pytest.mark.parametrize("q", (2, 3, 4, 5, 9))
def test_rref_idempotent_and_rank_stable(q):
    for seed in range(5):
        M = rand_mat(q, 6, 9, seed)
        R, r, _ = rref(M)
        R2, r2, _ = rref(R)
        assert r2 == r
        assert R2 == R
        assert rank(M) == r


@pytest.mark.parametrize("q", (2, 3, 4, 7, 8))
def test_rref_preserves_row_space(q):
    F = field_for_order(q)
    for seed in range(3):
        M = rand_mat(q, 4, 7, seed + 10)
        R, r, _ = rref(M)
        # every original row lies in the span of the reduced rows and
        # vice versa: stacking must not change the rank
        assert rank(vstack(M, Mat(F, R.a[:r]))) == r


@pytest.mark.parametrize("q", (2, 3, 4, 9))
def test_nullspace_orthogonal_and_full(q):
    F = field_for_order(q)
    for seed in range(4):
        M = rand_mat(q, 4, 8, seed + 20)
        N = nullspace(M)
        assert N.rows == M.cols - rank(M)
        if N.rows:
            prod = matmul(M, N.transpose())
            assert not prod.a.any()
            assert rank(N) == N.rows


def test_systematic_form_prefers_requested_columns():
    F2 = field_for_order(2)
    G = Mat(F2, [[1, 1, 1, 0], [0, 1, 1, 1]])
    Gs, info, r = systematic_form(G, preferred_cols=[2, 3])
    assert r == 2
    assert info[:2] == [2, 3]
    assert np.array_equal(Gs.a[:, [2, 3]], np.eye(2, dtype=np.uint8))
    with pytest.raises(ValueError):
        systematic_form(G, preferred_cols=[9])


@pytest.mark.parametrize("q", (2, 3, 4, 8, 9))
def test_matmul_matches_scalar_oracle(q):
    F = field_for_order(q)
    A = rand_mat(q, 3, 5, 31)
    B = rand_mat(q, 5, 4, 32)
    got = matmul(A, B)
    for i in range(3):
        want = [0] * 4
        for l in range(5):
            for j in range(4):
                want[j] = F.add(want[j], F.mul(int(A.a[i, l]), int(B.a[l, j])))
        assert list(got.a[i]) == want


def test_vecmat_and_stacking():
    F4 = field_for_order(4)
    A = rand_mat(4, 2, 3, 40)
    v = np.array([1, 2], dtype=np.uint8)
    assert list(vecmat(v, A)) == oracle_encode(F4, A.a, v)
    H = hstack(A, A)
    V = vstack(A, A)
    assert H.cols == 6 and V.rows == 4
    F3 = field_for_order(3)
    with pytest.raises(ValueError):
        hstack(A, rand_mat(3, 2, 3, 41))
    assert F3 is not F4


def test_generator_file_round_trip(tmp_path):
    F, M = field_for_order(4), rand_mat(4, 3, 6, 50)
    path = tmp_path / "g.mat"
    write_generator_file(path, F, M, comment="round trip\nsecond line")
    F2, M2 = read_generator_file(path)
    assert F2 is F
    assert M2 == M
    text = path.read_text()
    assert text.startswith("# round trip\n# second line\n4 6 3\n")


def test_generator_file_errors(tmp_path):
    p = tmp_path / "bad.mat"
    p.write_text("")
    with pytest.raises(ValueError, match="empty"):
        read_generator_file(p)
    p.write_text("4 3\n")
    with pytest.raises(ValueError, match="header"):
        read_generator_file(p)
    p.write_text("4 3 1\n0 1\n")
    with pytest.raises(ValueError, match="expected 3 entries"):
        read_generator_file(p)
    p.write_text("4 3 2\n0 1 2\n")
    with pytest.raises(ValueError, match="expected 2 rows"):
        read_generator_file(p)
    p.write_text("4 3 1\n0 x 2\n")
    with pytest.raises(ValueError, match="non-integer"):
        read_generator_file(p)
