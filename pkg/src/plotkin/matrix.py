"""Dense linear algebra over GF(q) on numpy uint8 arrays.

Row operations are vectorized through the field's q x q add/mul lookup
tables, so a row update costs one fancy-indexing pass over the row.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

import numpy as np

from .galois import Field, field_for_order


class Mat:
    """A rows x cols matrix of field-element encodings.

    Treat instances as immutable: operations return new matrices.
    """

    __slots__ = ("field", "a")

    def __init__(self, field: Field, data):
        a = np.array(data, dtype=np.uint8)
        if a.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if a.size and a.max() >= field.q:
            raise ValueError(f"entry {a.max()} out of range for {field}")
        self.field = field
        self.a = np.ascontiguousarray(a)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Mat":
        return cls(field, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls(field, np.eye(n, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def copy(self) -> "Mat":
        return Mat(self.field, self.a.copy())

    def transpose(self) -> "Mat":
        return Mat(self.field, self.a.T)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.field is other.field
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self) -> str:
        return f"Mat({self.field}, shape={self.a.shape})"


def _rref_in_place(field: Field, a: np.ndarray, col_order: Sequence[int]):
    """Gauss-Jordan over the given column scan order; returns pivot cols."""
    add, mul, neg, inv = field.np_tables()
    rows = a.shape[0]
    pivots = []
    r = 0
    for c in col_order:
        if r == rows:
            break
        hit = -1
        for i in range(r, rows):
            if a[i, c]:
                hit = i
                break
        if hit == -1:
            continue
        if hit != r:
            a[[r, hit]] = a[[hit, r]]
        if a[r, c] != 1:
            a[r] = mul[inv[a[r, c]]][a[r]]
        col = a[:, c].copy()
        for i in range(rows):
            if i != r and col[i]:
                a[i] = add[a[i], mul[neg[col[i]]][a[r]]]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Mat) -> Tuple[Mat, int, list]:
    """Reduced row-echelon form: (R, rank, pivot_cols)."""
    a = M.a.copy()
    pivots = _rref_in_place(M.field, a, range(M.cols))
    return Mat(M.field, a), len(pivots), pivots


def rank(M: Mat) -> int:
    return rref(M)[1]


def nullspace(M: Mat) -> Mat:
    """Row basis of {x : M x^T = 0}; cols - rank rows."""
    field = M.field
    R, r, pivots = rref(M)
    n = M.cols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = field.neg(int(R.a[ri, fc]))
    return Mat(field, basis)


def systematic_form(
    G: Mat, preferred_cols: Optional[Sequence[int]] = None
) -> Tuple[Mat, list, int]:
    """Row-reduce G choosing pivots inside preferred_cols first.

    Returns (G_sys, info_cols, rank): restricted to info_cols the first
    `rank` rows of G_sys form the identity.
    """
    n = G.cols
    if preferred_cols is None:
        order = list(range(n))
    else:
        pref = sorted(set(preferred_cols))
        for c in pref:
            if not 0 <= c < n:
                raise ValueError(f"preferred column {c} out of range")
        rest = [c for c in range(n) if c not in set(pref)]
        order = pref + rest
    a = G.a.copy()
    pivots = _rref_in_place(G.field, a, order)
    return Mat(G.field, a), pivots, len(pivots)


def matmul(A: Mat, B: Mat) -> Mat:
    if A.field is not B.field:
        raise ValueError("matrices over different fields")
    if A.cols != B.rows:
        raise ValueError("dimension mismatch")
    field = A.field
    if field.e == 1:
        # prime field: plain integer product reduced mod p
        prod = (A.a.astype(np.int64) @ B.a.astype(np.int64)) % field.p
        return Mat(field, prod.astype(np.uint8))
    add, mul, _, _ = field.np_tables()
    out = np.zeros((A.rows, B.cols), dtype=np.uint8)
    for l in range(A.cols):
        term = mul[A.a[:, l][:, None], B.a[l, :][None, :]]
        out = add[out, term]
    return Mat(field, out)


def matvec(A: Mat, v: np.ndarray) -> np.ndarray:
    return matmul(A, Mat(A.field, v.reshape(-1, 1))).a[:, 0]


def vecmat(v: np.ndarray, A: Mat) -> np.ndarray:
    return matmul(Mat(A.field, np.asarray(v, dtype=np.uint8).reshape(1, -1)), A).a[0]


def hstack(A: Mat, B: Mat) -> Mat:
    if A.field is not B.field:
        raise ValueError("matrices over different fields")
    return Mat(A.field, np.hstack([A.a, B.a]))


def vstack(A: Mat, B: Mat) -> Mat:
    if A.field is not B.field:
        raise ValueError("matrices over different fields")
    return Mat(A.field, np.vstack([A.a, B.a]))


# ---------------------------------------------------------------------------
# Generator-matrix file format: first line "q n k", then k rows of n
# space-separated element encodings.  '#' starts a comment.
# ---------------------------------------------------------------------------


def read_generator_file(path) -> Tuple[Field, Mat]:
    rows = []
    header = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            vals = line.split()
            try:
                nums = [int(v) for v in vals]
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: non-integer token") from exc
            if header is None:
                if len(nums) != 3:
                    raise ValueError(f"{path}:{lineno}: header must be 'q n k'")
                header = nums
            else:
                if len(nums) != header[1]:
                    raise ValueError(
                        f"{path}:{lineno}: expected {header[1]} entries, got {len(nums)}"
                    )
                rows.append(nums)
    if header is None:
        raise ValueError(f"{path}: empty generator file")
    q, n, k = header
    if len(rows) != k:
        raise ValueError(f"{path}: expected {k} rows, got {len(rows)}")
    field = field_for_order(q)
    return field, Mat(field, np.array(rows, dtype=np.uint8).reshape(k, n))


def write_generator_file(path, field: Field, M: Mat, comment: Optional[str] = None):
    with open(path, "w", encoding="utf-8") as fh:
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        fh.write(f"{field.q} {M.cols} {M.rows}\n")
        for row in M.a:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")
