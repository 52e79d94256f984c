"""Linear codes over GF(q) and the constructions used by the toolkit:
Plotkin sum, shorten, puncture, extend, dual, cyclic and BCH codes.

Positions in user-facing interfaces are 1-based (matching the Magma
convention ``ShortenCode(C, {62..64})``); internal storage is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from . import matrix as mx
from .galois import Field, Poly, field_for_order, minimal_polynomial, cyclotomic_coset
from .matrix import Mat

from math import gcd


@dataclass(frozen=True)
class DistanceInfo:
    """What is known about a code's minimum distance.

    kind is 'exact' (lower == upper), 'bounds' (lower known, upper
    optional) or 'unknown' (nothing known).
    """

    lower: Optional[int] = None
    upper: Optional[int] = None

    @classmethod
    def exact(cls, d: int) -> "DistanceInfo":
        return cls(d, d)

    @classmethod
    def bounds(cls, lower: int, upper: Optional[int] = None) -> "DistanceInfo":
        if upper is not None and upper < lower:
            raise ValueError(f"bounds {lower} > {upper}")
        return cls(lower, upper)

    @classmethod
    def unknown(cls) -> "DistanceInfo":
        return cls(None, None)

    @property
    def kind(self) -> str:
        if self.lower is None:
            return "unknown"
        if self.upper == self.lower:
            return "exact"
        return "bounds"

    def __str__(self) -> str:
        if self.kind == "unknown":
            return "d unknown"
        if self.kind == "exact":
            return f"d={self.lower}"
        if self.upper is None:
            return f"d>={self.lower}"
        return f"{self.lower}<=d<={self.upper}"


class LinearCode:
    """An [n, k] linear code given by a full-rank generator matrix.

    The stored generator is in reduced row-echelon form; dependent rows
    of the input are dropped.  Instances are immutable.
    """

    def __init__(self, field: Field, G: Mat, d_info: Optional[DistanceInfo] = None):
        if G.field is not field:
            raise ValueError("generator field mismatch")
        if G.cols < 1:
            raise ValueError("generator must have at least one column")
        R, k, _ = mx.rref(G)
        self.field = field
        self.G = Mat(field, R.a[:k])
        self.n = G.cols
        self.k = k
        self.d_info = d_info if d_info is not None else DistanceInfo.unknown()

    def codewords(self) -> Iterator[np.ndarray]:
        """All q^k codewords (small codes only; used by invariants)."""
        q = self.field.q
        if q ** self.k > 1 << 20:
            raise ValueError("code too large to enumerate")
        msg = np.zeros(self.k, dtype=np.uint8)
        yield np.zeros(self.n, dtype=np.uint8)
        total = q ** self.k
        for idx in range(1, total):
            t = idx
            for i in range(self.k):
                msg[i] = t % q
                t //= q
            yield mx.vecmat(msg, self.G)

    def encode(self, message) -> np.ndarray:
        return mx.vecmat(np.asarray(message, dtype=np.uint8), self.G)

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=np.uint8).reshape(1, -1)
        if w.shape[1] != self.n:
            return False
        stacked = mx.vstack(self.G, Mat(self.field, w))
        return mx.rank(stacked) == self.k

    def params(self) -> str:
        return f"[{self.n},{self.k}]"

    def __repr__(self) -> str:
        return f"LinearCode(GF({self.field.q}), [{self.n},{self.k}], {self.d_info})"


def weight(word) -> int:
    return int(np.count_nonzero(np.asarray(word)))


def from_generator(field: Field, rows: Mat, d_info: Optional[DistanceInfo] = None) -> LinearCode:
    """LinearCode from (possibly dependent) generator rows."""
    if rows.rows == 0 or rows.cols == 0:
        raise ValueError("empty generator matrix")
    return LinearCode(field, rows, d_info)


def _positions(C: LinearCode, S: Iterable[int]) -> list:
    pos = sorted(set(int(s) for s in S))
    if not pos:
        raise ValueError("empty position set")
    if pos[0] < 1 or pos[-1] > C.n:
        raise ValueError(f"positions {pos} out of range 1..{C.n}")
    if len(pos) >= C.n:
        raise ValueError("cannot remove every position")
    return [p - 1 for p in pos]


def plotkin_sum(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """The (u | u+v) construction: {(u, u+v) : u in C1, v in C2}.

    Parameters [2n, k1+k2, min(2*d1, d2)]; the distance is propagated
    exactly when both inputs are exact, as bounds when both have at
    least lower bounds.
    """
    if C1.field is not C2.field:
        raise ValueError("Plotkin sum requires codes over the same field")
    if C1.n != C2.n:
        raise ValueError(f"length mismatch: {C1.n} != {C2.n}")
    top = mx.hstack(C1.G, C1.G)
    bot = mx.hstack(Mat(C1.field, np.zeros_like(C2.G.a)), C2.G)
    G = mx.vstack(top, bot)
    d1, d2 = C1.d_info, C2.d_info
    if d1.kind == "exact" and d2.kind == "exact":
        info = DistanceInfo.exact(min(2 * d1.lower, d2.lower))
    elif d1.lower is not None and d2.lower is not None:
        hi = None
        if d1.upper is not None and d2.upper is not None:
            hi = min(2 * d1.upper, d2.upper)
        info = DistanceInfo.bounds(min(2 * d1.lower, d2.lower), hi)
    else:
        info = DistanceInfo.unknown()
    return LinearCode(C1.field, G, info)


def shorten(C: LinearCode, S: Iterable[int]) -> LinearCode:
    """Codewords vanishing on S, with the S coordinates deleted.

    S is 1-based.  The dimension is computed from the actual rank, so
    shortening on non-information positions never mislabels k.
    """
    cols = _positions(C, S)
    sub = Mat(C.field, C.G.a[:, cols])
    msgs = mx.nullspace(sub.transpose())  # messages m with m . G_S = 0
    if msgs.rows == 0:
        raise ValueError("shortening leaves only the zero code")
    gen = mx.matmul(msgs, C.G)
    keep = [c for c in range(C.n) if c not in set(cols)]
    gen = Mat(C.field, gen.a[:, keep])
    info = (
        DistanceInfo.bounds(C.d_info.lower)
        if C.d_info.lower is not None
        else DistanceInfo.unknown()
    )
    return LinearCode(C.field, gen, info)


def puncture(C: LinearCode, S: Iterable[int]) -> LinearCode:
    """Delete the 1-based coordinates S from every codeword."""
    cols = _positions(C, S)
    keep = [c for c in range(C.n) if c not in set(cols)]
    gen = Mat(C.field, C.G.a[:, keep])
    lo = C.d_info.lower
    if lo is not None and lo > len(cols):
        info = DistanceInfo.bounds(lo - len(cols), C.d_info.upper)
    else:
        info = DistanceInfo.unknown()
    return LinearCode(C.field, gen, info)


def extend(C: LinearCode) -> LinearCode:
    """Append an overall parity coordinate: every codeword sums to zero."""
    F = C.field
    parity = np.zeros((C.k, 1), dtype=np.uint8)
    for i in range(C.k):
        s = 0
        for v in C.G.a[i]:
            s = F.add(s, int(v))
        parity[i, 0] = F.neg(s)
    gen = Mat(F, np.hstack([C.G.a, parity]))
    lo = C.d_info.lower
    if lo is not None:
        hi = C.d_info.upper + 1 if C.d_info.upper is not None else None
        info = DistanceInfo.bounds(lo, hi)
    else:
        info = DistanceInfo.unknown()
    return LinearCode(F, gen, info)


def dual(C: LinearCode) -> LinearCode:
    """The [n, n-k] dual code, generated by the nullspace of G."""
    ns = mx.nullspace(C.G)
    if ns.rows == 0:
        # dual of the full space: the zero code has no generator; keep a
        # single zero row so the object stays well-formed with k = 0.
        return LinearCode(C.field, Mat(C.field, np.zeros((1, C.n), dtype=np.uint8)))
    return LinearCode(C.field, ns)


def cyclic_code(F: Field, n: int, g: Poly) -> LinearCode:
    """Cyclic code of length n generated by g(x), which must divide x^n - 1."""
    if g.field is not F:
        raise ValueError("generator polynomial over the wrong field")
    if not g.is_monic():
        raise ValueError("generator polynomial must be monic")
    if g.degree >= n:
        raise ValueError(f"deg g = {g.degree} leaves no information symbols")
    xn1 = Poly(F, [F.neg(1)] + [0] * (n - 1) + [1])
    if not (xn1 % g).is_zero():
        raise ValueError(f"g(x) does not divide x^{n} - 1 over {F}")
    k = n - g.degree
    rows = np.zeros((k, n), dtype=np.uint8)
    for i in range(k):
        for j, c in enumerate(g.coeffs):
            rows[i, i + j] = c
    return LinearCode(F, Mat(F, rows))


def bch_code(F: Field, n: int, delta: int, b: int = 1) -> LinearCode:
    """Narrow-sense-by-default BCH code of length n, designed distance delta.

    g(x) is the lcm of the minimal polynomials of alpha^b..alpha^(b+delta-2),
    alpha an element of order n in GF(q^m); d_info carries the BCH bound.
    """
    q = F.q
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    if not 2 <= delta <= n:
        raise ValueError(f"designed distance {delta} out of range 2..{n}")
    m = 1
    t = q % n
    while t != 1:
        t = t * q % n
        m += 1
    if F.e == 1:
        from .galois import field_create

        ext = field_create(F.p, m)
    else:
        ext = F.extension(m)
    step = (ext.q - 1) // n
    seen = set()
    g = Poly.one(F)
    for r in range(b, b + delta - 1):
        e = r % n
        if e in seen:
            continue
        coset = cyclotomic_coset(n, q, e)
        seen.update(coset)
        g = g * minimal_polynomial(F, ext, (coset[0] * step) % (ext.q - 1))
    code = cyclic_code(F, n, g)
    return LinearCode(F, code.G, DistanceInfo.bounds(delta, n))


def load_code(path) -> LinearCode:
    field, M = mx.read_generator_file(path)
    return from_generator(field, M)


def save_code(path, C: LinearCode, comment: Optional[str] = None) -> None:
    mx.write_generator_file(path, C.field, C.G, comment)
