#!/usr/bin/env python3
"""Regenerate the fixture ingredient matrices under fixtures/.

Two kinds of ingredient files:

* genuine constructions — the GF(3) dimension-32 ingredients come from
  puncturing a self-dual [64,32,18] bordered quadratic-residue double
  circulant code (p = 31), giving [63,32,17] and [62,32,16];
* parameter placeholders — ingredients whose best-known constructions
  depend on unpublished table data are seeded random full-rank codes
  with the right (n, k); their distances come from the bounds snapshot,
  not from the matrix.

Deterministic: running this script always reproduces the same files.
"""

import os
import sys

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from plotkin import codes as cd  # noqa: E402
from plotkin import galois as g  # noqa: E402
from plotkin.matrix import Mat  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def qdc64() -> cd.LinearCode:
    """Self-dual [64,32,18] bordered QR double circulant code over GF(3)."""
    F3 = g.field_create(3)
    p = 31
    qr = {pow(i, 2, p) for i in range(1, p)}
    a, b, c, alpha, beta, gamma = 2, 2, 1, 2, 2, 1
    first = [a if j == 0 else (b if j in qr else c) for j in range(p)]
    R = np.array([[first[(j - i) % p] for j in range(p)] for i in range(p)],
                 dtype=np.uint8)
    M = np.zeros((p + 1, p + 1), dtype=np.uint8)
    M[0, 0] = alpha
    M[0, 1:] = beta
    M[1:, 0] = gamma
    M[1:, 1:] = R
    G = np.hstack([np.eye(p + 1, dtype=np.uint8), M])
    return cd.from_generator(F3, Mat(F3, G))


def placeholder(q: int, n: int, k: int, seed: int) -> cd.LinearCode:
    F = g.field_for_order(q)
    rng = np.random.default_rng(seed)
    while True:
        G = Mat(F, rng.integers(0, q, size=(k, n)).astype(np.uint8))
        C = cd.from_generator(F, G)
        if C.k == k:
            return C


def main() -> None:
    os.makedirs(FIXTURES, exist_ok=True)

    base = qdc64()
    genuine = {
        "ing_3_63_32.mat": (
            cd.puncture(base, {64}),
            "genuine: [64,32,18] QR double circulant punctured once -> [63,32,17]",
        ),
        "ing_3_62_32.mat": (
            cd.puncture(base, {63, 64}),
            "genuine: [64,32,18] QR double circulant punctured twice -> [62,32,16]",
        ),
    }
    for name, (code, note) in genuine.items():
        cd.save_code(os.path.join(FIXTURES, name), code, comment=note)
        print(f"{name}: {code.params()} ({note})")

    placeholders = [
        ("ing_3_62_46.mat", 3, 62, 46),
        ("ing_3_63_47.mat", 3, 63, 47),
        ("ing_4_52_38.mat", 4, 52, 38),
        ("ing_4_52_25.mat", 4, 52, 25),
        ("ing_4_53_39.mat", 4, 53, 39),
        ("ing_4_53_26.mat", 4, 53, 26),
        ("ing_4_54_40.mat", 4, 54, 40),
        ("ing_4_54_27.mat", 4, 54, 27),
    ]
    for i, (name, q, n, k) in enumerate(placeholders):
        code = placeholder(q, n, k, seed=1000 + i)
        note = (
            f"parameter placeholder: a random [{n},{k}] code over GF({q}); "
            "the ingredient distance is taken from the bounds snapshot, "
            "not from this matrix"
        )
        cd.save_code(os.path.join(FIXTURES, name), code, comment=note)
        print(f"{name}: {code.params()} (placeholder)")


if __name__ == "__main__":
    main()
