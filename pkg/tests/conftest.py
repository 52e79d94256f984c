"""Shared test helpers: slow, independent reference implementations.

The oracles here deliberately avoid the package's vectorized paths.
Encoding and minimum-distance checks go through scalar field ops and
plain Python loops, so a bug in the numpy/numba machinery cannot hide
in both the implementation and its test.
"""

import itertools

import numpy as np

from plotkin import field_for_order


def oracle_encode(field, G, msg):
    """Row-combination encode using only scalar field arithmetic."""
    k = len(G)
    n = len(G[0])
    out = [0] * n
    for i in range(k):
        c = msg[i]
        if c == 0:
            continue
        for j in range(n):
            out[j] = field.add(out[j], field.mul(c, int(G[i][j])))
    return out


def oracle_codewords(field, G):
    """Every codeword of the span of G's rows, as lists of encodings."""
    k = len(G)
    for msg in itertools.product(range(field.q), repeat=k):
        yield oracle_encode(field, G, msg)


def oracle_min_distance(field, G):
    """Brute-force minimum distance over all nonzero messages."""
    best = None
    for msg in itertools.product(range(field.q), repeat=len(G)):
        if not any(msg):
            continue
        w = sum(1 for v in oracle_encode(field, G, msg) if v)
        if best is None or w < best:
            best = w
    return best


def oracle_weight_distribution(field, G, n):
    counts = [0] * (n + 1)
    for word in oracle_codewords(field, G):
        counts[sum(1 for v in word if v)] += 1
    return counts


def random_code(q, n, k, seed):
    """A seeded random [n, k] code (full rank by construction retry)."""
    from plotkin import Mat, from_generator

    field = field_for_order(q)
    rng = np.random.default_rng(seed)
    while True:
        rows = rng.integers(0, q, size=(k, n)).astype(np.uint8)
        code = from_generator(field, Mat(field, rows))
        if code.k == k:
            return code
