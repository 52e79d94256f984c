#!/usr/bin/env python3
"""Walkthrough: build small codes, take their Plotkin sum, and watch
the distance formula d = min(2*d1, d2) hold.

Run from the repository root:

    python3 demos/01_plotkin_basics.py
"""

import numpy as np

from plotkin import (
    Mat,
    field_create,
    from_generator,
    min_distance_exhaustive,
    plotkin_sum,
    weight_distribution,
)


def main() -> None:
    F2 = field_create(2)

    # C1: the [4,3] even-weight code (d = 2)
    G1 = Mat(F2, [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    C1 = from_generator(F2, G1)

    # C2: the [4,1] repetition code (d = 4)
    G2 = Mat(F2, [[1, 1, 1, 1]])
    C2 = from_generator(F2, G2)

    d1 = min_distance_exhaustive(C1).upper
    d2 = min_distance_exhaustive(C2).upper
    print(f"C1 = {C1.params()} with d = {d1}")
    print(f"C2 = {C2.params()} with d = {d2}")

    # (u | u+v): length doubles, dimensions add
    C = plotkin_sum(C1, C2)
    d = min_distance_exhaustive(C).upper
    print(f"plotkin(C1, C2) = {C.params()} with d = {d}")
    print(f"formula min(2*d1, d2) = min({2 * d1}, {d2}) = {min(2 * d1, d2)}")
    assert d == min(2 * d1, d2)

    # this particular sum is the [8,4,4] extended Hamming code
    counts = weight_distribution(C)
    print("weight distribution:", {w: int(c) for w, c in enumerate(counts) if c})

    # the structure is visible in the generator matrix: [G1 | G1] over [0 | G2]
    print("generator matrix of the sum:")
    print(np.array(C.G.a))


if __name__ == "__main__":
    main()
