"""Exhaustive Plotkin-sum scan over a bounds table, plus coverage stats.

For every ingredient length n in the first half of the table and every
ordered dimension pair (k1, k2) with entries at (q, n, k1) and
(q, n, k2), the guaranteed Plotkin distance min(2*d_low(n,k1),
d_low(n,k2)) is compared against the table entry at (q, 2n, k1+k2).
A shortening post-pass derives the corresponding [2n-1, k1+k2-1]
comparisons (shortening preserves the distance guarantee).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP
from typing import Iterable, List, Optional, Tuple

from .tables import LIMITS, BoundsTable

IMPROVES = "Improves"
MATCHES = "Matches"
BELOW = "Below"
NO_ENTRY = "NoTableEntry"


@dataclass(frozen=True)
class Finding:
    """One scan result: a Plotkin pair versus a table entry.

    length/k are the parameters of the compared code (2n and k1+k2 for
    a direct Plotkin sum; one less each for a shortening-derived row).
    """

    q: int
    length: int
    k: int
    plotkin_d: int
    table_d_low: Optional[int]
    table_d_high: Optional[int]
    classification: str
    n: int
    k1: int
    k2: int


def classify(plotkin_d: int, entry) -> str:
    if entry is None:
        return NO_ENTRY
    d_low, d_high = entry
    if plotkin_d < d_low:
        return BELOW
    if plotkin_d == d_low:
        return MATCHES
    if d_high is None or plotkin_d <= d_high:
        return IMPROVES
    # The guaranteed distance exceeds the recorded nonexistence bound:
    # inconsistent inputs; report conservatively.
    return BELOW


def plotkin_scan(
    T: BoundsTable, q: int, n_range: Optional[Tuple[int, int]] = None
) -> List[Finding]:
    """All Plotkin-pair findings for field order q, sorted by (n, k1, k2)."""
    if q not in LIMITS:
        raise ValueError(f"unsupported field order q={q}")
    half = LIMITS[q] // 2
    if n_range is None:
        lo, hi = 1, half
    else:
        lo, hi = n_range
        if not 1 <= lo <= hi <= half:
            raise ValueError(f"n_range must lie within 1..{half}")
    findings = []
    for n in range(lo, hi + 1):
        ks = T.dims_at(q, n)
        if not ks:
            continue
        for k1 in ks:
            d1 = T.query(q, n, k1)[0]
            for k2 in ks:
                d2 = T.query(q, n, k2)[0]
                pd = min(2 * d1, d2)
                entry = T.query(q, 2 * n, k1 + k2)
                findings.append(
                    Finding(
                        q=q, length=2 * n, k=k1 + k2, plotkin_d=pd,
                        table_d_low=None if entry is None else entry[0],
                        table_d_high=None if entry is None else entry[1],
                        classification=classify(pd, entry),
                        n=n, k1=k1, k2=k2,
                    )
                )
    findings.sort(key=lambda f: (f.n, f.k1, f.k2))
    return findings


def shortened_findings(T: BoundsTable, findings: Iterable[Finding]) -> List[Finding]:
    """Shorten post-processing: compare [2n-1, k1+k2-1] with the same
    guaranteed distance against the table."""
    out = []
    for f in findings:
        length, k = f.length - 1, f.k - 1
        if k < 1:
            continue
        entry = T.query(f.q, length, k)
        out.append(
            Finding(
                q=f.q, length=length, k=k, plotkin_d=f.plotkin_d,
                table_d_low=None if entry is None else entry[0],
                table_d_high=None if entry is None else entry[1],
                classification=classify(f.plotkin_d, entry),
                n=f.n, k1=f.k1, k2=f.k2,
            )
        )
    out.sort(key=lambda f: (f.n, f.k1, f.k2))
    return out


def stats(T: BoundsTable, q: int) -> Tuple[int, int, Decimal]:
    """(total even-length cells, Plotkin-achievable cells, percentage).

    The denominator is structural (all (n, k) with n even up to the
    per-q limit), independent of snapshot sparsity; a cell is
    achievable when some split k = k1 + k2 with entries at length n/2
    guarantees at least the cell's recorded lower bound.
    """
    if q not in LIMITS:
        raise ValueError(f"unsupported field order q={q}")
    limit = LIMITS[q]
    half_count = limit // 2  # number of even lengths <= limit
    total = half_count * (half_count + 1)  # sum of n over even n
    achievable = 0
    for n in range(2, limit + 1, 2):
        ks_half = T.dims_at(q, n // 2)
        if not ks_half:
            continue
        dl = {k: T.query(q, n // 2, k)[0] for k in ks_half}
        for k in range(1, n + 1):
            entry = T.query(q, n, k)
            if entry is None:
                continue
            target = entry[0]
            for k1 in ks_half:
                k2 = k - k1
                if k2 in dl and min(2 * dl[k1], dl[k2]) >= target:
                    achievable += 1
                    break
    if total:
        pct = (Decimal(achievable) * 100 / Decimal(total)).quantize(
            Decimal("0.01"), rounding=ROUND_HALF_UP
        )
    else:
        pct = Decimal("0.00")
    return total, achievable, pct


TSV_HEADER = "q\t2n\tk\tplotkin_d\ttable_d_low\ttable_d_high\tclass\tn\tk1\tk2"


def findings_to_tsv(findings: Iterable[Finding]) -> str:
    lines = [TSV_HEADER]
    for f in findings:
        lines.append(
            "\t".join(
                str(x) if x is not None else "-"
                for x in (
                    f.q, f.length, f.k, f.plotkin_d, f.table_d_low,
                    f.table_d_high, f.classification, f.n, f.k1, f.k2,
                )
            )
        )
    return "\n".join(lines) + "\n"
