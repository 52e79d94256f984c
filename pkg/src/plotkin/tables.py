"""Best-known-linear-code bounds tables.

Snapshot format: plain text, one entry per line,

    q n k d_low d_high

with ``-`` for an unknown upper bound and ``#`` starting a comment.
Fields are single-space separated, LF line endings, entries unique per
(q, n, k).
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

# Per-q length/dimension limits of the table of record.
LIMITS = {2: 256, 3: 243, 4: 256, 5: 130, 7: 100, 8: 130, 9: 130}

Entry = Tuple[int, Optional[int]]  # (d_low, d_high)


class TableError(ValueError):
    """Malformed or inconsistent snapshot data."""


class BoundsTable:
    """Map (q, n, k) -> (d_low, d_high or None)."""

    def __init__(self, entries: Optional[Dict[Tuple[int, int, int], Entry]] = None):
        self.entries: Dict[Tuple[int, int, int], Entry] = {}
        if entries:
            for (q, n, k), (lo, hi) in entries.items():
                self.add(q, n, k, lo, hi)

    def add(self, q: int, n: int, k: int, d_low: int, d_high: Optional[int] = None,
            where: str = "") -> None:
        loc = f"{where}: " if where else ""
        if q not in LIMITS:
            raise TableError(f"{loc}unsupported field order q={q}")
        if not 1 <= k <= n <= LIMITS[q]:
            raise TableError(f"{loc}require 1 <= k <= n <= {LIMITS[q]}, got n={n} k={k}")
        if d_low < 1:
            raise TableError(f"{loc}d_low must be >= 1, got {d_low}")
        singleton = n - k + 1
        if d_low > singleton:
            raise TableError(f"{loc}d_low={d_low} violates Singleton bound {singleton}")
        if d_high is not None:
            if d_high < d_low:
                raise TableError(f"{loc}d_high={d_high} < d_low={d_low}")
            if d_high > singleton:
                raise TableError(f"{loc}d_high={d_high} violates Singleton bound {singleton}")
        if (q, n, k) in self.entries:
            raise TableError(f"{loc}duplicate entry ({q}, {n}, {k})")
        self.entries[(q, n, k)] = (d_low, d_high)

    def query(self, q: int, n: int, k: int) -> Optional[Entry]:
        return self.entries.get((q, n, k))

    def dims_at(self, q: int, n: int):
        """Sorted dimensions k with an entry at (q, n, k)."""
        return sorted(k for (qq, nn, k) in self.entries if qq == q and nn == n)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoundsTable) and self.entries == other.entries


def load_snapshot(path) -> BoundsTable:
    table = BoundsTable()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 5:
                raise TableError(f"{path}:{lineno}: expected 'q n k d_low d_high'")
            try:
                q, n, k, d_low = (int(x) for x in parts[:4])
                d_high = None if parts[4] == "-" else int(parts[4])
            except ValueError as exc:
                raise TableError(f"{path}:{lineno}: non-integer field") from exc
            table.add(q, n, k, d_low, d_high, where=f"{path}:{lineno}")
    return table


def save_snapshot(path, table: BoundsTable) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for (q, n, k) in sorted(table.entries):
            lo, hi = table.entries[(q, n, k)]
            fh.write(f"{q} {n} {k} {lo} {'-' if hi is None else hi}\n")
