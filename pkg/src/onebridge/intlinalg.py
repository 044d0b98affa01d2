"""Exact integer linear algebra: circulants, Smith normal form, determinants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


class IntMatrix:
    """Dense integer matrix with unbounded entries (Python ints)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = [list(map(int, r)) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows, self.cols = len(rows), width
        self.entries = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries])

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.entries]


def circulant(first_row: Sequence[int]) -> IntMatrix:
    """Square matrix whose row i+1 is row i shifted cyclically right by one."""
    row = [int(v) for v in first_row]
    n = len(row)
    if n == 0:
        raise ValueError("circulant needs a nonempty first row")
    return IntMatrix([[row[(j - i) % n] for j in range(n)] for i in range(n)])


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant; the empty matrix has determinant 1."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def _nearest_quotient(a: int, b: int) -> int:
    """q minimizing |a - q*b|."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def smith_normal_form(m: IntMatrix) -> tuple[list[int], int]:
    """Invariant factors d_1 | d_2 | ... of ``m`` and its rank.

    Returns min(rows, cols) diagonal entries, nonnegative, zeros last;
    the rank is the number of nonzero entries.  Only unimodular row and
    column operations are used.  Every round moves the smallest nonzero
    entry of the remaining block to the pivot position and reduces its
    row and column by nearest-integer quotients.
    """
    a = m.tolist()
    rows, cols = m.rows, m.cols
    diag = []
    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = a[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, pi, pj = best
            a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for r in a:
                    r[t], r[pj] = r[pj], r[t]
            p = a[t][t]
            at = a[t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = _nearest_quotient(a[i][t], p)
                    ai = a[i]
                    for j in range(t, cols):
                        ai[j] -= q * at[j]
            for j in range(t + 1, cols):
                if at[j]:
                    q = _nearest_quotient(at[j], p)
                    for r in a[t:]:
                        r[j] -= q * r[t]
            if any(a[i][t] for i in range(t + 1, rows)) or any(at[t + 1:]):
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            for j in range(t, cols):
                at[j] += a[bad][j]
        if best is None:
            break
        diag.append(abs(a[t][t]))
    rank = len(diag)
    diag.extend([0] * (min(rows, cols) - rank))
    return diag, rank


@dataclass(frozen=True)
class HomologyGroup:
    """Z^free_rank plus Z/f_1 + ... + Z/f_k with f_1 | f_2 | ... and f_i >= 2."""

    free_rank: int
    invariant_factors: tuple = field(default=())

    def __post_init__(self):
        fs = tuple(int(f) for f in self.invariant_factors)
        if self.free_rank < 0 or any(f < 2 for f in fs):
            raise ValueError("invalid homology group data")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "invariant_factors", fs)

    @property
    def torsion_order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self):
        """Group order, or None when the group is infinite."""
        return self.torsion_order if self.is_finite else None

    def __str__(self):
        parts = [f"Z/{f}" for f in self.invariant_factors]
        if self.free_rank == 1:
            parts.insert(0, "Z")
        elif self.free_rank > 1:
            parts.insert(0, f"Z^{self.free_rank}")
        return " \u2295 ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "invariant_factors": [str(f) for f in self.invariant_factors],
            "order": None if not self.is_finite else str(self.torsion_order),
            "torsion_order": str(self.torsion_order),
            "text": str(self),
        }


def group_from_presentation(m: IntMatrix) -> HomologyGroup:
    """Abelian group with ``m.cols`` generators and one relation per row."""
    factors, rank = smith_normal_form(m)
    return HomologyGroup(m.cols - rank, tuple(f for f in factors[:rank] if f > 1))
