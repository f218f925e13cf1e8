"""Exact arithmetic over Z_n: permutations, Smith normal form and kernel counting.

Matrices are plain lists of lists of Python ints. Nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def is_unit(a: int, n: int) -> bool:
    return gcd(a % n, n) == 1


def inverse_mod(a: int, n: int) -> int:
    """Multiplicative inverse of ``a`` modulo ``n`` (raises ValueError if none)."""
    return pow(a % n, -1, n)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}`` stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j] for j in other.images))

    def __pow__(self, k: int) -> "Permutation":
        p = Permutation.identity(len(self)) if k >= 0 else None
        if k < 0:
            return self.inverse() ** (-k)
        base = self
        while k:
            if k & 1:
                p = p * base
            base = base * base
            k >>= 1
        return p

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        """Smallest N >= 1 with self**N == id (lcm of cycle lengths)."""
        seen = [False] * len(self.images)
        result = 1
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.images[i]
                length += 1
            result = result * length // gcd(result, length)
        return result

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.images]


def smith_normal_form(M: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix.

    ``r`` is the rank over Q; the zero matrix (or an empty one) gives ``[]``.
    Uses unimodular row and column operations with a smallest-pivot strategy.
    """
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pick the smallest nonzero entry of the trailing block as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]

        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, cols):
                            Ai[j] -= q * At[j]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for i in range(t, rows):
                            A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        done = False
            if not done:
                # a remainder survived: move the smallest one into the pivot
                best = (abs(p), t, t)
                for i in range(t + 1, rows):
                    if A[i][t] and abs(A[i][t]) < best[0]:
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, cols):
                    if A[t][j] and abs(A[t][j]) < best[0]:
                        best = (abs(A[t][j]), t, j)
                _, bi, bj = best
                if bi != t:
                    A[t], A[bi] = A[bi], A[t]
                if bj != t:
                    for row in A:
                        row[t], row[bj] = row[bj], row[t]
                continue
            # pivot row/column are clear; enforce divisibility of the rest
            p = A[t][t]
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            At, Ab = A[t], A[bad]
            for j in range(t, cols):
                At[j] += Ab[j]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def rank_mod_p(M: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the field Z_p by Gaussian elimination (``p`` prime)."""
    A = [[v % p for v in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [v * inv % p for v in A[rank]]
        for i in range(rows):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def count_homogeneous_solutions(M: Sequence[Sequence[int]], n: int, ncols: int | None = None) -> int:
    """Number of ``x in (Z_n)^v`` with ``M x = 0 (mod n)``.

    Computed as ``n^(v-r) * prod(gcd(d_i, n))`` from the invariant factors of
    the integer lift of ``M`` with entries reduced to ``[0, n)``. ``ncols``
    gives ``v`` when ``M`` has no rows.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if ncols is None:
        if not M:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(M[0])
    reduced = [[v % n for v in row] for row in M]
    factors = smith_normal_form(reduced)
    count = n ** (ncols - len(factors))
    for d in factors:
        count *= gcd(d, n)
    return count
