"""Exact and modular rank of integer matrices.

``rank_exact`` is fraction-free (Bareiss) elimination over Python ints.
``rank_modular`` eliminates over GF(p); for p < 2**31 it runs on int64
numpy arrays, otherwise on Python ints.  Rank mod p never exceeds the
rational rank, so a modular rank is a certified lower bound.
"""

from __future__ import annotations

import random
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from sympy import isprime, nextprime

Matrix = Sequence[Sequence[int]]

CERTIFY_PRIME_RANGE = (2**30, 2**31)
_INT64_PRIME_LIMIT = 2**31


class NotPrimeError(ValueError):
    pass


def rank_exact(M: Matrix) -> int:
    """Rank over Q by Bareiss elimination.

    Each row keeps only its not-yet-eliminated columns, and rows that
    become zero are dropped, so the working set shrinks as we go.
    """
    rows = [list(map(int, r)) for r in M if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for _ in range(ncols):
        pivot_at = None
        best = None
        for i, row in enumerate(rows):
            v = row[0]
            if v and (best is None or abs(v) < best):
                pivot_at, best = i, abs(v)
                if best == 1:
                    break
        if pivot_at is None:
            rows = [row[1:] for row in rows]
            continue
        prow = rows.pop(pivot_at)
        piv = prow[0]
        tail = prow[1:]
        new_rows = []
        for row in rows:
            a = row[0]
            if a:
                new = [(piv * x - a * y) // prev for x, y in zip(row[1:], tail)]
            else:
                new = [(piv * x) // prev for x in row[1:]]
            if any(new):
                new_rows.append(new)
        rows = new_rows
        prev = piv
        rank += 1
        if not rows:
            break
    return rank


def rank_modular(M: Matrix, p: int) -> int:
    """Rank of M reduced modulo the prime p."""
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    return rank_mod_unchecked(M, p)


def rank_mod_unchecked(M: Matrix, p: int) -> int:
    if p < _INT64_PRIME_LIMIT:
        A = np.array([[int(v) % p for v in row] for row in M], dtype=np.int64)
        if A.ndim != 2 or A.size == 0:
            return 0
        return _rank_mod_numpy(A, p)
    return _rank_mod_python([[int(v) % p for v in row] for row in M], p)


def _rank_mod_numpy(A: np.ndarray, p: int) -> int:
    nrows, ncols = A.shape
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(A[rank:, c])
        if nz.size == 0:
            continue
        k = rank + int(nz[0])
        if k != rank:
            A[[rank, k]] = A[[k, rank]]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank, c:] = (A[rank, c:] * inv) % p
        below = rank + 1 + np.flatnonzero(A[rank + 1:, c])
        if below.size:
            factors = A[below, c][:, None]
            # entries < p < 2**31, so the product stays below 2**62
            A[np.ix_(below, np.arange(c, ncols))] = (
                A[below, c:] - factors * A[rank, c:][None, :]) % p
        rank += 1
    return rank


def _rank_mod_python(rows: list[list[int]], p: int) -> int:
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        k = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if k is None:
            continue
        rows[rank], rows[k] = rows[k], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [(v * inv) % p for v in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            a = rows[i][c]
            if a:
                rows[i] = [(x - a * y) % p for x, y in zip(rows[i], prow)]
        rank += 1
    return rank


def random_primes(count: int, rng: random.Random | None = None,
                  lo: int = CERTIFY_PRIME_RANGE[0],
                  hi: int = CERTIFY_PRIME_RANGE[1]) -> list[int]:
    """Distinct random primes in (lo, hi)."""
    rng = rng or random.Random()
    out: list[int] = []
    while len(out) < count:
        p = nextprime(rng.randrange(lo + 1, hi))
        if p < hi and p not in out:
            out.append(p)
    return out


def split_blocks(nrows: int, ncols: int,
                 entries: Sequence[tuple[int, int]]) -> list[tuple[list[int], list[int]]]:
    """Connected blocks of a sparse matrix pattern.

    Rows and columns are nodes of a bipartite graph joined by nonzero
    entries; the rank of the matrix is the sum of the ranks of the
    blocks.  Returns ``(row_indices, col_indices)`` pairs for blocks that
    have at least one entry.
    """
    if not entries:
        return []
    r = np.fromiter((e[0] for e in entries), dtype=np.int64, count=len(entries))
    c = np.fromiter((e[1] for e in entries), dtype=np.int64, count=len(entries))
    n = nrows + ncols
    graph = coo_matrix((np.ones(len(entries), dtype=np.int8), (r, nrows + c)), shape=(n, n))
    ncomp, labels = connected_components(graph, directed=False)
    blocks: dict[int, tuple[list[int], list[int]]] = {}
    for i in range(nrows):
        blocks.setdefault(int(labels[i]), ([], []))[0].append(i)
    for j in range(ncols):
        blocks.setdefault(int(labels[nrows + j]), ([], []))[1].append(j)
    return [b for b in blocks.values() if b[0] and b[1]]
