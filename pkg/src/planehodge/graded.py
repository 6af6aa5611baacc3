"""Graded pieces of the Jacobian ideal and Milnor algebra dimensions.

The degree-r piece of J_f = (f_x, f_y, f_z) is the image of

    S_{r-N+1}^3 -> S_r,   (a, b, c) |-> a*f_x + b*f_y + c*f_z,

so dim M(f)_r = dim S_r - rank of that map.  Ranks are computed block by
block: the bipartite graph of monomials and generator columns usually
splits into several components (any monomial symmetry of f shows up this
way), and each block is eliminated on its own.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Sequence

from .linalg import (
    NotPrimeError,
    rank_exact,
    rank_mod_unchecked,
    random_primes,
    split_blocks,
)
from .poly import Monomial, Polynomial, degree_check, monomials

MODES = ("exact", "modular", "certified")
DEFAULT_WINDOW = 3
DEFAULT_PRIME_COUNT = 3


class NotHomogeneousError(ValueError):
    pass


class StabilizationError(RuntimeError):
    """No stable tail of the Hilbert function was seen up to r_max."""


def dim_S(r: int) -> int:
    """Dimension of the degree-r part of C[x, y, z]."""
    return comb(r + 2, 2) if r >= 0 else 0


def curve_degree(f: Polynomial) -> int:
    N = degree_check(f)
    if N is None:
        raise NotHomogeneousError("polynomial is zero or not homogeneous")
    if N <= 1:
        raise NotHomogeneousError(f"curve degree must be at least 2, got {N}")
    return N


def integer_partials(f: Polynomial) -> tuple[dict[Monomial, int], ...]:
    """Partial derivatives of f with denominators cleared.

    Scaling f by a nonzero constant does not change J_f.
    """
    g = Polynomial(f.integer_terms())
    out = []
    for i in range(3):
        out.append({m: int(c) for m, c in g.derivative(i).terms.items()})
    return tuple(out)


@dataclass
class GradedMap:
    """Matrix of S_{r-N+1}^3 -> S_r in the monomial bases.

    Rows are degree-r monomials in decreasing grevlex order.  Column
    ``g * len(source) + k`` holds the coefficients of
    ``source[k] * partial_g(f)``.  Columns are stored sparsely.
    """

    target_degree: int
    N: int
    rows: list[Monomial]
    source: list[Monomial]
    columns: list[dict[int, int]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    @property
    def matrix(self) -> list[list[int]]:
        out = [[0] * len(self.columns) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    @cached_property
    def blocks(self) -> list[tuple[list[int], list[int]]]:
        entries = [(i, j) for j, col in enumerate(self.columns) for i in col]
        return split_blocks(len(self.rows), len(self.columns), entries)

    def block_matrices(self):
        for row_ids, col_ids in self.blocks:
            where = {r: k for k, r in enumerate(row_ids)}
            dense = [[0] * len(col_ids) for _ in row_ids]
            for k, j in enumerate(col_ids):
                for i, v in self.columns[j].items():
                    dense[where[i]][k] = v
            yield dense


def build_graded_map(f: Polynomial, r: int, partials=None) -> GradedMap:
    N = curve_degree(f)
    if partials is None:
        partials = integer_partials(f)
    rows = monomials(r)
    index = {m: i for i, m in enumerate(rows)}
    source = monomials(r - N + 1)
    columns = []
    for d in partials:
        for m in source:
            columns.append({index[m * t]: c for t, c in d.items()})
    return GradedMap(r, N, rows, source, columns)


@dataclass
class RankOutcome:
    rank: int
    mode: str
    prime_ranks: dict[int, int] = field(default_factory=dict)
    fallback: bool = False


def graded_rank(gm: GradedMap, mode: str = "certified",
                primes: Sequence[int] | None = None) -> RankOutcome:
    """Rank of a graded map.

    ``modular`` uses ``primes[0]``.  ``certified`` computes the rank at
    every given prime and accepts it when all agree; otherwise the exact
    rank is computed and the disagreement is recorded as a fallback.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "exact":
        return RankOutcome(sum(rank_exact(b) for b in gm.block_matrices()), mode)
    if not primes:
        raise ValueError(f"{mode} mode needs at least one prime")
    if mode == "modular":
        primes = primes[:1]
    blocks = list(gm.block_matrices())
    ranks = {p: sum(rank_mod_unchecked(b, p) for b in blocks) for p in primes}
    values = set(ranks.values())
    if len(values) == 1:
        return RankOutcome(values.pop(), mode, ranks)
    return RankOutcome(sum(rank_exact(b) for b in blocks), mode, ranks, fallback=True)


def _check_primes(primes: Sequence[int]) -> list[int]:
    from sympy import isprime

    out = []
    for p in primes:
        if not isprime(p):
            raise NotPrimeError(f"{p} is not prime")
        if p not in out:
            out.append(int(p))
    return out


def choose_primes(mode: str, primes: Sequence[int] | None = None,
                  count: int = DEFAULT_PRIME_COUNT,
                  seed: int | None = 0) -> list[int]:
    if mode == "exact":
        return []
    if primes:
        return _check_primes(primes)
    n = 1 if mode == "modular" else count
    return random_primes(n, random.Random(seed))


def jacobian_rank(f: Polynomial, r: int, mode: str = "certified",
                  primes: Sequence[int] | None = None, seed: int | None = 0) -> RankOutcome:
    gm = build_graded_map(f, r)
    return graded_rank(gm, mode, choose_primes(mode, primes, seed=seed))


def milnor_dim(f: Polynomial, r: int, mode: str = "certified",
               primes: Sequence[int] | None = None, seed: int | None = 0) -> int:
    """dim M(f)_r."""
    return dim_S(r) - jacobian_rank(f, r, mode, primes, seed).rank


@dataclass
class MilnorProfile:
    N: int
    dims: list[int]
    window: int = DEFAULT_WINDOW
    stabilized: tuple[int, int] | None = None
    mode: str = "certified"
    primes: list[int] = field(default_factory=list)
    fallback_degrees: list[int] = field(default_factory=list)

    @property
    def r_max(self) -> int:
        return len(self.dims) - 1

    def dim(self, r: int) -> int:
        return self.dims[r]

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "dims": list(self.dims),
            "window": self.window,
            "stabilized": None if self.stabilized is None else {
                "value": self.stabilized[0], "onset": self.stabilized[1]},
            "mode": self.mode,
            "primes": list(self.primes),
            "fallback_degrees": list(self.fallback_degrees),
        }


def default_r_max(N: int, window: int = DEFAULT_WINDOW) -> int:
    return max(2 * N - 3, 3 * N - 6) + window


def detect_stabilization(dims: Sequence[int], window: int = DEFAULT_WINDOW):
    """``(value, onset)`` if the last ``window`` values agree, else None.

    The onset is the first degree from which the sequence is constant up
    to the end of ``dims``.
    """
    if window < 2:
        raise ValueError("stabilization window must be at least 2")
    if len(dims) < window:
        return None
    tail = dims[-window:]
    if any(v != tail[0] for v in tail):
        return None
    onset = len(dims) - 1
    while onset > 0 and dims[onset - 1] == tail[0]:
        onset -= 1
    return tail[0], onset


def milnor_profile(f: Polynomial, r_max: int | None = None, mode: str = "certified",
                   window: int = DEFAULT_WINDOW, primes: Sequence[int] | None = None,
                   prime_count: int = DEFAULT_PRIME_COUNT,
                   seed: int | None = 0) -> MilnorProfile:
    N = curve_degree(f)
    if r_max is None:
        r_max = default_r_max(N, window)
    chosen = choose_primes(mode, primes, prime_count, seed)
    partials = integer_partials(f)
    dims = []
    fallbacks = []
    for r in range(r_max + 1):
        if r < N - 1:
            dims.append(dim_S(r))
            continue
        outcome = graded_rank(build_graded_map(f, r, partials), mode, chosen)
        if outcome.fallback:
            fallbacks.append(r)
        dims.append(dim_S(r) - outcome.rank)
    return MilnorProfile(N, dims, window, detect_stabilization(dims, window),
                         mode, chosen, fallbacks)


def tjurina_from_profile(profile: MilnorProfile) -> int:
    if profile.stabilized is None:
        raise StabilizationError(
            f"Milnor algebra dimensions not stable over the last {profile.window} "
            f"degrees up to r_max={profile.r_max}; raise r_max")
    return profile.stabilized[0]
