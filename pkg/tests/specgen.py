"""Random curve specs for property tests.

Three families:

* ``random_valid_spec``: anything that passes validation, including
  non-ordinary germs and tangential shared points.
* ``random_transverse_spec``: ordinary germs on components, shared points
  where every component is smooth, Bezout counts exact.
* ``random_mult4_spec``: every point of C ordinary of multiplicity <= 4,
  components may be singular at shared points, Bezout counts exact.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from planehodge.curve import (
    SMOOTH,
    Component,
    CurveSpec,
    Germ,
    Incidence,
    SharedPoint,
    ordinary_germ,
)

# (mu, branches, multiplicity): A_k, D_k, E_6 and ordinary points
GERM_ZOO = [
    (1, 2, 2), (2, 1, 2), (3, 2, 2), (4, 1, 2), (5, 2, 2), (6, 1, 2),
    (4, 3, 3), (5, 2, 3), (6, 1, 3), (9, 4, 4),
]


def _budget(degree: int) -> int:
    return (degree - 1) * (degree - 2) // 2


def _zoo_germ(rng: random.Random, room: int, max_mult: int) -> Germ | None:
    choices = [z for z in GERM_ZOO if (z[0] + z[1] - 1) // 2 <= room and z[2] <= max_mult]
    if not choices:
        return None
    mu, br, m = rng.choice(choices)
    ordinary = br == m and mu == (m - 1) ** 2
    if ordinary:
        return ordinary_germ(m)
    tj = mu if rng.random() < 0.7 else rng.randint(max(1, mu - 2), mu)
    return Germ(mu=mu, branches=br, tjurina=tj, multiplicity=m)


def random_valid_spec(rng: random.Random) -> CurveSpec:
    r = rng.randint(1, 4)
    degrees = [rng.randint(1, 5) for _ in range(r)]
    room = [_budget(d) for d in degrees]
    comps = []
    for j, d in enumerate(degrees):
        germs = []
        for _ in range(rng.randint(0, 3)):
            g = _zoo_germ(rng, room[j], d - 1)
            if g is None:
                break
            room[j] -= g.delta
            germs.append(g)
        comps.append(germs)
    left = {(i, j): degrees[i] * degrees[j] for i, j in combinations(range(r), 2)}
    points = []
    for _ in range(rng.randint(0, 6) if r > 1 else 0):
        k = rng.randint(2, r)
        members = sorted(rng.sample(range(r), k))
        transverse = rng.random() < 0.8
        incs = []
        for c in members:
            germ = SMOOTH
            if rng.random() < 0.3:
                g = _zoo_germ(rng, room[c], degrees[c] - 1)
                if g is not None:
                    germ = g
            incs.append(Incidence(c, germ))
        mult = {inc.component: inc.germ.multiplicity for inc in incs}
        need = {(a, b): mult[a] * mult[b] + (0 if transverse else 1)
                for a, b in combinations(members, 2)}
        if any(left[p] < need[p] for p in need):
            continue
        for p, v in need.items():
            left[p] -= v
        for inc in incs:
            if not inc.smooth:
                room[inc.component] -= inc.germ.delta
        extra = {}
        if not transverse:
            extra = {"mu": 10 * len(members), "tjurina": 10 * len(members)}
        points.append(SharedPoint(tuple(incs), transverse=transverse, **extra))
    components = tuple(Component(d, tuple(g)) for d, g in zip(degrees, comps))
    return CurveSpec(components, tuple(points))


def _fill_bezout(rng, r, left, points, max_members=None):
    """Add transverse points with smooth branches until Bezout is exact."""
    while True:
        open_pairs = [p for p, v in left.items() if v > 0]
        if not open_pairs:
            return
        a, b = rng.choice(open_pairs)
        members = [a, b]
        for c in rng.sample(range(r), r):
            if c in members or (max_members and len(members) >= max_members):
                continue
            if all(left[tuple(sorted((c, m)))] > 0 for m in members) and rng.random() < 0.3:
                members.append(c)
        for x, y in combinations(sorted(members), 2):
            left[(x, y)] -= 1
        points.append(SharedPoint(tuple(Incidence(c) for c in sorted(members))))


def random_transverse_spec(rng: random.Random, max_mult: int = 6) -> CurveSpec:
    r = rng.randint(1, 5)
    degrees = [rng.randint(1, 6) for _ in range(r)]
    comps = []
    for d in degrees:
        room = _budget(d)
        germs = []
        for _ in range(rng.randint(0, 4)):
            m = rng.randint(2, min(max_mult, max(2, d - 1)))
            if comb(m, 2) > room or m > d - 1:
                break
            room -= comb(m, 2)
            germs.append(ordinary_germ(m))
        comps.append(Component(d, tuple(germs)))
    left = {(i, j): degrees[i] * degrees[j] for i, j in combinations(range(r), 2)}
    points: list[SharedPoint] = []
    _fill_bezout(rng, r, left, points)
    return CurveSpec(tuple(comps), tuple(points))


MULT4_PARTITIONS = [(2, 1), (1, 1, 1), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def random_mult4_spec(rng: random.Random) -> CurveSpec:
    r = rng.randint(1, 5)
    degrees = [rng.randint(1, 6) for _ in range(r)]
    room = [_budget(d) for d in degrees]
    comps = []
    for j, d in enumerate(degrees):
        germs = []
        for _ in range(rng.randint(0, 3)):
            m = rng.randint(2, 4)
            if m > d - 1 or comb(m, 2) > room[j]:
                break
            room[j] -= comb(m, 2)
            germs.append(ordinary_germ(m))
        comps.append(Component(d, tuple(germs)))
    left = {(i, j): degrees[i] * degrees[j] for i, j in combinations(range(r), 2)}
    points: list[SharedPoint] = []
    for _ in range(rng.randint(0, 6) if r > 1 else 0):
        part = rng.choice(MULT4_PARTITIONS)
        if len(part) > r:
            continue
        members = rng.sample(range(r), len(part))
        ok = all(m == 1 or (m <= degrees[c] - 1 and comb(m, 2) <= room[c])
                 for c, m in zip(members, part))
        need = {tuple(sorted((a, b))): ma * mb
                for (a, ma), (b, mb) in combinations(zip(members, part), 2)}
        if not ok or any(left[p] < v for p, v in need.items()):
            continue
        for p, v in need.items():
            left[p] -= v
        incs = []
        for c, m in zip(members, part):
            if m == 1:
                incs.append(Incidence(c))
            else:
                room[c] -= comb(m, 2)
                incs.append(Incidence(c, ordinary_germ(m)))
        points.append(SharedPoint(tuple(sorted(incs, key=lambda i: i.component))))
    _fill_bezout(rng, r, left, points, max_members=4)
    return CurveSpec(tuple(comps), tuple(points))
