"""Combinatorial model of a reduced plane curve.

A curve is a list of irreducible components with their degrees, the
singular germs each component has at points it does not share, and the
shared points where several components meet.  Points carry symbolic
labels only; every formula downstream needs incidences and local
invariants, never coordinates.

A germ of a component at a shared point belongs to that point's
incidence record and never to the component's ``own_germs``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb


class SpecError(ValueError):
    pass


class GermError(SpecError):
    pass


class NegativeGenusError(SpecError):
    pass


def delta_invariant(mu: int, branches: int) -> int:
    """delta = (mu + r - 1) / 2."""
    twice = mu + branches - 1
    if twice % 2:
        raise GermError(
            f"mu + branches - 1 = {twice} is odd (mu={mu}, branches={branches})")
    return twice // 2


@dataclass(frozen=True)
class Germ:
    """Local invariants of one component at one singular point.

    ``tjurina`` defaults to ``mu`` for weighted homogeneous germs.  When
    ``weighted_homogeneous`` is not given it is taken to be true for
    ordinary germs and otherwise read off from ``tjurina == mu`` (Saito's
    criterion); with neither flag nor Tjurina number it is false.
    """

    mu: int
    branches: int
    tjurina: int | None = None
    multiplicity: int = 2
    ordinary: bool = False
    weighted_homogeneous: bool | None = None

    def __post_init__(self):
        wh = self.weighted_homogeneous
        if wh is None:
            if self.ordinary:
                wh = True
            elif self.tjurina is not None:
                wh = self.tjurina == self.mu
            else:
                wh = False
            object.__setattr__(self, "weighted_homogeneous", wh)
        if self.tjurina is None and wh:
            object.__setattr__(self, "tjurina", self.mu)

    @property
    def delta(self) -> int:
        return delta_invariant(self.mu, self.branches)

    def problems(self) -> list[str]:
        out = []
        if self.mu < 1:
            out.append(f"mu must be >= 1, got {self.mu}")
        if self.branches < 1:
            out.append(f"branches must be >= 1, got {self.branches}")
        if self.multiplicity < 2:
            out.append(f"multiplicity must be >= 2, got {self.multiplicity}")
        if self.branches > self.multiplicity:
            out.append(f"{self.branches} branches exceed multiplicity {self.multiplicity}")
        if (self.mu + self.branches - 1) % 2:
            out.append(f"parity: mu + branches - 1 = {self.mu + self.branches - 1} is odd")
        elif self.delta < comb(self.multiplicity, 2):
            out.append(f"delta {self.delta} below m(m-1)/2 = {comb(self.multiplicity, 2)}")
        if self.tjurina is not None:
            if self.tjurina < 1:
                out.append(f"tjurina must be >= 1, got {self.tjurina}")
            if self.tjurina > self.mu:
                out.append(f"tjurina {self.tjurina} exceeds mu {self.mu}")
        if self.weighted_homogeneous and self.tjurina is not None and self.tjurina != self.mu:
            out.append("weighted homogeneous germ must have tjurina == mu")
        if self.ordinary:
            m = self.multiplicity
            if self.mu != (m - 1) ** 2 or self.branches != m:
                out.append(f"ordinary {m}-fold point needs mu={(m - 1) ** 2}, branches={m}")
            if not self.weighted_homogeneous:
                out.append("ordinary germ must be weighted homogeneous")
        return out


def ordinary_germ(m: int) -> Germ:
    """Germ of an ordinary m-fold point: m smooth, pairwise transverse branches."""
    if m < 2:
        raise GermError(f"ordinary point needs multiplicity >= 2, got {m}")
    mu = (m - 1) ** 2
    return Germ(mu=mu, branches=m, tjurina=mu, multiplicity=m,
                ordinary=True, weighted_homogeneous=True)


NODE = ordinary_germ(2)
CUSP = Germ(mu=2, branches=1, tjurina=2, multiplicity=2)


@dataclass(frozen=True)
class SmoothBranch:
    """A component passing smoothly through a shared point."""

    multiplicity: int = 1
    branches: int = 1
    mu: int = 0
    delta: int = 0
    ordinary: bool = True

    def __repr__(self) -> str:
        return "SMOOTH"


SMOOTH = SmoothBranch()


@dataclass(frozen=True)
class Incidence:
    component: int
    germ: Germ | SmoothBranch = SMOOTH

    @property
    def smooth(self) -> bool:
        return isinstance(self.germ, SmoothBranch)


@dataclass(frozen=True)
class SharedPoint:
    """A point of C lying on at least two components.

    ``transverse`` asserts that the tangent cones of the components at
    the point share no line, so the local intersection number of C_i and
    C_j there is the product of their multiplicities.  ``mu``,
    ``tjurina`` and ``weighted_homogeneous`` describe the germ of the
    whole curve C; they are derived when the point is ordinary.
    """

    incidences: tuple[Incidence, ...]
    transverse: bool = True
    label: str | None = None
    mu: int | None = None
    tjurina: int | None = None
    weighted_homogeneous: bool | None = None

    @property
    def n(self) -> int:
        return len({inc.component for inc in self.incidences})

    @property
    def total_multiplicity(self) -> int:
        return sum(inc.germ.multiplicity for inc in self.incidences)

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(sorted((inc.germ.multiplicity for inc in self.incidences), reverse=True))

    @property
    def is_ordinary(self) -> bool:
        return self.transverse and all(inc.germ.ordinary for inc in self.incidences)

    @property
    def branches(self) -> int:
        return sum(inc.germ.branches for inc in self.incidences)

    def intersection_number(self, i: int, j: int) -> int | None:
        """(C_i . C_j) at this point when determined by transversality."""
        mi = mj = None
        for inc in self.incidences:
            if inc.component == i:
                mi = inc.germ.multiplicity
            elif inc.component == j:
                mj = inc.germ.multiplicity
        if mi is None or mj is None:
            return 0
        return mi * mj if self.transverse else None

    @property
    def delta_of_curve(self) -> int | None:
        if not self.transverse:
            return None
        own = sum(inc.germ.delta for inc in self.incidences)
        mults = [inc.germ.multiplicity for inc in self.incidences]
        return own + sum(a * b for a, b in combinations(mults, 2))

    @property
    def milnor(self) -> int | None:
        if self.mu is not None:
            return self.mu
        delta = self.delta_of_curve
        if delta is None:
            return None
        return 2 * delta - self.branches + 1

    @property
    def is_weighted_homogeneous(self) -> bool:
        if self.weighted_homogeneous is not None:
            return self.weighted_homogeneous
        if self.is_ordinary:
            return True
        if self.tjurina is not None and self.milnor is not None:
            return self.tjurina == self.milnor
        return False

    @property
    def tau(self) -> int | None:
        if self.tjurina is not None:
            return self.tjurina
        if self.is_weighted_homogeneous:
            return self.milnor
        return None


@dataclass(frozen=True)
class Component:
    degree: int
    own_germs: tuple[Germ, ...] = ()
    label: str | None = None
    genus_check: int | None = None


def genus(c: Component, attached_germs=()) -> int:
    """Geometric genus from the degree and the delta-invariants of all germs."""
    g = (c.degree - 1) * (c.degree - 2) // 2 - sum(
        germ.delta for germ in (*c.own_germs, *attached_germs))
    if g < 0:
        name = c.label or f"degree-{c.degree} component"
        raise NegativeGenusError(f"{name}: delta-invariants exceed (N-1)(N-2)/2 (genus {g})")
    return g


@dataclass(frozen=True)
class CurveSpec:
    components: tuple[Component, ...]
    shared_points: tuple[SharedPoint, ...] = ()
    name: str | None = None
    polynomial: str | None = None

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def N(self) -> int:
        return sum(c.degree for c in self.components)

    def attached_germs(self, j: int) -> list[Germ]:
        return [inc.germ for sp in self.shared_points for inc in sp.incidences
                if inc.component == j and not inc.smooth]

    def all_germs(self, j: int) -> list[Germ]:
        return [*self.components[j].own_germs, *self.attached_germs(j)]

    def genera(self) -> list[int]:
        return [genus(c, self.attached_germs(j)) for j, c in enumerate(self.components)]


# ---------------------------------------------------------------------------
# roster and validation

B_TYPES = {
    (2, 1): "b3_2",
    (1, 1, 1): "b3_3",
    (3, 1): "b4_2",
    (2, 2): "b4_2_tilde",
    (2, 1, 1): "b4_3",
    (1, 1, 1, 1): "b4_4",
}


@dataclass
class Roster:
    r: int
    N: int
    genera: list[int]
    S1: int
    S2: int
    n: dict[int, int]
    n_own: dict[int, int]
    n_shared: dict[int, int]
    nonordinary: int
    a_only: int
    b_only: int
    a_and_b: int
    b_types: dict[str, int]
    tau: int | None
    all_weighted_homogeneous: bool

    @property
    def sum_genus(self) -> int:
        return sum(self.genera)

    def to_dict(self) -> dict:
        return {
            "r": self.r, "N": self.N, "genera": list(self.genera),
            "sum_genus": self.sum_genus, "S1": self.S1, "S2": self.S2,
            "n": {str(k): v for k, v in sorted(self.n.items())},
            "n_own": {str(k): v for k, v in sorted(self.n_own.items())},
            "n_shared": {str(k): v for k, v in sorted(self.n_shared.items())},
            "nonordinary_points": self.nonordinary,
            "points": {"A_only": self.a_only, "B_only": self.b_only, "A_and_B": self.a_and_b},
            "b_types": dict(self.b_types),
            "tau": self.tau,
            "all_weighted_homogeneous": self.all_weighted_homogeneous,
        }


def singular_roster(spec: CurveSpec) -> Roster:
    """Bookkeeping sums over the singular points of a valid spec."""
    genera = spec.genera()
    S1 = sum(germ.branches - 1 for j in range(spec.r) for germ in spec.all_germs(j))
    S2 = sum(sp.n - 1 for sp in spec.shared_points)
    n_own: Counter = Counter()
    n_shared: Counter = Counter()
    nonordinary = 0
    taus = []
    wh = True
    for c in spec.components:
        for germ in c.own_germs:
            if germ.ordinary:
                n_own[germ.multiplicity] += 1
            else:
                nonordinary += 1
            taus.append(germ.tjurina)
            wh = wh and bool(germ.weighted_homogeneous)
    b_types = {name: 0 for name in B_TYPES.values()}
    a_and_b = 0
    for sp in spec.shared_points:
        if sp.is_ordinary:
            n_shared[sp.total_multiplicity] += 1
        else:
            nonordinary += 1
        if any(not inc.smooth for inc in sp.incidences):
            a_and_b += 1
        kind = B_TYPES.get(sp.partition)
        if kind:
            b_types[kind] += 1
        taus.append(sp.tau)
        wh = wh and sp.is_weighted_homogeneous
    n = Counter(n_own)
    n.update(n_shared)
    tau = None if any(t is None for t in taus) else sum(taus)
    own_points = sum(len(c.own_germs) for c in spec.components)
    return Roster(
        r=spec.r, N=spec.N, genera=genera, S1=S1, S2=S2,
        n=dict(n), n_own=dict(n_own), n_shared=dict(n_shared),
        nonordinary=nonordinary, a_only=own_points,
        b_only=len(spec.shared_points) - a_and_b, a_and_b=a_and_b,
        b_types=b_types, tau=tau, all_weighted_homogeneous=wh,
    )


@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    roster: Roster | None = None
    hypotheses: dict[str, bool] = field(default_factory=dict)
    hypothesis_notes: dict[str, list[str]] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "errors": list(self.errors),
            "warnings": list(self.warnings),
            "roster": None if self.roster is None else self.roster.to_dict(),
            "hypotheses": dict(self.hypotheses),
            "hypothesis_notes": {k: list(v) for k, v in self.hypothesis_notes.items()},
        }


def _bezout(spec: CurveSpec, report: ValidationReport) -> bool:
    """Check that shared points account for all N_i*N_j intersections."""
    exact = True
    for i, j in combinations(range(spec.r), 2):
        total = 0
        known = True
        for sp in spec.shared_points:
            num = sp.intersection_number(i, j)
            if num is None:
                known = False
            else:
                total += num
        expected = spec.components[i].degree * spec.components[j].degree
        if not known:
            exact = False
            if total >= expected:
                report.errors.append(
                    f"components {i},{j}: transverse points already give {total} "
                    f"intersections, leaving nothing for tangential ones (Bezout: {expected})")
            continue
        if total > expected:
            report.errors.append(
                f"components {i},{j}: {total} intersections exceed Bezout bound {expected}")
            exact = False
        elif total < expected:
            report.warnings.append(
                f"components {i},{j}: shared points account for {total} of "
                f"{expected} intersections")
            exact = False
    return exact


def validate_spec(spec: CurveSpec) -> ValidationReport:
    report = ValidationReport()
    errors = report.errors
    if not spec.components:
        errors.append("components: at least one component is required")
        return report
    for j, c in enumerate(spec.components):
        if c.degree < 1:
            errors.append(f"components[{j}].degree: must be >= 1, got {c.degree}")
        for k, germ in enumerate(c.own_germs):
            errors.extend(f"components[{j}].own_germs[{k}]: {p}" for p in germ.problems())
    for s, sp in enumerate(spec.shared_points):
        where = f"shared_points[{s}]" + (f" ({sp.label})" if sp.label else "")
        comps = [inc.component for inc in sp.incidences]
        if len(set(comps)) != len(comps):
            errors.append(f"{where}: component indices must be distinct")
        if len(set(comps)) < 2:
            errors.append(f"{where}: needs at least two components (n >= 2)")
        for t, inc in enumerate(sp.incidences):
            if not 0 <= inc.component < spec.r:
                errors.append(f"{where}.incidences[{t}]: component {inc.component} out of range")
            if not inc.smooth:
                errors.extend(f"{where}.incidences[{t}]: {p}" for p in inc.germ.problems())
        if sp.tjurina is not None and sp.milnor is not None:
            if sp.tjurina > sp.milnor:
                errors.append(f"{where}: tjurina {sp.tjurina} exceeds mu {sp.milnor}")
            if sp.weighted_homogeneous and sp.tjurina != sp.milnor:
                errors.append(f"{where}: weighted homogeneous point must have tjurina == mu")
    if errors:
        return report

    for j, c in enumerate(spec.components):
        try:
            g = genus(c, spec.attached_germs(j))
        except NegativeGenusError as exc:
            errors.append(f"components[{j}]: {exc}")
            continue
        if c.genus_check is not None and c.genus_check != g:
            errors.append(f"components[{j}].genus_check: declared {c.genus_check}, "
                          f"degree and germs give {g}")
    bezout_ok = _bezout(spec, report)
    if errors:
        return report

    roster = singular_roster(spec)
    report.roster = roster
    notes: dict[str, list[str]] = {}

    t_notes = []
    if any(not g.ordinary for c in spec.components for g in c.own_germs):
        t_notes.append("a component has a non-ordinary singular point")
    if any(not sp.transverse or any(not inc.smooth for inc in sp.incidences)
           for sp in spec.shared_points):
        t_notes.append("some component is singular or tangent at a shared point")
    if not bezout_ok:
        t_notes.append("shared points do not account for exactly N_i*N_j intersections")
    notes["transverse_arrangement"] = t_notes

    m_notes = []
    if roster.nonordinary:
        m_notes.append(f"{roster.nonordinary} non-ordinary singular point(s)")
    if any(m > 4 for m in roster.n):
        m_notes.append("an ordinary point of multiplicity > 4")
    if not bezout_ok:
        m_notes.append("shared points do not account for exactly N_i*N_j intersections")
    notes["ordinary_mult_le_4"] = m_notes

    notes["weighted_homogeneous"] = (
        [] if roster.all_weighted_homogeneous and roster.tau is not None
        else ["some singular point is not flagged weighted homogeneous"])
    notes["rational_components"] = (
        [] if roster.sum_genus == 0 else [f"genera {roster.genera}"])
    notes["nodal"] = (
        [] if roster.nonordinary == 0 and set(roster.n) <= {2}
        else ["a singular point other than a node"])

    report.hypothesis_notes = notes
    report.hypotheses = {k: not v for k, v in notes.items()}
    report.hypotheses["bezout"] = bezout_ok
    return report
