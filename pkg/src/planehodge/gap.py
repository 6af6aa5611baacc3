"""Gap between the pole order and Hodge filtrations on H^2(U).

For a reduced curve C: f = 0 of degree N with only weighted homogeneous
singularities,

    dim P^2 H^2(U) - dim F^2 H^2(U) = tau(C) + sum g_i - dim M(f)_{2N-3},

and the gap lies in [0, sum g_i].  tau(C) comes from the curve spec; when a
Milnor profile is computed its stable value is compared against it.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

from .curve import CurveSpec, SpecError, validate_spec
from .graded import (
    DEFAULT_PRIME_COUNT,
    DEFAULT_WINDOW,
    MilnorProfile,
    curve_degree,
    dim_S,
    jacobian_rank,
    milnor_profile,
)
from .hodge import HypothesisError, gr_dims
from .poly import Polynomial


class DegreeMismatchError(SpecError):
    pass


@dataclass
class GapReport:
    N: int
    tau: int
    sum_genus: int
    m2n3: int
    gap: int
    tau_profile: int | None = None
    tau_status: str = "not computed"
    dim_P2: int = 0
    dim_F2: int = 0
    bounds_ok: dict[str, bool] = field(default_factory=dict)
    wh_hypothesis: bool = True
    nodal: bool = False
    rational: bool = False
    problems: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    profile: dict | None = None

    @property
    def consistent(self) -> bool:
        return not self.problems

    def to_dict(self) -> dict:
        out = asdict(self)
        out["consistent"] = self.consistent
        return out


def _prepare(spec: CurveSpec, f: Polynomial):
    report = validate_spec(spec)
    if not report.valid:
        raise SpecError("invalid curve spec: " + "; ".join(report.errors))
    N = curve_degree(f)
    if N != spec.N:
        raise DegreeMismatchError(f"polynomial has degree {N} but the curve spec has degree {spec.N}")
    if not report.hypotheses["weighted_homogeneous"]:
        why = "; ".join(report.hypothesis_notes["weighted_homogeneous"])
        raise HypothesisError(f"gap formula needs weighted homogeneous singularities: {why}")
    return report, N


def gap(spec: CurveSpec, f: Polynomial, mode: str = "certified", *,
        cross_check: bool = True, r_max: int | None = None,
        window: int = DEFAULT_WINDOW, primes: Sequence[int] | None = None,
        prime_count: int = DEFAULT_PRIME_COUNT, seed: int | None = 0,
        profile: MilnorProfile | None = None) -> GapReport:
    report, N = _prepare(spec, f)
    ro = report.roster
    tau, sg = ro.tau, ro.sum_genus
    top = 2 * N - 3
    if profile is None and cross_check:
        profile = milnor_profile(f, None if r_max is None else max(r_max, top), mode,
                                 window, primes, prime_count, seed)
    if profile is not None and profile.r_max >= top:
        m2n3 = profile.dims[top]
    else:
        m2n3 = dim_S(top) - jacobian_rank(f, top, mode, primes, seed).rank

    dims = gr_dims(spec)
    out = GapReport(
        N=N, tau=tau, sum_genus=sg, m2n3=m2n3, gap=tau + sg - m2n3,
        dim_P2=dims.h2U + tau - m2n3, dim_F2=dims.gr2,
        wh_hypothesis=True,
        nodal=report.hypotheses["nodal"],
        rational=report.hypotheses["rational_components"],
        warnings=list(report.warnings),
    )
    out.bounds_ok = {
        "gap_nonnegative": out.gap >= 0,
        "gap_at_most_sum_genus": out.gap <= sg,
        "m2n3_at_least_tau": m2n3 - tau >= 0,
        "P2_contains_F2": out.dim_P2 >= out.dim_F2,
    }
    for name, ok in out.bounds_ok.items():
        if not ok:
            out.problems.append(f"bound violated: {name} (gap={out.gap}, sum_genus={sg}, "
                                f"tau={tau}, dim M_{top}={m2n3})")
    if out.nodal and out.gap != 0:
        out.problems.append(f"nodal curve must have gap 0, got {out.gap}")

    if profile is not None:
        out.profile = profile.to_dict()
        if profile.stabilized is None:
            out.tau_status = "not stabilized"
            out.warnings.append(f"Milnor profile not stable up to r_max={profile.r_max}; "
                                "tau cross-check skipped")
        else:
            out.tau_profile = profile.stabilized[0]
            if out.tau_profile == tau:
                out.tau_status = "agrees"
            else:
                out.tau_status = "mismatch"
                out.problems.append(
                    f"spec tau {tau} differs from stable Milnor dimension {out.tau_profile} "
                    f"(onset {profile.stabilized[1]}): inconsistent input")
    return out


def check_rational_identity(spec: CurveSpec, f: Polynomial, mode: str = "certified",
                            primes: Sequence[int] | None = None, seed: int | None = 0) -> bool:
    """True iff dim M(f)_{2N-3} equals the total Tjurina number of the curve spec.

    Only meaningful when every component is rational; otherwise raises
    HypothesisError.
    """
    report, N = _prepare(spec, f)
    if not report.hypotheses["rational_components"]:
        raise HypothesisError(
            f"rational identity needs rational components; genera {report.roster.genera}")
    top = 2 * N - 3
    m2n3 = dim_S(top) - jacobian_rank(f, top, mode, primes, seed).rank
    return m2n3 == report.roster.tau
