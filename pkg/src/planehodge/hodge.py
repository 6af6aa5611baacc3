"""Hodge-Deligne polynomials of plane curves and their complements.

Each closed formula here is written out on its own, straight from its
statement; none is obtained by rearranging another.  Agreement between
them is checked by the tests, and ``hd_complement`` asserts additivity
at run time.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .curve import Component, CurveSpec, SpecError, genus, singular_roster, validate_spec


class HypothesisError(SpecError):
    """A specialised formula was asked for outside its hypotheses."""


class FormulaMismatch(AssertionError):
    pass


class HDPoly:
    """Integer polynomial in u, v, stored as {(p, q): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {pq: c for pq, c in (terms or {}).items() if c}

    @classmethod
    def build(cls, *pieces) -> HDPoly:
        out: dict[tuple[int, int], int] = {}
        for c, p, q in pieces:
            out[(p, q)] = out.get((p, q), 0) + c
        return cls(out)

    def __add__(self, other: HDPoly) -> HDPoly:
        out = dict(self.terms)
        for pq, c in other.terms.items():
            out[pq] = out.get(pq, 0) + c
        return HDPoly(out)

    def __neg__(self) -> HDPoly:
        return HDPoly({pq: -c for pq, c in self.terms.items()})

    def __sub__(self, other: HDPoly) -> HDPoly:
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, HDPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, p: int, q: int) -> int:
        return self.terms.get((p, q), 0)

    def is_symmetric(self) -> bool:
        return all(self.terms.get((q, p), 0) == c for (p, q), c in self.terms.items())

    def evaluate(self, u: int = 1, v: int = 1) -> int:
        return sum(c * u**p * v**q for (p, q), c in self.terms.items())

    def to_dict(self) -> dict[str, int]:
        return {f"{p},{q}": c for (p, q), c in sorted(self.terms.items(), reverse=True)}

    @classmethod
    def from_dict(cls, data: dict[str, int]) -> HDPoly:
        return cls({tuple(int(t) for t in k.split(",")): v for k, v in data.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for (p, q), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                [f"u^{p}" if p > 1 else "u"] * (p > 0) + [f"v^{q}" if q > 1 else "v"] * (q > 0))
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"HDPoly({str(self)!r})"


P_PLANE = HDPoly.build((1, 2, 2), (1, 1, 1), (1, 0, 0))


def hd_irreducible(c: Component, attached_germs=()) -> HDPoly:
    """P(C) = uv - g u - g v + 1 - sum_k (r_k - 1) for an irreducible curve."""
    g = genus(c, attached_germs)
    drop = sum(germ.branches - 1 for germ in (*c.own_germs, *attached_germs))
    return HDPoly.build((1, 1, 1), (-g, 1, 0), (-g, 0, 1), (1 - drop, 0, 0))


def _checked(spec: CurveSpec):
    report = validate_spec(spec)
    if not report.valid:
        raise SpecError("invalid curve spec: " + "; ".join(report.errors))
    return report


def hd_curve(spec: CurveSpec) -> HDPoly:
    """P(C) = r uv - (sum g_j)(u + v) + r - S1 - S2."""
    ro = _checked(spec).roster
    sg = ro.sum_genus
    return HDPoly.build((ro.r, 1, 1), (-sg, 1, 0), (-sg, 0, 1), (ro.r - ro.S1 - ro.S2, 0, 0))


def hd_complement(spec: CurveSpec) -> HDPoly:
    """P(U) for U = P^2 minus C, from its closed form.

    The result is compared with P(P^2) - P(C); a mismatch raises
    FormulaMismatch.
    """
    ro = _checked(spec).roster
    sg, r = ro.sum_genus, ro.r
    direct = HDPoly.build((1, 2, 2), (-(r - 1), 1, 1), (sg, 1, 0), (sg, 0, 1),
                          (-(r - 1) + ro.S1 + ro.S2, 0, 0))
    by_difference = P_PLANE - hd_curve(spec)
    if direct != by_difference:
        raise FormulaMismatch(f"P(U) closed form {direct} != P(P2) - P(C) = {by_difference}")
    return direct


@dataclass
class HodgeReport:
    gr1: int
    gr2: int
    h1U: int
    h2U: int
    b1C: int
    h00_H1C: int
    h10_H1C: int
    h01_H1C: int

    def to_dict(self) -> dict:
        return asdict(self)


def gr_dims(spec: CurveSpec) -> HodgeReport:
    """Graded pieces of H^2(U) for the Hodge filtration, plus H^1(C) data."""
    ro = _checked(spec).roster
    sg, r = ro.sum_genus, ro.r
    gr1 = sg
    gr2 = sg + ro.S1 + ro.S2 - r + 1
    h00 = ro.S1 + ro.S2 - r + 1
    return HodgeReport(gr1=gr1, gr2=gr2, h1U=r - 1, h2U=gr1 + gr2,
                       b1C=h00 + 2 * sg, h00_H1C=h00, h10_H1C=sg, h01_H1C=sg)


def betti1_curve(spec: CurveSpec) -> int:
    ro = _checked(spec).roster
    return ro.S1 + ro.S2 - ro.r + 1 + 2 * ro.sum_genus


def betti1_irreducible(c: Component) -> int:
    """b_1 = (N-1)(N-2) - sum mu, valid for an irreducible curve."""
    return (c.degree - 1) * (c.degree - 2) - sum(g.mu for g in c.own_germs)


def _ordinary_count_formula(N: int, n: dict[int, int]) -> int:
    return (N - 1) * (N - 2) // 2 - sum(comb(m - 1, 2) * k for m, k in n.items())


def _require(report, key: str, what: str):
    if not report.hypotheses.get(key):
        why = "; ".join(report.hypothesis_notes.get(key, [])) or "hypothesis not met"
        raise HypothesisError(f"{what} does not apply: {why}")


def gr2_transverse(spec: CurveSpec) -> int:
    """dim Gr^2_F H^2(U) = (N-1)(N-2)/2 - sum_m C(m-1, 2) n_m.

    Requires ordinary singularities on every component and components
    meeting pairwise transversally at points where each is smooth.
    """
    report = _checked(spec)
    _require(report, "transverse_arrangement", "transverse-arrangement formula")
    return _ordinary_count_formula(spec.N, report.roster.n)


def h2_line_arrangement(spec: CurveSpec) -> int:
    """dim H^2(U) for a transverse arrangement of rational curves."""
    report = _checked(spec)
    _require(report, "transverse_arrangement", "arrangement formula")
    _require(report, "rational_components", "arrangement formula")
    return _ordinary_count_formula(spec.N, report.roster.n)


def gr2_mult4_as_stated(spec: CurveSpec) -> int:
    """(N-1)(N-2)/2 - n_3 - 3 n_4 + b_4^2, the variant with a +b_4^2 term.

    Kept for comparison only: whenever the shared points account for all
    N_i N_j intersections it exceeds the value forced by the general
    formula by exactly b_4^2.  Use ``gr2_mult4``.
    """
    report = _checked(spec)
    _require(report, "ordinary_mult_le_4", "multiplicity-4 formula")
    ro = report.roster
    n3, n4 = ro.n.get(3, 0), ro.n.get(4, 0)
    return (spec.N - 1) * (spec.N - 2) // 2 - n3 - 3 * n4 + ro.b_types["b4_2"]


def gr2_mult4(spec: CurveSpec) -> int:
    """dim Gr^2_F H^2(U) for curves with ordinary points of multiplicity <= 4.

    Equals (N-1)(N-2)/2 - n_3 - 3 n_4.  Tangency between components is
    allowed as long as every point of C is an ordinary singularity.
    """
    report = _checked(spec)
    _require(report, "ordinary_mult_le_4", "multiplicity-4 formula")
    ro = report.roster
    return (spec.N - 1) * (spec.N - 2) // 2 - ro.n.get(3, 0) - 3 * ro.n.get(4, 0)


def gr2_from_point_counts(spec: CurveSpec) -> int:
    """sum g_j - r + 1 + n_2 + 2 n_3 + 3 n_4, for ordinary points of multiplicity <= 4."""
    report = _checked(spec)
    _require(report, "ordinary_mult_le_4", "point-count formula")
    ro = report.roster
    return (ro.sum_genus - ro.r + 1 + ro.n.get(2, 0) + 2 * ro.n.get(3, 0)
            + 3 * ro.n.get(4, 0))


def hodge_summary(spec: CurveSpec) -> dict:
    """Everything ``planehodge hodge`` prints, with a source line per value."""
    report = _checked(spec)
    ro = report.roster
    pc = hd_curve(spec)
    pu = hd_complement(spec)
    dims = gr_dims(spec)
    out = {
        "name": spec.name,
        "P_C": {"value": pc.to_dict(), "text": str(pc),
                "source": "Hodge-Deligne polynomial of a reducible curve via normalizations"},
        "P_U": {"value": pu.to_dict(), "text": str(pu),
                "source": "closed form for the complement, checked against P(P2) - P(C)"},
        "dims": dims.to_dict(),
        "sources": {
            "gr1": "sum of component genera",
            "gr2": "sum g_j + S1 + S2 - r + 1",
            "h1U": "r - 1",
            "h2U": "gr1 + gr2 (F^1 H^2 = H^2)",
            "b1C": "S1 + S2 - r + 1 + 2 sum g_j",
        },
        "pure_type_2_2": dims.gr1 == 0,
        "roster": ro.to_dict(),
        "special_formulas": {},
        "warnings": list(report.warnings),
    }
    special = out["special_formulas"]
    for key, fn, label in (
        ("transverse", gr2_transverse, "transverse arrangement, ordinary points"),
        ("line_arrangement_h2", h2_line_arrangement, "transverse arrangement of rational curves"),
        ("mult4", gr2_mult4, "ordinary points of multiplicity <= 4"),
        ("mult4_plus_b42", gr2_mult4_as_stated,
         "multiplicity-<=4 variant with +b4_2 (overcounts by b4_2)"),
        ("point_counts", gr2_from_point_counts, "sum g - r + 1 + n2 + 2 n3 + 3 n4"),
    ):
        try:
            special[key] = {"value": fn(spec), "applies": True, "source": label}
        except HypothesisError as exc:
            special[key] = {"value": None, "applies": False, "source": label, "reason": str(exc)}
    return out
