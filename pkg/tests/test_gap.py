import pytest

from planehodge.curve import NODE, Component, CurveSpec, Germ, SpecError
from planehodge.gap import DegreeMismatchError, check_rational_identity, gap
from planehodge.hodge import HypothesisError
from planehodge.poly import parse_poly
from planehodge.specfile import load_spec


def corpus_pair(name):
    spec = load_spec(f"corpus:{name}")
    return spec, parse_poly(spec.polynomial)


class TestGap:
    def test_fermat_cubic(self):
        rep = gap(*corpus_pair("fermat_cubic"))
        assert (rep.tau, rep.sum_genus, rep.m2n3, rep.gap) == (0, 1, 1, 0)
        assert rep.consistent and rep.tau_status == "agrees"

    def test_nodal_cubic(self):
        rep = gap(*corpus_pair("nodal_cubic"))
        assert (rep.tau, rep.m2n3, rep.gap) == (1, 1, 0)
        assert rep.nodal and rep.rational and rep.consistent

    def test_cubic_and_line(self):
        rep = gap(*corpus_pair("cubic_and_line"))
        assert (rep.tau, rep.sum_genus, rep.m2n3, rep.gap) == (3, 1, 4, 0)

    def test_triple_point_quartic_and_line(self):
        rep = gap(*corpus_pair("quartic_triple_point_and_line"))
        assert rep.tau == rep.tau_profile == 10
        assert rep.gap == 0 and rep.consistent

    def test_tangential_conics(self):
        rep = gap(*corpus_pair("bitangent_conics"))
        assert rep.tau == rep.tau_profile == 6
        assert rep.consistent

    def test_without_cross_check(self):
        rep = gap(*corpus_pair("tricuspidal_quartic"), cross_check=False)
        assert rep.m2n3 == 6 and rep.gap == 0
        assert rep.tau_status == "not computed" and rep.profile is None

    def test_short_profile_skips_cross_check(self):
        spec, f = corpus_pair("fermat_quartic")
        rep = gap(spec, f, r_max=5, window=2)
        assert rep.m2n3 == dict(enumerate(rep.profile["dims"]))[5]
        assert rep.tau_status in ("agrees", "not stabilized")


class TestRationalIdentity:
    def test_tricuspidal_quartic(self):
        assert check_rational_identity(*corpus_pair("tricuspidal_quartic"))

    def test_nodal_cubic(self):
        assert check_rational_identity(*corpus_pair("nodal_cubic"))

    def test_needs_rational_components(self):
        with pytest.raises(HypothesisError):
            check_rational_identity(*corpus_pair("fermat_cubic"))

    def test_false_rational_description_is_caught(self):
        spec, f = corpus_pair("negative_fermat_cubic_false_cusp")
        assert check_rational_identity(spec, f) is False


class TestNegative:
    def test_false_cusp_reported_inconsistent(self):
        rep = gap(*corpus_pair("negative_fermat_cubic_false_cusp"))
        assert not rep.consistent
        assert not rep.bounds_ok["gap_at_most_sum_genus"]
        assert not rep.bounds_ok["m2n3_at_least_tau"]
        assert rep.tau_status == "mismatch"

    def test_false_genus_rejected(self):
        with pytest.raises(SpecError, match="genus_check"):
            gap(*corpus_pair("negative_fermat_cubic_false_genus"))

    def test_degree_mismatch(self):
        spec = load_spec("corpus:nodal_cubic")
        with pytest.raises(DegreeMismatchError):
            gap(spec, parse_poly("x^4+y^4+z^4"))

    def test_non_weighted_homogeneous_rejected(self):
        spec = CurveSpec((Component(4, (Germ(mu=3, branches=2, tjurina=2),)),))
        with pytest.raises(HypothesisError):
            gap(spec, parse_poly("x^4+y^4+z^4"))

    def test_nodal_description_of_non_nodal_curve(self):
        # tricuspidal quartic described as having three nodes
        spec = CurveSpec((Component(4, (NODE,) * 3),))
        f = parse_poly("x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)")
        rep = gap(spec, f)
        assert not rep.consistent
