import random
from itertools import combinations

import pytest

from planehodge.curve import (
    CUSP,
    NODE,
    Component,
    CurveSpec,
    Germ,
    GermError,
    Incidence,
    NegativeGenusError,
    SharedPoint,
    delta_invariant,
    genus,
    ordinary_germ,
    singular_roster,
    validate_spec,
)
from planehodge.specfile import load_spec

from specgen import MULT4_PARTITIONS, random_mult4_spec


def lines(k, points):
    return CurveSpec(tuple(Component(1) for _ in range(k)),
                     tuple(SharedPoint(tuple(Incidence(c) for c in p)) for p in points))


def generic_lines(k):
    return lines(k, list(combinations(range(k), 2)))


class TestGerms:
    @pytest.mark.parametrize("mu, r, delta", [(1, 2, 1), (2, 1, 1), (16, 5, 10), (9, 4, 6)])
    def test_delta(self, mu, r, delta):
        assert delta_invariant(mu, r) == delta

    def test_delta_parity(self):
        with pytest.raises(GermError):
            delta_invariant(2, 2)

    @pytest.mark.parametrize("m, mu, r, tau", [(2, 1, 2, 1), (3, 4, 3, 4), (5, 16, 5, 16)])
    def test_ordinary(self, m, mu, r, tau):
        g = ordinary_germ(m)
        assert (g.mu, g.branches, g.tjurina) == (mu, r, tau)
        assert g.delta == m * (m - 1) // 2
        assert g.weighted_homogeneous and not g.problems()

    def test_node_and_cusp(self):
        assert NODE == ordinary_germ(2)
        assert (CUSP.mu, CUSP.branches, CUSP.tjurina, CUSP.delta) == (2, 1, 2, 1)

    def test_tjurina_defaults(self):
        # E_7-like germ given without flags: tau unknown, not weighted homogeneous
        g = Germ(mu=7, branches=2, multiplicity=3)
        assert g.tjurina is None and not g.weighted_homogeneous
        # tau < mu means not weighted homogeneous
        assert not Germ(mu=6, branches=1, tjurina=5, multiplicity=3).weighted_homogeneous
        assert Germ(mu=6, branches=1, tjurina=6, multiplicity=3).weighted_homogeneous

    @pytest.mark.parametrize("germ, fragment", [
        (Germ(mu=2, branches=2), "parity"),
        (Germ(mu=2, branches=3, multiplicity=2), "exceed multiplicity"),
        (Germ(mu=1, branches=2, multiplicity=3), "below"),
        (Germ(mu=4, branches=1, tjurina=5), "exceeds mu"),
        (Germ(mu=4, branches=1, tjurina=3, weighted_homogeneous=True), "tjurina == mu"),
        (Germ(mu=5, branches=3, multiplicity=3, ordinary=True), "ordinary"),
    ])
    def test_problems(self, germ, fragment):
        assert any(fragment in p for p in germ.problems())


class TestGenus:
    def test_examples(self):
        assert genus(Component(4)) == 3
        assert genus(Component(3, (NODE,))) == 0
        assert genus(Component(3)) == 1
        assert genus(Component(1)) == 0
        assert genus(Component(4, (CUSP, CUSP, CUSP))) == 0

    def test_attached_germs_count(self):
        assert genus(Component(4), [ordinary_germ(3)]) == 0

    def test_negative(self):
        with pytest.raises(NegativeGenusError):
            genus(Component(6, (ordinary_germ(3),) * 4))


class TestValidation:
    def test_three_generic_lines(self):
        rep = validate_spec(generic_lines(3))
        assert rep.valid and not rep.warnings
        assert rep.roster.n_shared == {2: 3}
        for key in ("transverse_arrangement", "ordinary_mult_le_4", "nodal", "bezout",
                    "rational_components", "weighted_homogeneous"):
            assert rep.hypotheses[key], key

    def test_free_divisor(self):
        rep = validate_spec(load_spec("corpus:free_divisor"))
        assert rep.valid and not rep.warnings
        ro = rep.roster
        assert (ro.r, ro.N, ro.sum_genus) == (13, 15, 1)
        assert ro.n == {2: 12, 5: 9}
        assert ro.tau == 156
        assert ro.S1 + ro.S2 == 48
        assert rep.hypotheses["transverse_arrangement"]
        assert not rep.hypotheses["ordinary_mult_le_4"]

    def test_parity_error(self):
        rep = validate_spec(load_spec("corpus:negative_bad_parity_germ"))
        assert not rep.valid
        assert any("parity" in e for e in rep.errors)

    def test_delta_bound(self):
        rep = validate_spec(load_spec("corpus:negative_sextic_four_triple_points"))
        assert not rep.valid
        assert any("exceed" in e for e in rep.errors)

    def test_genus_check(self):
        rep = validate_spec(load_spec("corpus:negative_fermat_cubic_false_genus"))
        assert any("genus_check" in e for e in rep.errors)

    def test_bezout_excess_is_error(self):
        spec = lines(2, [(0, 1), (0, 1)])
        rep = validate_spec(spec)
        assert not rep.valid and any("Bezout" in e for e in rep.errors)

    def test_bezout_deficit_is_warning(self):
        rep = validate_spec(load_spec("corpus:negative_quartic_triple_point_and_line_missing_node"))
        assert rep.valid
        assert rep.warnings and not rep.hypotheses["bezout"]
        assert not rep.hypotheses["ordinary_mult_le_4"]

    def test_shared_point_needs_two_components(self):
        spec = CurveSpec((Component(1), Component(1)),
                         (SharedPoint((Incidence(0), Incidence(0))),))
        assert not validate_spec(spec).valid

    def test_component_out_of_range(self):
        spec = CurveSpec((Component(1), Component(1)),
                         (SharedPoint((Incidence(0), Incidence(5))),))
        assert any("out of range" in e for e in validate_spec(spec).errors)

    def test_tangential_point_without_mu_is_not_weighted_homogeneous(self):
        spec = CurveSpec((Component(2), Component(2)),
                         (SharedPoint((Incidence(0), Incidence(1)), transverse=False),
                          SharedPoint((Incidence(0), Incidence(1)), transverse=False)))
        rep = validate_spec(spec)
        assert rep.valid
        assert not rep.hypotheses["weighted_homogeneous"]
        assert rep.roster.tau is None


class TestRoster:
    def test_nodal_cubic(self):
        ro = singular_roster(CurveSpec((Component(3, (NODE,)),)))
        assert (ro.S1, ro.S2, ro.sum_genus, ro.r) == (1, 0, 0, 1)

    def test_two_lines(self):
        ro = singular_roster(generic_lines(2))
        assert (ro.S1, ro.S2) == (0, 1)

    def test_concurrent_lines(self):
        ro = singular_roster(lines(3, [(0, 1, 2)]))
        assert (ro.S1, ro.S2) == (0, 2)
        assert ro.b_types["b3_3"] == 1

    def test_nodal_sums_count_nodes(self):
        # for nodal curves S1 counts own nodes and S2 counts nodes between components
        spec = CurveSpec((Component(4, (NODE, NODE)), Component(1)),
                         tuple(SharedPoint((Incidence(0), Incidence(1))) for _ in range(4)))
        ro = singular_roster(spec)
        assert (ro.S1, ro.S2) == (2, 4)

    @pytest.mark.parametrize("partition", MULT4_PARTITIONS + [(1, 1)])
    def test_ordinary_point_contributes_m_minus_1(self, partition):
        degrees = [max(2 * m, 1) if m > 1 else 1 for m in partition]
        incs = tuple(Incidence(c, ordinary_germ(m)) if m > 1 else Incidence(c)
                     for c, m in enumerate(partition))
        spec = CurveSpec(tuple(Component(d) for d in degrees), (SharedPoint(incs),))
        ro = singular_roster(spec)
        assert ro.S1 + ro.S2 == sum(partition) - 1

    def test_mult4_b_types(self):
        spec = load_spec("corpus:quartic_triple_point_and_line")
        ro = validate_spec(spec).roster
        assert ro.b_types["b4_2"] == 1
        assert ro.n == {4: 1, 2: 1}

    def test_random_mult4_specs_use_only_small_points(self):
        rng = random.Random(5)
        for _ in range(50):
            rep = validate_spec(random_mult4_spec(rng))
            assert rep.valid
            assert max(rep.roster.n, default=2) <= 4
