import pytest

from hausnum.constructions import filtered_four_point, two_block_topology
from hausnum.core import PointSet, generate_from_subbasis, subspace, validate_topology
from hausnum.enumeration import enumerate_labeled
from hausnum.errors import BadParameter, SetTooSmall, TooLarge
from hausnum.separation import (
    analysis_report,
    axioms_report,
    hausdorff_number,
    hausdorff_number_oracle,
    is_n_hausdorff,
    is_separable,
    verify_witness,
)


def topo(n, *sets):
    return validate_topology(n, [list(s) for s in sets])


def discrete(n):
    return generate_from_subbasis(n, [[p] for p in range(n)])


def indiscrete(n):
    return topo(n, (), tuple(range(n)))


EXAMPLE_3PT = topo(3, (), (0,), (1, 2), (0, 1, 2))


class TestIsSeparable:
    def test_three_point_full_set(self):
        decision = is_separable(EXAMPLE_3PT, [0, 1, 2])
        assert decision.separable
        assert verify_witness(EXAMPLE_3PT, [0, 1, 2], decision.witness)
        opens = dict(decision.witness.assignments)
        assert opens[0].mask == 0b001
        assert opens[1].mask == 0b110
        assert opens[2].mask == 0b110

    def test_discrete_pairs(self):
        t = discrete(4)
        for a in range(4):
            for b in range(a + 1, 4):
                decision = is_separable(t, [a, b])
                assert decision.separable
                assert verify_witness(t, [a, b], decision.witness)

    def test_three_point_yz_non_separable(self):
        decision = is_separable(EXAMPLE_3PT, [1, 2])
        assert not decision.separable
        # the certificate lies in every open containing 1 or 2
        for u in EXAMPLE_3PT.opens:
            if 1 in u or 2 in u:
                assert decision.certificate in u

    def test_too_small(self):
        with pytest.raises(SetTooSmall):
            is_separable(EXAMPLE_3PT, [1])

    def test_monotone_in_supersets(self):
        # A separable and A ⊆ B implies B separable, exhaustively at n <= 4
        for n in (2, 3, 4):
            for t in enumerate_labeled(n):
                separable_masks = [
                    a for a in range(1 << n)
                    if a.bit_count() >= 2 and is_separable(t, PointSet(n, a)).separable
                ]
                for a in separable_masks:
                    for b in range(1 << n):
                        if b & a == a and b != a:
                            assert is_separable(t, PointSet(n, b)).separable


class TestHausdorffNumber:
    def test_three_point_example(self):
        assert hausdorff_number(EXAMPLE_3PT).value == 3

    def test_discrete_is_two(self):
        for n in (2, 3, 5):
            assert hausdorff_number(discrete(n)).value == 2

    def test_histogram_at_two_points(self):
        values = sorted(hausdorff_number(t).value for t in enumerate_labeled(2))
        assert values == [2, 3, 3, 3]

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_two_block_value_is_n(self, n):
        assert hausdorff_number(two_block_topology(n)).value == n

    def test_largest_nonseparable_invariants(self):
        for t in enumerate_labeled(3):
            h = hausdorff_number(t)
            largest = h.largest_nonseparable
            assert len(largest) == h.value - 1
            if len(largest) >= 2:
                assert not is_separable(t, largest).separable
            # every strictly larger set is separable
            for mask in range(1 << 3):
                if mask.bit_count() >= h.value:
                    assert is_separable(t, PointSet(3, mask)).separable

    def test_one_point_convention(self):
        assert hausdorff_number(topo(1, (), (0,))).value == 2


class TestOracle:
    def test_matches_closed_form_on_three_points(self):
        for t in enumerate_labeled(3):
            assert hausdorff_number_oracle(t).value == hausdorff_number(t).value

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_indiscrete_is_n_plus_one(self, n):
        assert hausdorff_number_oracle(indiscrete(n)).value == n + 1

    def test_discrete_three(self):
        assert hausdorff_number_oracle(discrete(3)).value == 2

    def test_refuses_large_spaces(self):
        with pytest.raises(TooLarge):
            hausdorff_number_oracle(two_block_topology(6))

    def test_oracle_largest_set_invariants(self):
        for t in enumerate_labeled(3):
            h = hausdorff_number_oracle(t)
            assert len(h.largest_nonseparable) == h.value - 1
            if len(h.largest_nonseparable) >= 2:
                assert not is_separable(t, h.largest_nonseparable).separable


class TestIsNHausdorff:
    def test_three_point_example(self):
        assert is_n_hausdorff(EXAMPLE_3PT, 3)
        assert not is_n_hausdorff(EXAMPLE_3PT, 2)

    def test_discrete_five(self):
        assert is_n_hausdorff(discrete(5), 2)

    def test_doubled_on_six(self):
        from hausnum.constructions import doubled_point_topology

        assert is_n_hausdorff(doubled_point_topology(6), 3)

    def test_bad_bound(self):
        with pytest.raises(BadParameter):
            is_n_hausdorff(EXAMPLE_3PT, 1)

    def test_monotone_in_bound(self):
        for t in enumerate_labeled(3):
            for k in range(2, 5):
                if is_n_hausdorff(t, k):
                    assert is_n_hausdorff(t, k + 1)


class TestAxiomsReport:
    def test_discrete_all_true(self):
        report = axioms_report(discrete(3))
        assert all([report.t0, report.t1, report.hausdorff, report.regular,
                    report.normal, report.discrete, report.compact])

    def test_hausdorff_implies_discrete_small(self):
        for n in (2, 3):
            for t in enumerate_labeled(n):
                if axioms_report(t).hausdorff:
                    assert axioms_report(t).discrete

    def test_filtered_four_point_flags(self):
        report = axioms_report(filtered_four_point())
        assert report.t0
        assert not report.t1
        assert not report.hausdorff
        assert not report.discrete
        assert report.compact

    def test_hausdorff_flag_iff_h_two(self):
        for t in enumerate_labeled(3):
            assert axioms_report(t).hausdorff == (hausdorff_number(t).value == 2)

    def test_regular_normal_against_bruteforce(self):
        # brute force over explicit open pairs on every 3-point topology
        for t in enumerate_labeled(3):
            full = (1 << 3) - 1
            closed = [u ^ full for u in t.open_masks]
            report = axioms_report(t)

            def disjoint_opens_exist(around_mask, covering):
                return any(
                    u & v == 0 and around_mask & u == around_mask and covering & ~v == 0
                    for u in t.open_masks for v in t.open_masks)

            regular = all(
                disjoint_opens_exist(1 << a, c)
                for c in closed for a in range(3) if not c >> a & 1)
            normal = all(
                any(u & v == 0 and c1 & ~u == 0 and c2 & ~v == 0
                    for u in t.open_masks for v in t.open_masks)
                for c1 in closed for c2 in closed if c1 & c2 == 0)
            assert report.regular == regular
            assert report.normal == normal


class TestSubspaceMonotonicity:
    def test_h_never_grows_under_subspaces(self):
        for n in (2, 3):
            for t in enumerate_labeled(n):
                h = hausdorff_number(t).value
                for mask in range(1, 1 << n):
                    if mask.bit_count() < 2:
                        continue
                    sub = subspace(t, PointSet(n, mask)).topology
                    assert hausdorff_number(sub).value <= h


class TestAnalysisReport:
    def test_stable_field_names(self):
        report = analysis_report(EXAMPLE_3PT)
        assert set(report) == {
            "n", "hausdorff_number", "largest_nonseparable", "t0", "t1",
            "hausdorff", "regular", "normal", "discrete", "compact",
        }
        assert report["hausdorff_number"] == 3
        assert report["largest_nonseparable"] == [1, 2]
        assert report["compact"] is True
