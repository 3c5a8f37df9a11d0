import itertools
import json

import pytest

from hausnum.core import validate_topology
from hausnum.enumeration import (
    CACHE_VERSION,
    CountsTable,
    canonical_form,
    count_by_hausdorff,
    enumerate_classes,
    enumerate_labeled,
    labeled_and_t0_counts,
    naive_counts,
    naive_enumerate_families,
    stirling2,
    stirling_consistency,
)
from hausnum.errors import TooLarge
from hausnum.separation import hausdorff_number

LABELED = {1: 1, 2: 4, 3: 29, 4: 355, 5: 6942}
CLASSES = {1: 1, 2: 3, 3: 9, 4: 33, 5: 139}
T0_LABELED = {1: 1, 2: 3, 3: 19, 4: 219}


def permute_topology(t, perm):
    return validate_topology(
        t.n, [[perm[p] for p in u] for u in t.opens])


class TestEnumerateLabeled:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_totals(self, n):
        assert labeled_and_t0_counts(n)[0] == LABELED[n]

    def test_no_duplicates_and_all_valid(self):
        for n in (1, 2, 3, 4):
            seen = set()
            for t in enumerate_labeled(n):
                assert t not in seen
                seen.add(t)
                assert validate_topology(n, t.opens) == t
            assert len(seen) == LABELED[n]

    def test_no_duplicates_n5(self):
        seen = set()
        for t in enumerate_labeled(5):
            assert t not in seen
            seen.add(t)
        assert len(seen) == LABELED[5]

    def test_matches_naive_family_filter(self):
        # the naive open-family filter shares nothing with the preorder path
        for n in (1, 2, 3):
            naive = set(naive_enumerate_families(n))
            enumerated = {t.open_masks for t in enumerate_labeled(n)}
            assert naive == enumerated

    def test_naive_agreement_n4(self):
        assert naive_counts(4) == (LABELED[4], T0_LABELED[4])

    def test_deterministic_order(self):
        first = [t.open_masks for t in enumerate_labeled(3)]
        second = [t.open_masks for t in enumerate_labeled(3)]
        assert first == second

    def test_too_large(self):
        with pytest.raises(TooLarge):
            next(enumerate_labeled(8))
        with pytest.raises(TooLarge):
            big = validate_topology(8, [[], list(range(8))])
            canonical_form(big)


class TestCanonicalForm:
    def test_discrete_fixed_under_permutations(self):
        from hausnum.core import generate_from_subbasis

        t = generate_from_subbasis(4, [[p] for p in range(4)])
        forms = {canonical_form(permute_topology(t, perm)).encoding
                 for perm in itertools.permutations(range(4))}
        assert len(forms) == 1

    def test_two_block_base_point_irrelevant(self):
        from hausnum.constructions import two_block_topology

        forms = {canonical_form(two_block_topology(3, x0)).encoding
                 for x0 in range(3)}
        assert len(forms) == 1

    def test_sierpinski_vs_twin_and_discrete(self):
        sierpinski = validate_topology(2, [[], [0], [0, 1]])
        twin = validate_topology(2, [[], [1], [0, 1]])
        discrete = validate_topology(2, [[], [0], [1], [0, 1]])
        assert canonical_form(sierpinski) == canonical_form(twin)
        assert canonical_form(sierpinski) != canonical_form(discrete)

    def test_invariance_under_random_relabelings(self, rng):
        for n in (3, 4, 5):
            for t in itertools.islice(enumerate_labeled(n), 0, 60, 7):
                reference = canonical_form(t)
                for _ in range(5):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    assert canonical_form(permute_topology(t, perm)) == reference

    def test_invariance_at_six_points(self, rng):
        from hausnum.core import topology_from_preorder

        from conftest import random_preorder

        for _ in range(10):
            t = topology_from_preorder(random_preorder(6, rng))
            reference = canonical_form(t)
            for _ in range(4):
                perm = list(range(6))
                rng.shuffle(perm)
                assert canonical_form(permute_topology(t, perm)) == reference


class TestEnumerateClasses:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_class_counts(self, n):
        assert sum(1 for _ in enumerate_classes(n)) == CLASSES[n]

    def test_two_point_classes(self):
        reps = [t for _, t in enumerate_classes(2)]
        sizes = sorted(len(t.opens) for t in reps)
        assert sizes == [2, 3, 4]  # indiscrete, one Sierpinski rep, discrete

    def test_orbit_sizes_sum_to_labeled_total(self):
        import math

        for n in (2, 3, 4):
            orbit_total = 0
            for _, rep in enumerate_classes(n):
                orbit = set()
                for perm in itertools.permutations(range(n)):
                    orbit.add(permute_topology(rep, perm))
                assert math.factorial(n) % len(orbit) == 0
                orbit_total += len(orbit)
            assert orbit_total == LABELED[n]


class TestCountsTable:
    def test_two_points(self):
        table = count_by_hausdorff(2, use_cache=False)
        assert table.rows == {2: (1, 1), 3: (3, 2)}
        assert (table.labeled_total, table.class_total) == (4, 3)

    def test_one_point(self):
        table = count_by_hausdorff(1, use_cache=False)
        assert table.rows == {2: (1, 1)}

    def test_hausdorff_row_is_discrete_only(self):
        for n in (2, 3, 4):
            table = count_by_hausdorff(n, use_cache=False)
            assert table.rows[2] == (1, 1)

    def test_row_keys_within_bounds(self):
        for n in (1, 2, 3, 4, 5):
            table = count_by_hausdorff(n, use_cache=False)
            assert all(2 <= k <= n + 1 for k in table.rows)
            assert sum(c for c, _ in table.rows.values()) == table.labeled_total
            assert sum(c for _, c in table.rows.values()) == table.class_total

    def test_top_value_needs_point_meeting_all(self):
        # H = n+1 iff some point lies in every minimal neighborhood
        from hausnum.core import minimal_neighborhood

        for t in enumerate_labeled(3):
            top = hausdorff_number(t).value == 4
            meets_all = any(
                all(x in minimal_neighborhood(t, a) for a in range(3))
                for x in range(3))
            assert top == meets_all

    def test_t0_filter(self):
        table = count_by_hausdorff(3, use_cache=False, t0_only=True)
        assert table.labeled_total == T0_LABELED[3]
        assert table.t0_labeled_count == T0_LABELED[3]

    def test_parallel_equals_serial(self):
        serial = count_by_hausdorff(4, jobs=1, use_cache=False)
        parallel = count_by_hausdorff(4, jobs=4, use_cache=False)
        assert serial == parallel

    def test_csv_shape(self):
        table = count_by_hausdorff(2, use_cache=False)
        assert table.to_csv() == (
            "n,hausdorff_number,labeled_count,class_count\n"
            "2,2,1,1\n"
            "2,3,3,2\n")

    def test_json_roundtrip(self):
        table = count_by_hausdorff(3, use_cache=False)
        assert CountsTable.from_dict(table.to_dict()) == table

    def test_too_large(self):
        with pytest.raises(TooLarge):
            count_by_hausdorff(7, use_cache=False)


class TestCache:
    def test_cache_roundtrip(self, tmp_path):
        first = count_by_hausdorff(3, cache_dir=tmp_path)
        files = list(tmp_path.glob("counts-*.json"))
        assert len(files) == 1
        again = count_by_hausdorff(3, cache_dir=tmp_path)
        assert first == again

    def test_version_mismatch_recomputes(self, tmp_path):
        count_by_hausdorff(2, cache_dir=tmp_path)
        path = next(tmp_path.glob("counts-*.json"))
        doc = json.loads(path.read_text())
        doc["cache_version"] = "stale"
        doc["labeled_total"] = 999
        path.write_text(json.dumps(doc))
        table = count_by_hausdorff(2, cache_dir=tmp_path)
        assert table.labeled_total == 4
        refreshed = json.loads(path.read_text())
        assert refreshed["cache_version"] == CACHE_VERSION

    def test_env_var_controls_default(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TOPO_CACHE_DIR", str(tmp_path))
        count_by_hausdorff(2)
        assert list(tmp_path.glob("counts-*.json"))


class TestStirling:
    def test_small_values(self):
        assert stirling2(0, 0) == 1
        assert stirling2(1, 1) == 1
        assert stirling2(2, 1) == 1 and stirling2(2, 2) == 1
        assert stirling2(3, 2) == 3
        assert stirling2(4, 2) == 7
        assert stirling2(5, 3) == 25

    def test_against_recurrence_bruteforce(self):
        # count surjections / k! by direct partition enumeration at n = 4
        def partitions(items):
            if not items:
                yield []
                return
            head, *rest = items
            for smaller in partitions(rest):
                for i in range(len(smaller)):
                    yield smaller[:i] + [smaller[i] + [head]] + smaller[i + 1:]
                yield [[head]] + smaller

        for k in range(1, 5):
            count = sum(1 for p in partitions(list(range(4))) if len(p) == k)
            assert stirling2(4, k) == count

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_identity_holds(self, n):
        report = stirling_consistency(n)
        assert report.holds
        assert report.topology_count == LABELED[n]

    def test_reported_terms_n3(self):
        report = stirling_consistency(3)
        assert report.terms == [(1, 1, 1), (2, 3, 3), (3, 1, 19)]
        assert report.combination_total == 1 * 1 + 3 * 3 + 1 * 19 == 29
