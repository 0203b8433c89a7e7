import json
import random
from math import gcd

import pytest

from sdlab.errors import GcdNotOne, IndexOutOfRange, NotAMember, TooLarge
from sdlab.identities import (
    SuiteRanges,
    check_cor510,
    check_eq1,
    check_eq6,
    check_gap_values,
    check_prop1,
    check_prop1_ab,
    check_prop2,
    check_prop3,
    check_prop4,
    check_prop5,
    check_prop6,
    check_prop7,
    check_sawtooth_poly,
    coprime_pairs,
    random_semigroups,
    reports_to_csv,
    reports_to_json,
    run_suite,
    summarize,
)
from sdlab.semigroup import semigroup_from_generators, torus_semigroup


class TestEq1:
    def test_examples(self):
        assert check_eq1(2, 3, 12).verdict == "pass"
        assert check_eq1(1, 5, 10).verdict == "pass"
        assert check_eq1(3, 5, 30).verdict == "pass"

    def test_exact_mode_residual(self):
        r = check_eq1(4, 7)
        assert r.mode == "exact" and r.residual == 0.0

    def test_gcd_rejected(self):
        with pytest.raises(GcdNotOne):
            check_eq1(2, 4, 20)

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            check_eq1(3, 5, 10)


class TestEq6:
    def test_pairs_and_general(self):
        assert check_eq6(torus_semigroup(3, 5), 5).verdict == "pass"
        assert check_eq6(semigroup_from_generators([4, 7, 9]), 4).verdict == "pass"
        assert check_eq6(semigroup_from_generators([1]), 1).verdict == "pass"

    def test_in_suite(self):
        reports = run_suite(SuiteRanges(pairs_max=6, semigroups=1, identities=("eq6",)), seed=0)
        assert reports and all(r.identity_id == "eq6" and r.verdict == "pass" for r in reports)


class TestProp1:
    def test_examples(self):
        assert check_prop1(torus_semigroup(3, 5), 5, 2).verdict == "pass"
        assert check_prop1(semigroup_from_generators([1]), 1, 0).verdict == "pass"
        assert check_prop1(semigroup_from_generators([4, 7, 9]), 4, 1).verdict == "pass"

    def test_example_floor_values(self):
        S = semigroup_from_generators([4, 7, 9])
        assert S.apery(4)[1] == 9  # floor 2 matches gaps {1, 5} in class 1
        assert len([g for g in S.gaps if g % 4 == 1]) == 2

    def test_per_equation_ids(self):
        S = torus_semigroup(3, 5)
        assert check_prop1(S, 5, 2, eq=2).identity_id == "prop1.eq2"
        assert check_prop1(S, 5, 2, eq=3).identity_id == "prop1.eq3"

    def test_errors(self):
        S = torus_semigroup(3, 5)
        with pytest.raises(NotAMember):
            check_prop1(S, 4, 0)
        with pytest.raises(IndexOutOfRange):
            check_prop1(S, 5, 5)

    def test_modes_agree(self):
        rng = random.Random(31)
        for S in random_semigroups(4, rng):
            for s in [s for s in range(1, 13) if S.contains(s)]:
                for k in range(s):
                    exact = check_prop1(S, s, k, mode="exact")
                    fl = check_prop1(S, s, k, mode="float")
                    assert exact.verdict == fl.verdict == "pass"

    def test_float_stable_at_large_moduli(self):
        # the q^{-k} factor in the literal right side must not sink the float
        # route for the largest residues of the largest allowed modulus
        for gens in ([2, 3], [2, 29], [5, 7, 9]):
            S = semigroup_from_generators(gens)
            s = max(x for x in range(1, 26) if S.contains(x))
            for k in range(s):
                assert check_prop1(S, s, k, mode="float").verdict == "pass"


class TestProp1AB:
    def test_examples(self):
        assert check_prop1_ab(3, 5, 4).verdict == "pass"
        assert check_prop1_ab(5, 7, 0).verdict == "pass"
        assert check_prop1_ab(2, 3, 2).verdict == "pass"

    def test_all_classes_small_sweep(self):
        for a, b in coprime_pairs(10):
            for k in range(b):
                assert check_prop1_ab(a, b, k).verdict == "pass"
                assert check_prop1_ab(a, b, k, mode="float").verdict == "pass"

    def test_errors(self):
        with pytest.raises(GcdNotOne):
            check_prop1_ab(2, 4, 0)
        with pytest.raises(IndexOutOfRange):
            check_prop1_ab(2, 3, 3)


class TestProp2:
    def test_examples(self):
        assert check_prop2(3, 5, 1, 1).verdict == "pass"
        assert check_prop2(1, 9, 2, 2).verdict == "pass"  # V = 0, all floors vanish
        assert check_prop2(3, 5, 2, 2).verdict == "pass"

    def test_refusals(self):
        with pytest.raises(TooLarge):
            check_prop2(3, 13, 1, 2)
        with pytest.raises(TooLarge):
            check_prop2(2, 41, 1, 1)
        with pytest.raises(TooLarge):
            check_prop2(2, 5, 1, 4)
        with pytest.raises(ValueError):
            check_prop2(2, 5, 0, 1)
        with pytest.raises(GcdNotOne):
            check_prop2(3, 9, 1, 1)

    def test_large_b_linear_case(self):
        from sdlab.dedekind import voronoi_sum

        for a, b in ((3, 25), (7, 32), (11, 40)):
            r = check_prop2(a, b, 3, 1)
            assert r.verdict == "pass"
            assert r.residual <= 1e-8 * (1 + voronoi_sum(a, b, 3, 1))


class TestProp3:
    def test_examples(self):
        assert check_prop3(3, 5).verdict == "pass"
        assert check_prop3(1, 7).verdict == "pass"
        assert check_prop3(2, 3).verdict == "pass"

    def test_modes_agree(self):
        for a, b in coprime_pairs(9):
            assert check_prop3(a, b).verdict == check_prop3(a, b, mode="float").verdict == "pass"

    def test_float_stable_at_large_pairs(self):
        for a, b in ((19, 20), (17, 20), (7, 19)):
            assert check_prop3(a, b, mode="float").verdict == "pass"


class TestProp4:
    def test_r_identity(self):
        for a, b in ((3, 5), (2, 3), (1, 6), (4, 9)):
            r, _ = check_prop4(a, b)
            assert r.identity_id == "prop4.R11"
            assert r.verdict == "pass" and r.residual == 0.0

    def test_t_discrepancy_documented(self):
        _, t = check_prop4(3, 5)
        assert t.identity_id == "prop4.T11"
        assert t.verdict == "expected-discrepancy"
        assert t.notes and "display" in t.notes
        assert t.residual > 0

    def test_t_degenerate_agreement(self):
        # with a = 1 both sides vanish, so every reading of the display matches
        _, t = check_prop4(1, 5)
        assert t.verdict == "pass"


class TestProp5:
    def test_examples(self):
        assert check_prop5(3, 5).verdict == "pass"
        assert check_prop5(1, 8).verdict == "pass"
        assert check_prop5(2, 3).verdict == "pass"

    def test_modes_agree(self):
        for a, b in coprime_pairs(10):
            assert check_prop5(a, b).verdict == check_prop5(a, b, mode="float").verdict == "pass"


class TestGapValues:
    def test_genus_at_one(self):
        assert check_gap_values(3, 5, 0).verdict == "pass"
        assert check_gap_values(2, 3, 0).verdict == "pass"

    def test_roots(self):
        r = check_gap_values(3, 5, 1)
        assert r.verdict == "pass" and r.residual < 1e-9

    def test_index_checked(self):
        with pytest.raises(IndexOutOfRange):
            check_gap_values(3, 5, 5)


class TestProp6:
    def test_examples(self):
        assert check_prop6(3, 5).verdict == "pass"
        assert check_prop6(1, 9).verdict == "pass"
        assert check_prop6(2, 3).verdict == "pass"

    def test_exact_route(self):
        for a, b in coprime_pairs(12):
            assert check_prop6(a, b, mode="exact").verdict == "pass"

    def test_modes_agree(self):
        for a, b in coprime_pairs(15):
            assert check_prop6(a, b, mode="exact").verdict == check_prop6(a, b, mode="float").verdict

    def test_trefoil_values(self):
        # V_{1,1}(2,3) = 2, correction (a-1)(b-1)^2/4 = 1, so the root sum is 1
        from sdlab.dedekind import voronoi_sum

        assert voronoi_sum(2, 3, 1, 1) == 2


class TestProp7:
    def test_examples(self):
        assert check_prop7(torus_semigroup(3, 5), 2).verdict == "pass"
        assert check_prop7(torus_semigroup(3, 5), 1).verdict == "pass"
        assert check_prop7(semigroup_from_generators([4, 7, 9]), 3).verdict == "pass"

    def test_random_population(self):
        rng = random.Random(32)
        for S in random_semigroups(5, rng):
            for d in range(1, 9):
                if any(S.contains(d * s) for s in range(1, 21)):
                    assert check_prop7(S, d).verdict == "pass"


class TestExtraChecks:
    def test_cor510(self):
        for a, b in coprime_pairs(12):
            assert check_cor510(a, b).verdict == "pass"

    def test_sawtooth_poly(self):
        for a, b in coprime_pairs(12):
            assert check_sawtooth_poly(a, b).verdict == "pass"


class TestSuite:
    def small_ranges(self):
        return SuiteRanges(pairs_max=7, semigroups=2, member_max=8, d_max=4,
                           prop2_pairs_max=6, prop2_m1_pairs_max=8)

    def test_deterministic(self):
        r1 = run_suite(self.small_ranges(), seed=0)
        r2 = run_suite(self.small_ranges(), seed=0)
        assert reports_to_json(r1) == reports_to_json(r2)

    def test_canonical_order(self):
        reports = run_suite(self.small_ranges(), seed=0)
        keys = [(r.identity_id, sorted(r.params.items())) for r in reports]
        assert keys == sorted(keys)

    def test_threads_same_result(self):
        r1 = run_suite(self.small_ranges(), seed=0, threads=1)
        r2 = run_suite(self.small_ranges(), seed=0, threads=4)
        assert reports_to_json(r1) == reports_to_json(r2)

    def test_empty_ranges(self):
        assert run_suite(SuiteRanges(pairs_max=0), seed=0) == []

    def test_all_pass_except_t11(self):
        reports = run_suite(self.small_ranges(), seed=0)
        counts = summarize(reports)
        assert counts.get("fail", 0) == 0
        assert counts.get("expected-discrepancy", 0) > 0
        for r in reports:
            if r.verdict == "expected-discrepancy":
                assert r.identity_id == "prop4.T11"

    def test_identity_filter(self):
        reports = run_suite(SuiteRanges(pairs_max=8, semigroups=0, identities=("prop6",)), seed=0)
        assert reports and all(r.identity_id == "prop6.eq7" for r in reports)

    def test_seed_changes_population(self):
        ranges = SuiteRanges(pairs_max=0)
        rng_a = random.Random(0)
        rng_b = random.Random(1)
        gens_a = [S.generators for S in random_semigroups(5, rng_a)]
        gens_b = [S.generators for S in random_semigroups(5, rng_b)]
        assert gens_a != gens_b
        assert run_suite(ranges, seed=1) == []

    def test_exact_pass_residual_zero(self):
        for r in run_suite(self.small_ranges(), seed=0):
            if r.mode == "exact" and r.verdict == "pass":
                assert r.residual == 0.0


class TestSerialization:
    def reports(self):
        return run_suite(SuiteRanges(pairs_max=5, semigroups=1, member_max=6,
                                     prop2_pairs_max=4, prop2_m1_pairs_max=5), seed=0)

    def test_json_schema(self):
        objs = json.loads(reports_to_json(self.reports()))
        for obj in objs:
            assert set(obj) >= {"id", "params", "mode", "residual", "verdict", "elapsed_ms"}
            assert obj["elapsed_ms"] == 0.0  # deterministic by default

    def test_json_csv_parity(self):
        reports = self.reports()
        objs = json.loads(reports_to_json(reports))
        lines = reports_to_csv(reports).strip().split("\n")
        header = lines[0].split(",")[:6]
        assert header == ["id", "params", "mode", "residual", "verdict", "elapsed_ms"]
        assert len(lines) - 1 == len(objs)
        for line, obj in zip(lines[1:], objs):
            fields = line.split(",", 5)
            assert fields[0] == obj["id"]
            params = dict(kv.split("=") for kv in fields[1].split(";")) if fields[1] else {}
            assert {k: int(v) for k, v in params.items()} == obj["params"]
            assert fields[2] == obj["mode"]
            assert float(fields[3]) == obj["residual"]
            assert fields[4] == obj["verdict"]

    def test_timings_optional(self):
        reports = self.reports()
        with_timings = json.loads(reports_to_json(reports, include_timings=True))
        assert any(obj["elapsed_ms"] > 0 for obj in with_timings)


class TestRandomSemigroups:
    def test_spec_population(self):
        rng = random.Random(0)
        for S in random_semigroups(20, rng):
            assert 2 <= len(S.generators) <= 4
            assert all(2 <= g <= 30 for g in S.generators)
            g = 0
            for x in S.generators:
                g = gcd(g, x)
            assert g == 1

    def test_deterministic_from_seed(self):
        a = [S.generators for S in random_semigroups(6, random.Random(42))]
        b = [S.generators for S in random_semigroups(6, random.Random(42))]
        assert a == b
