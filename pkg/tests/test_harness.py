import json

import pytest

from gfree import (
    Budget,
    complete_graph,
    cycle_graph,
    parse_pattern,
    path_graph,
    write_graph6,
)
from gfree.harness import (
    CHECKS,
    CorpusSummary,
    canonical_maximal_coloring,
    run_corpus,
    verify_lemma2,
    verify_lemma4,
    verify_lemma5,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
)

K2 = parse_pattern("K2")
K3 = parse_pattern("K3")


class TestTheorem2:
    def test_k4_triangle_passes(self):
        r = verify_theorem2(complete_graph(4), K3)
        assert r.hypothesis_holds and r.conclusion_holds and r.passed
        assert r.hypothesis_values["chi"] == 2
        assert r.hypothesis_values["chi_list"] == 2

    def test_c5_proper_vacuous(self):
        # n = 5 > 2*3 + sqrt-ish bound fails? chi = 3, delta = 1:
        # bound is 3 + sqrt(3) - 0 >= 5? no -> actually 5 > 4.73 so vacuous
        r = verify_theorem2(cycle_graph(5), K2)
        assert r.vacuous and not r.hypothesis_holds
        assert r.conclusion_holds is None and not r.passed and not r.failed

    def test_exact_sqrt_boundary(self):
        from gfree.harness import _sqrt_bound_holds

        # delta*chi = 4: bound is n <= 4 + 2 - (delta-1)
        assert _sqrt_bound_holds(6, 1, 4)
        assert not _sqrt_bound_holds(7, 1, 4)
        # delta*chi = 5: sqrt irrational, n = 7, delta = 1 -> 7 <= 5+sqrt5 fails
        assert not _sqrt_bound_holds(8, 1, 5)
        assert _sqrt_bound_holds(7, 1, 5)


class TestLemma4:
    def test_k4_triangle_values(self):
        r = verify_lemma4(complete_graph(4), K3)
        assert r.hypothesis_values["n1"] == 2
        # (2-1)*4 = 4 <= 2*2*2 = 8
        assert r.hypothesis_holds and r.conclusion_holds

    def test_canonical_coloring_is_optimal_and_greedy(self):
        c = canonical_maximal_coloring(cycle_graph(5), K2)
        assert c.num_classes == 3
        assert c.class_sizes() == [2, 2, 1]
        # deterministic
        assert canonical_maximal_coloring(cycle_graph(5), K2) == c


class TestTheorem3:
    def test_c5_proper(self):
        r = verify_theorem3(cycle_graph(5), K2, trials=50, seed=1)
        assert r.hypothesis_values["k"] == 3
        assert r.conclusion_holds
        assert r.hypothesis_values.get("exhaustively_choosable") is True

    def test_budget_flagged(self):
        r = verify_theorem3(
            cycle_graph(6), K2, trials=5, seed=1, budget=Budget(max_assignments=3)
        )
        assert r.budget_exceeded
        assert r.conclusion_holds is True  # trials passed; exhaustive skipped

    def test_seed_stable(self):
        a = verify_theorem3(cycle_graph(5), K2, trials=20, seed=9, exhaustive=False)
        b = verify_theorem3(cycle_graph(5), K2, trials=20, seed=9, exhaustive=False)
        assert a.to_dict()["hypothesis_values"] == b.to_dict()["hypothesis_values"]


class TestTheorem1:
    def test_k3_join_k1_proper(self):
        r = verify_theorem1(complete_graph(3), complete_graph(1), K2)
        assert r.hypothesis_holds
        assert r.hypothesis_values["chi_list_join"] == 4
        assert r.conclusion_holds


class TestLemma2:
    def test_c4_plus_k1(self):
        r = verify_lemma2(cycle_graph(4), complete_graph(1), K2)
        assert r.hypothesis_holds and r.conclusion_holds
        assert r.hypothesis_values["chi_list_join"] == 3

    def test_non_free_other_is_vacuous(self):
        r = verify_lemma2(cycle_graph(4), complete_graph(2), K2)
        assert r.vacuous and not r.hypothesis_holds


class TestLemma5:
    def test_c5_d2_n4(self):
        r = verify_lemma5(cycle_graph(5), 2, 4)
        assert r.hypothesis_values["chi"] == 2
        assert r.hypothesis_values["chi_join"] == 4
        assert r.conclusion_holds  # 2*4 = 8 >= 2+4 = 6

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            verify_lemma5(cycle_graph(5), 2, 0)


class TestTheorem4:
    def test_informational_contract(self):
        r = verify_theorem4(complete_graph(1), 1, 3)
        assert r.informational
        assert r.conclusion_holds is None
        assert not r.passed and not r.failed
        assert r.hypothesis_values["equality_from_n"] == 1
        rows = r.hypothesis_values["per_n"]
        assert [row["n"] for row in rows] == [1, 2, 3]
        assert all(row["equal"] for row in rows)


class TestReportSerialization:
    def test_json_roundtrip_schema(self):
        r = verify_theorem2(complete_graph(4), K3)
        d = json.loads(r.to_json())
        for key in (
            "theorem", "instance", "hypothesis_holds", "hypothesis_values",
            "conclusion_holds", "vacuous", "witnesses", "budget_exceeded",
            "informational", "elapsed_s",
        ):
            assert key in d
        assert d["instance"]["graph"] == write_graph6(complete_graph(4))
        assert d["instance"]["pattern"] == "K3"


class TestRunCorpus:
    CORPUS = ["C~", "Dhc", "Bg"]  # K4, C5, P3

    def test_unary_counts(self):
        reports = list(run_corpus(self.CORPUS, K2, ["theorem2"]))
        assert len(reports) == 3
        summary = CorpusSummary()
        for r in reports:
            summary.add(r)
        assert summary.instances == 3
        assert summary.failed == 0
        assert summary.passed + summary.vacuous + summary.budget_skipped == 3

    def test_binary_pair_cap(self):
        reports = list(
            run_corpus(self.CORPUS, K2, ["lemma2"], pair_vertex_cap=7)
        )
        # ordered pairs with n_i + n_j <= 7: sizes are 4, 5, 3
        sizes = [4, 5, 3]
        expected = sum(
            1 for a in sizes for b in sizes if a + b <= 7
        )
        assert len(reports) == expected

    def test_join_checks_need_d(self):
        with pytest.raises(ValueError, match="needs d"):
            list(run_corpus(self.CORPUS, K2, ["lemma5"]))
        reports = list(run_corpus(self.CORPUS, None, ["lemma5"], d=2, n_max=2))
        assert len(reports) == 6
        assert all(r.conclusion_holds for r in reports)

    def test_pattern_d_fallback(self):
        reports = list(
            run_corpus(["BW"], parse_pattern("R:2"), ["theorem4"], n_max=2)
        )
        assert len(reports) == 1 and reports[0].informational

    def test_malformed_line_aborts_with_lineno(self):
        with pytest.raises(ValueError, match="corpus line 2"):
            list(run_corpus(["C~", "~~~bad"], K2, ["theorem2"]))

    def test_unknown_check_rejected(self):
        with pytest.raises(ValueError, match="unknown check"):
            list(run_corpus(self.CORPUS, K2, ["theorem9"]))

    def test_checks_registry(self):
        assert set(CHECKS) == {
            "theorem1", "theorem2", "theorem3", "theorem4",
            "lemma2", "lemma4", "lemma5",
        }
