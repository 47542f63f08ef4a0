"""Bound verifiers: check a hypothesis on a concrete instance and confirm
the claimed conclusion with the exact solvers.

Check ids (also the CLI ``--check`` tokens):

* ``theorem1`` -- join of a k- and a k'-choosable graph is (k+k')-choosable
  under a size condition on the maximum free sets.
* ``theorem2`` -- chi_list == chi when n <= delta*chi + sqrt(delta*chi) - (delta-1).
* ``theorem3`` -- chi_list <= ceil(Delta/delta) + 1 (greedy bound).
* ``theorem4`` -- for the all-d-regular family, chi == chi_list on H join K_n
  for all large n; reported as an observed equality prefix, never pass/fail.
* ``lemma2``  -- joining a free graph H' adds at most one to chi_list when
  (n'-1)(|V(H)|+n') <= n'*delta*(k+1).
* ``lemma4``  -- chi_list == chi when (n_1-1)*|V(H)| <= n_1*delta*chi, with
  n_1 the largest class of a canonical greedily-maximal optimal coloring.
* ``lemma5``  -- chi_R(H join K_n) >= (chi_R(H)+n)/d.

Inequalities involving square roots are decided in exact integer arithmetic.
A report never claims a conclusion failed when its hypothesis did not hold;
such instances are vacuous.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .constructive import greedy_list_color
from .exact import (
    Budget,
    BudgetExceededError,
    Coloring,
    DEFAULT_BUDGET,
    ListAssignment,
    chi,
    chi_list,
    is_k_colorable,
)
from .graphs import Graph, complete_graph, induced_subgraph, join, max_degree, parse_graph6, write_graph6
from .patterns import Pattern, is_free, max_free_induced_set, minimal_bad_masks, mask_is_free

__all__ = [
    "VerifyReport",
    "CorpusSummary",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_theorem4",
    "verify_lemma2",
    "verify_lemma4",
    "verify_lemma5",
    "run_corpus",
    "CHECKS",
    "UNARY_CHECKS",
    "BINARY_CHECKS",
]


@dataclass
class VerifyReport:
    """One verification record; serializes to a flat JSON object."""

    theorem: str
    instance: dict
    hypothesis_holds: bool
    hypothesis_values: dict
    conclusion_holds: bool | None
    vacuous: bool
    witnesses: dict = field(default_factory=dict)
    budget_exceeded: bool = False
    informational: bool = False
    note: str | None = None
    elapsed_s: float = 0.0

    @property
    def passed(self) -> bool:
        return self.hypothesis_holds and self.conclusion_holds is True

    @property
    def failed(self) -> bool:
        return self.hypothesis_holds and self.conclusion_holds is False

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "instance": self.instance,
            "hypothesis_holds": self.hypothesis_holds,
            "hypothesis_values": self.hypothesis_values,
            "conclusion_holds": self.conclusion_holds,
            "vacuous": self.vacuous,
            "witnesses": self.witnesses,
            "budget_exceeded": self.budget_exceeded,
            "informational": self.informational,
            "elapsed_s": round(self.elapsed_s, 6),
        }
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _instance(pattern: Pattern | None = None, **graphs_and_params) -> dict:
    out: dict = {}
    for key, val in graphs_and_params.items():
        if isinstance(val, Graph):
            out[key] = write_graph6(val)
        else:
            out[key] = val
    if pattern is not None:
        out["pattern"] = str(pattern)
    return out


def _coloring_witness(coloring: Coloring | None) -> list[list[int]] | None:
    if coloring is None:
        return None
    return [sorted(cls) for cls in coloring.classes]


def _sqrt_bound_holds(n: int, delta: int, chi_value: int) -> bool:
    """n <= delta*chi + sqrt(delta*chi) - (delta-1), decided exactly:
    with a = n - delta*chi + delta - 1, this is a <= 0 or a^2 <= delta*chi."""
    a = n - delta * chi_value + delta - 1
    return a <= 0 or a * a <= delta * chi_value


# ---------------------------------------------------------------------------


def verify_theorem2(
    graph: Graph, pattern: Pattern, budget: Budget = DEFAULT_BUDGET
) -> VerifyReport:
    """chi_list == chi whenever n is at most delta*chi + sqrt(delta*chi) - (delta-1)."""
    t0 = time.perf_counter()
    delta = pattern.delta
    chi_value = chi(graph, pattern, budget)
    values = {"n": graph.n, "delta": delta, "chi": chi_value}
    hyp = _sqrt_bound_holds(graph.n, delta, chi_value)
    report = VerifyReport(
        theorem="theorem2",
        instance=_instance(pattern, graph=graph),
        hypothesis_holds=hyp,
        hypothesis_values=values,
        conclusion_holds=None,
        vacuous=not hyp,
    )
    if hyp:
        try:
            cl = chi_list(graph, pattern, budget)
            values["chi_list"] = cl
            report.conclusion_holds = cl == chi_value
        except BudgetExceededError:
            report.budget_exceeded = True
    report.elapsed_s = time.perf_counter() - t0
    return report


def canonical_maximal_coloring(
    graph: Graph, pattern: Pattern, budget: Budget = DEFAULT_BUDGET
) -> Coloring:
    """Optimal coloring with greedily-maximal class sizes.

    The first class is the largest free set whose removal leaves the graph
    colorable with one class fewer (ties by lexicographically smallest vertex
    set), and so on.  This pins down the n_1 >= n_2 >= ... sizes the lemma4
    check needs.
    """
    k = chi(graph, pattern, budget)
    bad = minimal_bad_masks(graph, pattern)
    assignment = [-1] * graph.n
    remaining = list(range(graph.n))
    for cls_index in range(k):
        left = k - cls_index - 1
        chosen = None
        for size in range(len(remaining), 0, -1):
            for combo in combinations(remaining, size):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                if not mask_is_free(mask, bad):
                    continue
                rest = [v for v in remaining if v not in combo]
                if not rest:
                    chosen = combo
                    break
                if left == 0:
                    continue
                sub = induced_subgraph(graph, rest)
                if is_k_colorable(sub, pattern, left, budget) is not None:
                    chosen = combo
                    break
            if chosen:
                break
        if not chosen:
            raise AssertionError("optimal coloring must admit a next class")
        for v in chosen:
            assignment[v] = cls_index
        remaining = [v for v in remaining if v not in chosen]
        if not remaining:
            break
    return Coloring(tuple(assignment))


def verify_lemma4(
    graph: Graph, pattern: Pattern, budget: Budget = DEFAULT_BUDGET
) -> VerifyReport:
    """chi_list == chi whenever (n_1 - 1)*n <= n_1*delta*chi."""
    t0 = time.perf_counter()
    delta = pattern.delta
    chi_value = chi(graph, pattern, budget)
    coloring = canonical_maximal_coloring(graph, pattern, budget)
    n1 = coloring.class_sizes()[0]
    values = {"n": graph.n, "delta": delta, "chi": chi_value, "n1": n1}
    hyp = (n1 - 1) * graph.n <= n1 * delta * chi_value
    report = VerifyReport(
        theorem="lemma4",
        instance=_instance(pattern, graph=graph),
        hypothesis_holds=hyp,
        hypothesis_values=values,
        conclusion_holds=None,
        vacuous=not hyp,
        witnesses={"optimal_coloring": _coloring_witness(coloring)},
    )
    if hyp:
        try:
            cl = chi_list(graph, pattern, budget)
            values["chi_list"] = cl
            report.conclusion_holds = cl == chi_value
        except BudgetExceededError:
            report.budget_exceeded = True
    report.elapsed_s = time.perf_counter() - t0
    return report


def verify_theorem3(
    graph: Graph,
    pattern: Pattern,
    trials: int = 100,
    seed: int = 0,
    budget: Budget = DEFAULT_BUDGET,
    exhaustive: bool = True,
) -> VerifyReport:
    """Greedy coloring succeeds from any lists of size ceil(Delta/delta)+1.

    Runs seeded random list assignments through the greedy colorer; when the
    exhaustive budget allows it additionally confirms k-choosability by full
    enumeration.
    """
    from .exact import is_k_choosable

    t0 = time.perf_counter()
    delta = pattern.delta
    Delta = max_degree(graph)
    k = -(-Delta // delta) + 1
    values = {"n": graph.n, "delta": delta, "Delta": Delta, "k": k, "trials": trials}
    rng = random.Random(seed)
    universe = range(max(3 * graph.n, k))
    failure = None
    for _ in range(trials):
        lists = ListAssignment.of(
            [rng.sample(universe, k) for _ in range(graph.n)]
        )
        if greedy_list_color(graph, pattern, lists) is None:
            failure = lists
            break
    report = VerifyReport(
        theorem="theorem3",
        instance=_instance(pattern, graph=graph, trials=trials, seed=seed),
        hypothesis_holds=True,
        hypothesis_values=values,
        conclusion_holds=failure is None,
        vacuous=False,
    )
    if failure is not None:
        report.witnesses["failed_lists"] = [sorted(lv) for lv in failure.lists]
    elif exhaustive and graph.n >= 1:
        try:
            res = is_k_choosable(graph, pattern, k, budget)
            values["exhaustively_choosable"] = res.choosable
            if not res.choosable:
                report.conclusion_holds = False
                if res.witness is not None:
                    report.witnesses["failed_lists"] = [
                        sorted(lv) for lv in res.witness.lists
                    ]
        except BudgetExceededError:
            report.budget_exceeded = True
    report.elapsed_s = time.perf_counter() - t0
    return report


def verify_theorem1(
    graph: Graph, other: Graph, pattern: Pattern, budget: Budget = DEFAULT_BUDGET
) -> VerifyReport:
    """chi_list(H join H') <= chi_list(H) + chi_list(H') under a size
    condition on the maximum free sets of either side."""
    t0 = time.perf_counter()
    delta = pattern.delta
    report = VerifyReport(
        theorem="theorem1",
        instance=_instance(pattern, graph=graph, other=other),
        hypothesis_holds=False,
        hypothesis_values={},
        conclusion_holds=None,
        vacuous=True,
    )
    try:
        k = chi_list(graph, pattern, budget)
        k2 = chi_list(other, pattern, budget)
        s = len(max_free_induced_set(graph, pattern))
        s2 = len(max_free_induced_set(other, pattern))
        values = {
            "n": graph.n, "n2": other.n, "delta": delta,
            "chi_list": k, "chi_list2": k2, "s": s, "s2": s2,
        }
        report.hypothesis_values = values
        left1 = (s2 - 1) * (graph.n + s2) <= s2 * delta * (k + 1)
        left2 = (s - 1) * (other.n + s) <= s * delta * (k2 + 1)
        hyp = left1 or left2
        report.hypothesis_holds = hyp
        report.vacuous = not hyp
        if hyp:
            joined = join(graph, other)
            cl = chi_list(joined, pattern, budget)
            values["chi_list_join"] = cl
            report.conclusion_holds = cl <= k + k2
    except BudgetExceededError:
        report.budget_exceeded = True
        report.conclusion_holds = None
    report.elapsed_s = time.perf_counter() - t0
    return report


def verify_lemma2(
    graph: Graph, other: Graph, pattern: Pattern, budget: Budget = DEFAULT_BUDGET
) -> VerifyReport:
    """chi_list(H join H') <= chi_list(H) + 1 when H' is free and
    (n'-1)(|V(H)|+n') <= n'*delta*(chi_list(H)+1)."""
    t0 = time.perf_counter()
    delta = pattern.delta
    other_free = is_free(other, pattern)
    report = VerifyReport(
        theorem="lemma2",
        instance=_instance(pattern, graph=graph, other=other),
        hypothesis_holds=False,
        hypothesis_values={"other_free": other_free},
        conclusion_holds=None,
        vacuous=True,
    )
    try:
        if other_free and other.n >= 1:
            k = chi_list(graph, pattern, budget)
            n2 = other.n
            values = report.hypothesis_values
            values.update({"n": graph.n, "n2": n2, "delta": delta, "chi_list": k})
            hyp = (n2 - 1) * (graph.n + n2) <= n2 * delta * (k + 1)
            report.hypothesis_holds = hyp
            report.vacuous = not hyp
            if hyp:
                cl = chi_list(join(graph, other), pattern, budget)
                values["chi_list_join"] = cl
                report.conclusion_holds = cl <= k + 1
    except BudgetExceededError:
        report.budget_exceeded = True
        report.conclusion_holds = None
    report.elapsed_s = time.perf_counter() - t0
    return report


def verify_lemma5(
    graph: Graph, d: int, n: int, budget: Budget = DEFAULT_BUDGET
) -> VerifyReport:
    """chi_R(H join K_n) >= (chi_R(H) + n) / d for the all-d-regular family."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t0 = time.perf_counter()
    pattern = Pattern.all_regular(d)
    report = VerifyReport(
        theorem="lemma5",
        instance=_instance(pattern, graph=graph, d=d, n=n),
        hypothesis_holds=True,
        hypothesis_values={},
        conclusion_holds=None,
        vacuous=False,
    )
    try:
        base = chi(graph, pattern, budget)
        joined_chi = chi(join(graph, complete_graph(n)), pattern, budget)
        report.hypothesis_values = {
            "n_host": graph.n, "d": d, "n": n,
            "chi": base, "chi_join": joined_chi,
        }
        report.conclusion_holds = d * joined_chi >= base + n
    except BudgetExceededError:
        report.budget_exceeded = True
    report.elapsed_s = time.perf_counter() - t0
    return report


def verify_theorem4(
    graph: Graph, d: int, n_max: int, budget: Budget = DEFAULT_BUDGET
) -> VerifyReport:
    """Observed equality prefix of chi_R == chi_R^L on H join K_n, n = 1..n_max.

    Informational: the equality is only promised from some unknown n' on, so
    inequality at small n never falsifies anything and the report carries no
    pass/fail verdict.
    """
    t0 = time.perf_counter()
    pattern = Pattern.all_regular(d)
    rows = []
    for n in range(1, n_max + 1):
        row: dict = {"n": n}
        joined = join(graph, complete_graph(n))
        try:
            row["chi"] = chi(joined, pattern, budget)
            row["chi_list"] = chi_list(joined, pattern, budget)
            row["equal"] = row["chi"] == row["chi_list"]
        except BudgetExceededError:
            row["budget_exceeded"] = True
        rows.append(row)
    decided = [r for r in rows if "equal" in r]
    equal_from = None
    for r in reversed(decided):
        if r["equal"]:
            equal_from = r["n"]
        else:
            break
    report = VerifyReport(
        theorem="theorem4",
        instance=_instance(pattern, graph=graph, d=d, n_max=n_max),
        hypothesis_holds=True,
        hypothesis_values={
            "per_n": rows,
            "equality_from_n": equal_from,
            "tested": len(decided),
        },
        conclusion_holds=None,
        vacuous=False,
        informational=True,
        note=(
            "equality is asserted only for all sufficiently large n; "
            "inequality at small n does not falsify it"
        ),
        budget_exceeded=any("budget_exceeded" in r for r in rows),
    )
    report.elapsed_s = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# corpus runner

UNARY_CHECKS = ("theorem2", "theorem3", "lemma4")
BINARY_CHECKS = ("theorem1", "lemma2")
JOIN_CHECKS = ("lemma5", "theorem4")
CHECKS = UNARY_CHECKS + BINARY_CHECKS + JOIN_CHECKS


@dataclass
class CorpusSummary:
    instances: int = 0
    hypothesis_held: int = 0
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    informational: int = 0
    budget_skipped: int = 0

    def add(self, report: VerifyReport) -> None:
        self.instances += 1
        if report.informational:
            self.informational += 1
            if report.budget_exceeded:
                self.budget_skipped += 1
            return
        if report.hypothesis_holds:
            self.hypothesis_held += 1
            if report.conclusion_holds is True:
                self.passed += 1
            elif report.conclusion_holds is False:
                self.failed += 1
            elif report.budget_exceeded:
                self.budget_skipped += 1
        else:
            self.vacuous += 1

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "hypothesis_held": self.hypothesis_held,
            "passed": self.passed,
            "failed": self.failed,
            "vacuous": self.vacuous,
            "informational": self.informational,
            "budget_skipped": self.budget_skipped,
        }


def run_corpus(
    lines: Iterable[str],
    pattern: Pattern | None,
    checks: Iterable[str],
    budget: Budget = DEFAULT_BUDGET,
    d: int | None = None,
    n_max: int = 3,
    trials: int = 100,
    seed: int = 0,
    pair_vertex_cap: int = 10,
) -> Iterator[VerifyReport]:
    """Apply the selected checks to every graph of a graph6 corpus.

    Unary checks run per graph.  Binary checks run over all ordered pairs of
    corpus graphs whose vertex counts sum to at most ``pair_vertex_cap``.
    Join checks (lemma5, theorem4) run per graph with the given ``d`` (falls
    back to the pattern's d for a regular-family pattern).  Parse errors
    abort with the 1-based corpus line number; per-instance budget overruns
    are recorded in the report stream, not fatal.
    """
    checks = list(checks)
    for c in checks:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; known: {', '.join(CHECKS)}")
    graphs: list[Graph] = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            graphs.append(parse_graph6(text))
        except Exception as exc:
            raise ValueError(f"corpus line {lineno}: {exc}") from exc
    join_d = d
    if join_d is None and pattern is not None and pattern.regular_d is not None:
        join_d = pattern.regular_d
    for check in checks:
        if check in UNARY_CHECKS or check in BINARY_CHECKS:
            if pattern is None:
                raise ValueError(f"check {check!r} needs a pattern")
        if check in JOIN_CHECKS and join_d is None:
            raise ValueError(f"check {check!r} needs d (or a R:d pattern)")
        if check in UNARY_CHECKS:
            for g in graphs:
                if check == "theorem2":
                    yield verify_theorem2(g, pattern, budget)
                elif check == "theorem3":
                    yield verify_theorem3(g, pattern, trials, seed, budget)
                else:
                    yield verify_lemma4(g, pattern, budget)
        elif check in BINARY_CHECKS:
            for g in graphs:
                for h in graphs:
                    if g.n + h.n > pair_vertex_cap:
                        continue
                    if check == "theorem1":
                        yield verify_theorem1(g, h, pattern, budget)
                    else:
                        yield verify_lemma2(g, h, pattern, budget)
        else:
            for g in graphs:
                if check == "lemma5":
                    for n in range(1, n_max + 1):
                        yield verify_lemma5(g, join_d, n, budget)
                else:
                    yield verify_theorem4(g, join_d, n_max, budget)
