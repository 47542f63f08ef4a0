"""Command-line front end.

Exit codes are a contract: 0 success, 1 input error, 2 budget exhaustion,
3 a verifier found a non-vacuous failing instance.
"""

from __future__ import annotations

import json
import os
import sys

import click

from .constructive import greedy_list_color, hall_color_or_violator
from .exact import (
    Budget,
    BudgetExceededError,
    ListAssignment,
    chi,
    chi_list,
    is_k_choosable,
    is_k_colorable,
)
from .graphs import Graph, Graph6Error, parse_graph6
from .harness import CHECKS, CorpusSummary, run_corpus
from .patterns import Pattern, PatternError, parse_pattern

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_FALSIFIED = 3

DEFAULT_SEED = 20240601


class CliError(click.ClickException):
    exit_code = EXIT_INPUT


def _budget_from(budget_nodes: int | None, budget_assignments: int | None) -> Budget:
    env = os.environ.get("GFREE_BUDGET_NODES")
    nodes = budget_nodes if budget_nodes is not None else (int(env) if env else None)
    kwargs = {}
    if nodes is not None:
        kwargs["max_nodes"] = nodes
    if budget_assignments is not None:
        kwargs["max_assignments"] = budget_assignments
    try:
        return Budget(**kwargs)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _parse_graph_arg(text: str) -> Graph:
    if text.startswith("g6:"):
        text = text[3:]
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise CliError(f"bad graph6 input: {exc}") from exc


def _parse_pattern_arg(text: str) -> Pattern:
    try:
        return parse_pattern(text)
    except (PatternError, Graph6Error) as exc:
        raise CliError(f"bad pattern: {exc}") from exc


def _parse_lists_arg(text: str, n: int) -> ListAssignment:
    """Lists as semicolon-separated comma lists, one entry per vertex:
    "0,1;0,2;1,2"."""
    parts = [p for p in text.split(";") if p.strip()]
    if len(parts) != n:
        raise CliError(f"expected {n} lists, got {len(parts)}")
    try:
        return ListAssignment.of(
            [{int(c) for c in part.split(",")} for part in parts]
        )
    except ValueError as exc:
        raise CliError(f"bad lists: {exc}") from exc


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for key, val in payload.items():
            click.echo(f"{key}: {val}")


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "plain", "csv"]), default="plain",
    show_default=True, help="Output format.")
_budget_options = [
    click.option("--budget-nodes", type=int, default=None,
                 help="Max placements per coloring search "
                      "(default 10^7, or GFREE_BUDGET_NODES)."),
    click.option("--budget-assignments", type=int, default=None,
                 help="Max reduced list assignments per choosability call "
                      "(default 10^6)."),
]


def _with_budget(cmd):
    for opt in _budget_options:
        cmd = opt(cmd)
    return cmd


@click.group()
@click.version_option(package_name="gfree-coloring", prog_name="gfree")
def main() -> None:
    """Conditional (pattern-free) graph coloring toolbox."""


@main.command("chi")
@click.option("--graph", "graph_text", required=True, help="graph6 string (optional g6: prefix).")
@click.option("--pattern", "pattern_text", required=True, help="Pattern literal: K3, C5, P4, R:d, g6:<s>.")
@click.option("--list", "with_list", is_flag=True, help="Also compute the choosability number.")
@_with_budget
@_format_option
def cmd_chi(graph_text, pattern_text, with_list, budget_nodes, budget_assignments, fmt):
    """Free chromatic number (and optionally choosability number)."""
    graph = _parse_graph_arg(graph_text)
    pattern = _parse_pattern_arg(pattern_text)
    budget = _budget_from(budget_nodes, budget_assignments)
    try:
        value = chi(graph, pattern, budget)
        payload = {"n": graph.n, "pattern": str(pattern), "chi": value}
        coloring = is_k_colorable(graph, pattern, value, budget)
        payload["coloring"] = [sorted(c) for c in coloring.classes]
        if with_list:
            payload["chi_list"] = chi_list(graph, pattern, budget)
    except BudgetExceededError as exc:
        click.echo(f"budget exhausted: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    _emit(payload, fmt)


@main.command("choosable")
@click.option("--graph", "graph_text", required=True)
@click.option("--pattern", "pattern_text", required=True)
@click.option("--k", required=True, type=int, help="List size to test.")
@_with_budget
@_format_option
def cmd_choosable(graph_text, pattern_text, k, budget_nodes, budget_assignments, fmt):
    """Test k-choosability; prints a violating list assignment if any."""
    graph = _parse_graph_arg(graph_text)
    pattern = _parse_pattern_arg(pattern_text)
    budget = _budget_from(budget_nodes, budget_assignments)
    try:
        res = is_k_choosable(graph, pattern, k, budget)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    except BudgetExceededError as exc:
        click.echo(f"budget exhausted: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    payload = {"n": graph.n, "pattern": str(pattern), "k": k, "choosable": res.choosable,
               "assignments_tested": res.assignments_tested}
    if res.witness is not None:
        payload["witness_lists"] = [sorted(lv) for lv in res.witness.lists]
    _emit(payload, fmt)


@main.command("color")
@click.option("--graph", "graph_text", required=True)
@click.option("--pattern", "pattern_text", required=True)
@click.option("--k", required=True, type=int, help="Number of classes.")
@_with_budget
@_format_option
def cmd_color(graph_text, pattern_text, k, budget_nodes, budget_assignments, fmt):
    """Find a k-class free coloring, if one exists."""
    graph = _parse_graph_arg(graph_text)
    pattern = _parse_pattern_arg(pattern_text)
    budget = _budget_from(budget_nodes, budget_assignments)
    try:
        coloring = is_k_colorable(graph, pattern, k, budget)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    except BudgetExceededError as exc:
        click.echo(f"budget exhausted: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    payload = {"n": graph.n, "pattern": str(pattern), "k": k,
               "colorable": coloring is not None}
    if coloring is not None:
        payload["coloring"] = [sorted(c) for c in coloring.classes]
    _emit(payload, fmt)


@main.command("greedy")
@click.option("--graph", "graph_text", required=True)
@click.option("--pattern", "pattern_text", required=True)
@click.option("--lists", "lists_text", default=None,
              help='Explicit lists, e.g. "0,1;0,2;1,2" (one entry per vertex).')
@click.option("--k", type=int, default=None, help="Random list size (with --seed).")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@_format_option
def cmd_greedy(graph_text, pattern_text, lists_text, k, seed, fmt):
    """Greedy sequential list coloring in smallest-last order."""
    import random

    graph = _parse_graph_arg(graph_text)
    pattern = _parse_pattern_arg(pattern_text)
    if (lists_text is None) == (k is None):
        raise CliError("provide exactly one of --lists or --k")
    if lists_text is not None:
        lists = _parse_lists_arg(lists_text, graph.n)
    else:
        rng = random.Random(seed)
        universe = range(max(3 * graph.n, k))
        lists = ListAssignment.of([rng.sample(universe, k) for _ in range(graph.n)])
    coloring = greedy_list_color(graph, pattern, lists)
    payload = {"n": graph.n, "pattern": str(pattern),
               "lists": [sorted(lv) for lv in lists.lists],
               "colored": coloring is not None}
    if coloring is not None:
        payload["coloring"] = [sorted(c) for c in coloring.classes]
    _emit(payload, fmt)


@main.command("hall")
@click.option("--graph", "graph_text", required=True)
@click.option("--lists", "lists_text", required=True)
@click.option("--delta", required=True, type=int)
@_format_option
def cmd_hall(graph_text, lists_text, delta, fmt):
    """Matching-based coloring with classes of size at most delta, or a
    deficient set certifying impossibility."""
    graph = _parse_graph_arg(graph_text)
    lists = _parse_lists_arg(lists_text, graph.n)
    if delta < 1:
        raise CliError("delta must be >= 1")
    outcome = hall_color_or_violator(graph, lists, delta)
    payload = {"n": graph.n, "delta": delta}
    if outcome.coloring is not None:
        payload["outcome"] = "coloring"
        payload["coloring"] = [sorted(c) for c in outcome.coloring.classes]
    else:
        violator = sorted(outcome.violator)
        payload["outcome"] = "violator"
        payload["violator"] = violator
        payload["violator_size"] = len(violator)
        payload["list_union_size"] = len(lists.union_over(violator))
    _emit(payload, fmt)


_CSV_FIELDS = ["theorem", "hypothesis_holds", "conclusion_holds", "vacuous",
               "budget_exceeded", "informational", "elapsed_s"]


@main.command("verify")
@click.option("--corpus", "corpus_path", type=click.Path(), default=None,
              help="graph6 corpus file, one graph per line.")
@click.option("--graph", "graph_text", default=None, help="Single inline graph6 input.")
@click.option("--pattern", "pattern_text", default=None)
@click.option("--check", "checks", multiple=True, required=True,
              type=click.Choice(CHECKS), help="Repeatable.")
@click.option("--d", type=int, default=None, help="Family degree for lemma5/theorem4.")
@click.option("--n-max", type=int, default=3, show_default=True)
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--pair-cap", type=int, default=10, show_default=True,
              help="Max summed vertex count for binary-check pairs.")
@_with_budget
@_format_option
def cmd_verify(corpus_path, graph_text, pattern_text, checks, d, n_max, trials,
               seed, pair_cap, budget_nodes, budget_assignments, fmt):
    """Run verifiers over a corpus; reports as JSON lines on stdout, summary
    on stderr.  Exits 3 if any non-vacuous conclusion fails."""
    if (corpus_path is None) == (graph_text is None):
        raise CliError("provide exactly one of --corpus or --graph")
    if corpus_path is not None:
        try:
            with open(corpus_path, "r", encoding="ascii") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            click.echo(f"cannot read corpus: {exc}", err=True)
            sys.exit(EXIT_INPUT)
    else:
        text = graph_text[3:] if graph_text.startswith("g6:") else graph_text
        lines = [text]
    pattern = _parse_pattern_arg(pattern_text) if pattern_text else None
    budget = _budget_from(budget_nodes, budget_assignments)
    summary = CorpusSummary()
    try:
        stream = run_corpus(lines, pattern, checks, budget=budget, d=d,
                            n_max=n_max, trials=trials, seed=seed,
                            pair_vertex_cap=pair_cap)
        for report in stream:
            summary.add(report)
            if fmt == "csv":
                row = report.to_dict()
                click.echo(",".join(str(row.get(f, "")) for f in _CSV_FIELDS))
            elif fmt == "plain":
                verdict = ("FAIL" if report.failed else
                           "pass" if report.passed else
                           "info" if report.informational else
                           "budget" if report.budget_exceeded else "vacuous")
                click.echo(f"{report.theorem} {report.instance} -> {verdict}")
            else:
                click.echo(report.to_json())
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    click.echo(json.dumps({"summary": summary.to_dict()}, sort_keys=True), err=True)
    if summary.failed:
        click.echo("NON-VACUOUS FAILURE: a checked bound does not hold on an "
                   "instance above — please report it.", err=True)
        sys.exit(EXIT_FALSIFIED)
    sys.exit(EXIT_OK)


if __name__ == "__main__":  # pragma: no cover
    main()
