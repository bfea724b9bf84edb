"""Summaries of single trees and of family parameter grids."""

from __future__ import annotations

import csv
import io

from .coloring import (HypothesisViolated, coloring_from_order, lower_bound,
                       verify)
from .families import PARAMS, FamilySpec, closed_forms, generate
from .oracle import OracleBudget, brute_force_hc
from .tree import Tree, diameter, is_db_half


def analyze(tree: Tree) -> dict:
    ci = tree.center_info
    out = {
        "n": tree.n,
        "max_degree": tree.max_degree,
        "diameter": diameter(tree),
        "centers": list(ci.centers),
        "epsilon": ci.epsilon,
        "epsilon_prime": ci.epsilon_prime,
        "total_level": tree.level_table.total,
        "db_half": is_db_half(tree),
    }
    try:
        out["lower_bound"] = lower_bound(tree)
    except HypothesisViolated:
        out["lower_bound"] = None
        out["note"] = "max degree < 3 or n < 4: level lower bound does not apply"
    return out


def family_row(spec: FamilySpec, budget: OracleBudget | None = None) -> dict:
    """One table row: closed forms next to what the constructed tree gives."""
    budget = budget or OracleBudget()
    inst = generate(spec)
    tree = inst.tree
    cf = closed_forms(spec)
    col = coloring_from_order(tree, inst.canonical_order)
    lb = lower_bound(tree)
    row = dict(spec.params)
    row.update(
        n=tree.n,
        total_level=tree.level_table.total,
        formula_hc=cf["hc"],
        lower_bound=lb,
        constructive_span=col.span,
        oracle_hc=None,
        order_source=inst.order_source,
        n_ok=tree.n == cf["n"],
        level_ok=tree.level_table.total == cf["total_level"],
        bound_ok=lb == cf["hc"],
        span_ok=col.span == cf["hc"],
        verify_ok=verify(tree, col).valid,
        oracle_ok=None,
    )
    if tree.n <= budget.max_n:
        # the oracle is checking the bound here, so it may not stop on it
        res = brute_force_hc(tree, budget, use_bound=False)
        row["oracle_hc"] = res.value
        row["oracle_ok"] = res.value == cf["hc"]
    return row


def family_table(specs: list[FamilySpec], budget: OracleBudget | None = None) -> list[dict]:
    return [family_row(s, budget) for s in specs]


def all_agree(rows: list[dict]) -> bool:
    keys = ("n_ok", "level_ok", "bound_ok", "span_ok", "verify_ok", "oracle_ok")
    return all(r[k] is not False for r in rows for k in keys)


def _cell(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def table_columns(kind: str) -> list[str]:
    return list(PARAMS[kind]) + [
        "n", "total_level", "formula_hc", "lower_bound", "constructive_span", "oracle_hc",
        "order_source", "n_ok", "level_ok", "bound_ok", "span_ok", "verify_ok", "oracle_ok",
    ]


def render(kind: str, rows: list[dict], fmt: str = "csv") -> str:
    cols = table_columns(kind)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r[c]) for c in cols])
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(cols) + " |", "|" + "|".join("---" for _ in cols) + "|"]
        for r in rows:
            lines.append("| " + " | ".join(_cell(r[c]) for c in cols) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
