"""Hamiltonian colorings of trees: verification, the level-based lower
bound, qualified vertex orders and the colorings they induce.

A coloring ``c`` of a tree on ``n`` vertices is hamiltonian when
``D(u, v) + |c(u) - c(v)| >= n - 1`` for every pair of distinct vertices.
Colors start at 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from .tree import Tree, branch_of, is_db_half


class ColoringError(ValueError):
    pass


class MissingVertexColor(ColoringError):
    pass


class HypothesisViolated(ValueError):
    """The tree has fewer than 4 vertices or maximum degree below 3."""


class NotAPermutation(ValueError):
    pass


class NegativeIncrement(ValueError):
    pass


class NoQualifiedOrder(LookupError):
    """No vertex order meets the sufficient condition.

    This says nothing about whether the lower bound is attained.
    """


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def span(self) -> int:
        return max(self.colors, default=0)

    def __getitem__(self, u):
        return self.colors[u]

    def __len__(self):
        return len(self.colors)

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.colors))


class Violation(NamedTuple):
    u: int
    v: int
    slack: int  # D + |c(u)-c(v)| - (n-1), negative on violation


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple[Violation, ...]

    def __bool__(self):
        return self.valid


@dataclass(frozen=True)
class OrderConditionReport:
    cond_endpoints: bool
    cond_branches: bool
    cond_gap: bool
    first_violation: tuple[int, str] | None = None

    @property
    def ok(self) -> bool:
        return self.cond_endpoints and self.cond_branches and self.cond_gap


@dataclass(frozen=True)
class HCResult:
    value: int
    order: tuple[int, ...]
    coloring: Coloring


def _as_colors(tree: Tree, coloring) -> tuple[int, ...]:
    if isinstance(coloring, Coloring):
        colors = coloring.colors
    elif isinstance(coloring, Mapping):
        missing = [u for u in range(tree.n) if u not in coloring]
        if missing:
            raise MissingVertexColor(f"no color for vertices {missing}")
        colors = tuple(int(coloring[u]) for u in range(tree.n))
    else:
        colors = tuple(int(x) for x in coloring)
    if len(colors) != tree.n:
        raise MissingVertexColor(f"expected {tree.n} colors, got {len(colors)}")
    if any(x < 0 for x in colors):
        raise ColoringError("colors must be non-negative")
    return colors


def verify(tree: Tree, coloring) -> VerifyReport:
    """Check every unordered pair against the hamiltonian condition."""
    colors = _as_colors(tree, coloring)
    n = tree.n
    dist = tree.distances
    bad = []
    for u in range(n):
        for v in range(u + 1, n):
            slack = dist[u][v] + abs(colors[u] - colors[v]) - (n - 1)
            if slack < 0:
                bad.append(Violation(u, v, slack))
    return VerifyReport(not bad, tuple(bad))


def check_hypotheses(tree: Tree) -> None:
    if tree.n < 4 or tree.max_degree < 3:
        raise HypothesisViolated(
            f"needs n >= 4 and max degree >= 3 (n={tree.n}, max degree={tree.max_degree})"
        )


def lower_bound(tree: Tree) -> int:
    """``(n-1)(n-1-eps) + eps' - 2 * total_level``, valid for n >= 4, max degree >= 3."""
    check_hypotheses(tree)
    n = tree.n
    ci = tree.center_info
    return (n - 1) * (n - 1 - ci.epsilon) + ci.epsilon_prime - 2 * tree.level_table.total


def _check_perm(tree: Tree, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(int(u) for u in order)
    if sorted(order) != list(range(tree.n)):
        raise NotAPermutation(f"order is not a permutation of 0..{tree.n - 1}")
    return order


def branch_labels(tree: Tree) -> list[int]:
    """Label per vertex such that consecutive vertices of a qualified order
    must carry different labels: the branch anchor with one center (-1 for
    the center itself), the side with two centers."""
    ci = tree.center_info
    out = []
    for u in range(tree.n):
        b = branch_of(tree, None, u)
        if len(ci.centers) == 2:
            out.append(b.side)
        else:
            out.append(-1 if b.anchor is None else b.anchor)
    return out


def check_order(tree: Tree, order: Sequence[int], require_gap: bool | None = None) -> OrderConditionReport:
    """Test the three ordering conditions that make the induced coloring optimal.

    ``require_gap=None`` checks the consecutive-distance condition only when
    the tree is not DB(n/2), where it holds automatically.
    """
    order = _check_perm(tree, order)
    n = tree.n
    if require_gap is None:
        require_gap = not is_db_half(tree)
    cs = tree.center_info.centers
    first = None

    if len(cs) == 1:
        w = cs[0]
        ends = order[0] == w and order[-1] in tree.adjacency[w]
        why = "u0 must be the center and the last vertex adjacent to it"
    else:
        ends = {order[0], order[-1]} == set(cs)
        why = "first and last vertices must be the two centers"
    if not ends:
        first = (0, why)

    labels = branch_labels(tree)
    branches = True
    gap = True
    dist = tree.distances
    for i in range(n - 1):
        a, b = order[i], order[i + 1]
        if labels[a] == labels[b]:
            if branches and first is None:
                kind = "side" if len(cs) == 2 else "branch"
                first = (i, f"u{i}={a} and u{i + 1}={b} share a {kind}")
            branches = False
        if require_gap and 2 * dist[a][b] > n:
            if gap and first is None:
                first = (i, f"D(u{i}, u{i + 1}) = {dist[a][b]} exceeds n/2")
            gap = False
    return OrderConditionReport(ends, branches, gap, first)


def coloring_from_order(tree: Tree, order: Sequence[int]) -> Coloring:
    """Colors from ``c(u0) = 0`` and
    ``c(u_{i+1}) = c(u_i) + n - 1 - L(u_i) - L(u_{i+1}) - eps``."""
    order = _check_perm(tree, order)
    n = tree.n
    lvl = tree.level_table.level
    eps = tree.center_info.epsilon
    colors = [0] * n
    cur = 0
    for i in range(n - 1):
        a, b = order[i], order[i + 1]
        step = n - 1 - lvl[a] - lvl[b] - eps
        if step < 0:
            raise NegativeIncrement(f"increment {step} between u{i}={a} and u{i + 1}={b}")
        cur += step
        colors[b] = cur
    return Coloring(tuple(colors))


def greedy_coloring(tree: Tree, order: Sequence[int]) -> Coloring:
    """Smallest coloring whose colors are non-decreasing along ``order``.

    Once the order is fixed every constraint reads
    ``c(u_i) >= c(u_j) + max(0, n - 1 - D(u_j, u_i))`` for ``j < i``, so
    taking each color as small as allowed is optimal for that order.
    """
    order = _check_perm(tree, order)
    n = tree.n
    dist = tree.distances
    colors = [0] * n
    for i in range(1, n):
        b = order[i]
        colors[b] = max(colors[a] + max(0, n - 1 - dist[a][b]) for a in order[:i])
    return Coloring(tuple(colors))


def find_qualified_order(tree: Tree, require_gap: bool | None = None) -> tuple[int, ...] | None:
    """Depth-first search for an order passing :func:`check_order`.

    Endpoints are fixed first, then positions are filled left to right with
    candidates in ascending id.  A branch that cannot be laid out without
    two neighbors sharing a label is pruned by a counting argument, and
    failed states are memoized.  Returns ``None`` when no order exists.
    """
    n = tree.n
    if require_gap is None:
        require_gap = not is_db_half(tree)
    cs = tree.center_info.centers
    labels = branch_labels(tree)
    dist = tree.distances

    if len(cs) == 1:
        w = cs[0]
        ends = [(w, e) for e in tree.adjacency[w]]
    else:
        ends = [(cs[0], cs[1]), (cs[1], cs[0])]

    def compatible(a, b):
        return labels[a] != labels[b] and not (require_gap and 2 * dist[a][b] > n)

    for start, end in ends:
        if n == 2:
            if compatible(start, end):
                return (start, end)
            continue
        rest = [u for u in range(n) if u != start and u != end]
        counts: dict[int, int] = {}
        for u in rest:
            counts[labels[u]] = counts.get(labels[u], 0) + 1
        end_label = labels[end]
        failed: set = set()
        path = [start]
        remaining = set(rest)

        def feasible(prev_label):
            r = len(remaining)
            for lab, c in counts.items():
                if not c:
                    continue
                # at most this many pairwise non-adjacent slots avoid both ends
                if lab == prev_label and lab == end_label:
                    cap = (r - 1) // 2
                elif lab == prev_label or lab == end_label:
                    cap = r // 2
                else:
                    cap = (r + 1) // 2
                if c > cap:
                    return False
            return True

        def key(last):
            if require_gap:
                return (frozenset(remaining), last)
            return (tuple(sorted(counts.items())), labels[last])

        def extend(last):
            if not remaining:
                return compatible(last, end)
            k = key(last)
            if k in failed:
                return False
            for v in sorted(remaining):
                if not compatible(last, v):
                    continue
                remaining.discard(v)
                counts[labels[v]] -= 1
                if feasible(labels[v]):
                    path.append(v)
                    if extend(v):
                        return True
                    path.pop()
                counts[labels[v]] += 1
                remaining.add(v)
            failed.add(k)
            return False

        if feasible(labels[start]) and extend(start):
            return tuple(path) + (end,)
    return None


def hc_via_conditions(tree: Tree, hint: Sequence[int] | None = None) -> HCResult:
    """Exact hc from a qualified order, when one exists.

    ``hint`` is tried before searching (families pass their canonical order).
    Raises :class:`NoQualifiedOrder` otherwise.
    """
    check_hypotheses(tree)
    order = None
    if hint is not None and check_order(tree, hint).ok:
        order = tuple(hint)
    if order is None:
        order = find_qualified_order(tree)
    if order is None:
        raise NoQualifiedOrder("no order satisfies the endpoint, branch and gap conditions")
    col = coloring_from_order(tree, order)
    return HCResult(col.span, order, col)
