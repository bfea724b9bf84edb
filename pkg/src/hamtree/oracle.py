"""Exact small-scale computations used to check everything else.

``brute_force_hc`` rests on one observation: a hamiltonian coloring
lists the vertices in non-decreasing color order ``u_0, ..., u_{n-1}``,
and for that order every constraint becomes a one-sided difference bound
``c(u_i) - c(u_j) >= n - 1 - D(u_j, u_i)`` for ``j < i``.  The greedy
closure (each color as small as those bounds allow) is therefore the
cheapest coloring for the order, and hc is the minimum greedy span over
all orders.
"""

from __future__ import annotations

import heapq
import itertools
import random
import time
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .coloring import Coloring, greedy_coloring, lower_bound
from .tree import Tree, validate_tree


class Inexhaustive(RuntimeError):
    """The search hit a budget limit before proving optimality.

    ``best`` carries the incumbent (possibly ``None``); it is an upper bound
    only, never an answer.
    """

    def __init__(self, msg, best=None):
        super().__init__(msg)
        self.best = best


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 10
    node_limit: int | None = None
    time_limit: float | None = None


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Coloring
    order: tuple[int, ...]
    nodes: int


class _Stop(Exception):
    pass


def brute_force_hc(tree: Tree, budget: OracleBudget | None = None, use_bound: bool = True) -> OracleResult:
    """Exact hamiltonian chromatic number by branch and bound over orders.

    Partial orders are pruned with ``current + m(n-1-eps) - L(last)
    - 2 * sum L(rest) + min L(rest)`` (``m`` vertices left), which follows
    from ``D(a, b) <= L(a) + L(b) + eps``.  With ``use_bound`` the search
    also stops as soon as it meets the level lower bound; pass ``False``
    when that bound is what is being tested.
    """
    budget = budget or OracleBudget()
    n = tree.n
    if n > budget.max_n:
        raise Inexhaustive(f"n={n} exceeds max_n={budget.max_n}")
    if n == 1:
        return OracleResult(0, Coloring((0,)), (0,), 0)

    dist = tree.distances
    lvl = tree.level_table.level
    eps = tree.center_info.epsilon
    ecc = [max(row) for row in dist]
    cand = sorted(range(n), key=lambda u: (-ecc[u], u))

    target = None
    if use_bound and n >= 4 and tree.max_degree >= 3:
        target = lower_bound(tree)

    # incumbent from the greedy closure of a BFS order rooted at the center
    bfs = bfs_order(tree, tree.center_info.centers)
    col = greedy_coloring(tree, bfs)
    best = [col.span, col, tuple(bfs)]

    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    nodes = 0
    order: list[int] = []
    colors = [0] * n
    used = [False] * n
    step_floor = n - 1 - eps

    def search(depth, sum_rest):
        nonlocal nodes
        nodes += 1
        if budget.node_limit is not None and nodes > budget.node_limit:
            raise _Stop("node limit")
        if deadline is not None and (nodes & 1023) == 1 and time.monotonic() > deadline:
            raise _Stop("time limit")
        last = order[-1]
        cur = colors[last]
        if depth == n:
            if cur < best[0]:
                best[0] = cur
                best[1] = Coloring(tuple(colors))
                best[2] = tuple(order)
                if target is not None and cur <= target:
                    raise _Stop("target")
            return
        m = n - depth
        min_rest = min(lvl[u] for u in cand if not used[u])
        if cur + m * step_floor - lvl[last] - 2 * sum_rest + min_rest >= best[0]:
            return
        for v in cand:
            if used[v]:
                continue
            c = 0
            dv = dist[v]
            for a in order:
                x = colors[a] + n - 1 - dv[a]
                if x > c:
                    c = x
            if c < cur:
                c = cur
            if c >= best[0]:
                continue
            used[v] = True
            colors[v] = c
            order.append(v)
            search(depth + 1, sum_rest - lvl[v])
            order.pop()
            used[v] = False

    total = sum(lvl)
    try:
        for u in cand:
            used[u] = True
            colors[u] = 0
            order.append(u)
            search(1, total - lvl[u])
            order.pop()
            used[u] = False
            colors[u] = 0
    except _Stop as stop:
        if str(stop) != "target":
            raise Inexhaustive(f"search stopped by {stop} after {nodes} nodes",
                               best=OracleResult(best[0], best[1], best[2], nodes)) from None
    return OracleResult(best[0], best[1], best[2], nodes)


def bfs_order(tree: Tree, roots) -> list[int]:
    """Breadth-first order from ``roots``, neighbors in ascending id."""
    seen = [False] * tree.n
    out = []
    queue = deque(roots)
    for r in roots:
        seen[r] = True
    while queue:
        u = queue.popleft()
        out.append(u)
        for v in tree.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return out


def brute_force_D(tree: Tree, budget: OracleBudget | None = None) -> int:
    """Largest ``sum D(v_i, v_{i+1})`` over all vertex orders.

    Exact dynamic program over (visited set, last vertex).
    """
    budget = budget or OracleBudget()
    n = tree.n
    if n > budget.max_n:
        raise Inexhaustive(f"n={n} exceeds max_n={budget.max_n}")
    if n == 1:
        return 0
    dist = tree.distances
    full = (1 << n) - 1
    neg = -1
    best = [[neg] * n for _ in range(1 << n)]
    for u in range(n):
        best[1 << u][u] = 0
    for mask in range(1, full + 1):
        row = best[mask]
        for last in range(n):
            val = row[last]
            if val < 0:
                continue
            dl = dist[last]
            for v in range(n):
                if mask >> v & 1:
                    continue
                nm = mask | (1 << v)
                x = val + dl[v]
                if x > best[nm][v]:
                    best[nm][v] = x
    return max(best[full])


def canonical_form(tree: Tree) -> str:
    """AHU string of the tree rooted at its center; equal iff isomorphic."""
    cs = tree.center_info.centers

    def encode(root, banned):
        # iterative post-order to stay clear of the recursion limit
        parent = {root: banned}
        stack = [(root, False)]
        code = {}
        while stack:
            u, done = stack.pop()
            kids = [v for v in tree.adjacency[u] if v != parent[u]]
            if done:
                code[u] = "(" + "".join(sorted(code[v] for v in kids)) + ")"
                continue
            stack.append((u, True))
            for v in kids:
                parent[v] = u
                stack.append((v, False))
        return code[root]

    if len(cs) == 1:
        return encode(cs[0], -1)
    a, b = sorted((encode(cs[0], cs[1]), encode(cs[1], cs[0])))
    return "[" + a + b + "]"


def prufer_decode(seq, n: int) -> Tree:
    if n == 1:
        return validate_tree(1, [])
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [u for u in range(n) if degree[u] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return validate_tree(n, edges)


def labeled_trees(n: int) -> Iterator[Tree]:
    """All ``n**(n-2)`` labeled trees, decoded from Prufer sequences."""
    if n <= 2:
        yield prufer_decode((), n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def enumerate_trees(n: int, labeled: bool = False) -> Iterator[Tree]:
    """Trees on ``n`` vertices.

    With ``labeled`` every labeled tree is produced; otherwise one
    representative per isomorphism class, grown leaf by leaf from the
    classes on ``n - 1`` vertices and deduplicated by canonical form.
    Output order is deterministic.
    """
    if n < 1:
        raise BudgetExceeded("n must be >= 1")
    if n > 10:
        raise BudgetExceeded(f"enumeration is limited to n <= 10, got {n}")
    if labeled:
        yield from labeled_trees(n)
        return
    yield from _classes(n)


def _classes(n: int) -> list[Tree]:
    layer = {canonical_form(validate_tree(1, [])): validate_tree(1, [])}
    for size in range(2, n + 1):
        nxt: dict[str, Tree] = {}
        for key in sorted(layer):
            t = layer[key]
            for u in range(t.n):
                grown = validate_tree(size, list(t.edges) + [(u, size - 1)])
                nxt.setdefault(canonical_form(grown), grown)
        layer = nxt
    return [layer[k] for k in sorted(layer)]


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree; the same seed gives the same tree."""
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(max(n - 2, 0))], n)
