"""Trees over dense integer ids, their center, levels and branch structure.

Every tree is rooted at its center: a single central vertex, or two
adjacent central vertices that both sit at level 0.  Branches are the
subtrees hanging from neighbors of a central vertex; two branches are
*different* when they hang from the same central vertex and *opposite*
when they hang from different ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple


class TreeError(ValueError):
    """Base class for malformed tree input."""


class BadVertexId(TreeError):
    pass


class CycleDetected(TreeError):
    pass


class DisconnectedGraph(TreeError):
    pass


class CenterInfo(NamedTuple):
    centers: tuple[int, ...]
    epsilon: int
    epsilon_prime: int


class LevelTable(NamedTuple):
    level: tuple[int, ...]
    total: int


class BranchId(NamedTuple):
    """Branch membership of a vertex.

    ``anchor`` is the neighbor of a central vertex that roots the branch
    (``None`` for central vertices); ``side`` is the central vertex the
    anchor hangs from, or the vertex itself when it is central.
    """

    anchor: int | None
    side: int


@dataclass(frozen=True, eq=False)
class Tree:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __len__(self):
        return self.n

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    # Derived metadata is cached per instance; the tree itself never changes.

    @cached_property
    def center_info(self) -> CenterInfo:
        return center(self)

    @cached_property
    def level_table(self) -> LevelTable:
        return levels(self, self.center_info)

    @cached_property
    def _rooting(self):
        return _root_at_center(self, self.center_info)

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs distance matrix (one BFS per vertex)."""
        return tuple(tuple(_bfs(self, s)) for s in range(self.n))


def validate_tree(n: int, edges: Iterable[Iterable[int]]) -> Tree:
    """Build a :class:`Tree` from a vertex count and an edge list.

    >>> validate_tree(4, [(0, 1), (0, 2), (0, 3)]).n
    4
    """
    if n < 1:
        raise BadVertexId(f"vertex count must be >= 1, got {n}")
    norm = []
    for e in edges:
        u, v = (int(x) for x in e)
        for x in (u, v):
            if not 0 <= x < n:
                raise BadVertexId(f"vertex id {x} outside 0..{n - 1}")
        if u == v:
            raise CycleDetected(f"self-loop at {u}")
        norm.append((min(u, v), max(u, v)))
    if len(set(norm)) != len(norm):
        raise CycleDetected("repeated edge")

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in norm:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleDetected(f"edge ({u}, {v}) closes a cycle")
        parent[ru] = rv
    if len(norm) != n - 1:
        raise DisconnectedGraph(f"{n} vertices but only {len(norm)} edges")

    adj = [[] for _ in range(n)]
    for u, v in norm:
        adj[u].append(v)
        adj[v].append(u)
    return Tree(n, tuple(sorted(norm)), tuple(tuple(sorted(a)) for a in adj))


def path_tree(n: int) -> Tree:
    return validate_tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(k: int) -> Tree:
    """K_{1,k} with hub 0."""
    return validate_tree(k + 1, [(0, i) for i in range(1, k + 1)])


def _bfs(tree: Tree, source: int) -> list[int]:
    dist = [-1] * tree.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in tree.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def center(tree: Tree) -> CenterInfo:
    """Central vertex or vertices, found by repeatedly stripping leaves."""
    n = tree.n
    if n <= 2:
        cs = tuple(range(n))
    else:
        deg = [len(a) for a in tree.adjacency]
        layer = [u for u in range(n) if deg[u] == 1]
        remaining = n
        while remaining > 2:
            remaining -= len(layer)
            nxt = []
            for u in layer:
                for v in tree.adjacency[u]:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
            layer = nxt
        cs = tuple(sorted(layer))
    eps = len(cs) - 1
    return CenterInfo(cs, eps, 1 - eps)


def eccentricity_center(tree: Tree) -> tuple[int, ...]:
    """Argmin-eccentricity vertices; quadratic, kept as a cross-check."""
    ecc = [max(row) for row in tree.distances]
    best = min(ecc)
    return tuple(u for u in range(tree.n) if ecc[u] == best)


def levels(tree: Tree, c: CenterInfo | None = None) -> LevelTable:
    c = c or tree.center_info
    dist = [-1] * tree.n
    queue = deque(c.centers)
    for w in c.centers:
        dist[w] = 0
    while queue:
        u = queue.popleft()
        for v in tree.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return LevelTable(tuple(dist), sum(dist))


def _root_at_center(tree: Tree, c: CenterInfo):
    # parent pointers toward the center, plus branch anchor and side per vertex
    n = tree.n
    parent = [-1] * n
    anchor: list[int | None] = [None] * n
    side = [-1] * n
    queue = deque()
    for w in c.centers:
        side[w] = w
        queue.append(w)
    while queue:
        u = queue.popleft()
        for v in tree.adjacency[u]:
            if side[v] >= 0:
                continue
            parent[v] = u
            side[v] = side[u]
            anchor[v] = v if u in c.centers else anchor[u]
            queue.append(v)
    return parent, anchor, side


def _check_center(tree: Tree, c: CenterInfo | None) -> CenterInfo:
    if c is None or c == tree.center_info:
        return tree.center_info
    raise ValueError("CenterInfo does not belong to this tree")


def branch_of(tree: Tree, c: CenterInfo | None, u: int) -> BranchId:
    _check_center(tree, c)
    _, anchor, side = tree._rooting
    return BranchId(anchor[u], side[u])


def ancestors(tree: Tree, u: int) -> list[int]:
    """``u`` followed by every vertex on its path up to its own center."""
    parent = tree._rooting[0]
    out = [u]
    while parent[out[-1]] >= 0:
        out.append(parent[out[-1]])
    return out


def phi(tree: Tree, c: CenterInfo | None, lt: LevelTable | None, u: int, v: int) -> int:
    """Largest level among common ancestors of ``u`` and ``v``.

    Vertices on opposite sides of a two-vertex center share no ancestor
    below the center, so the value is 0 there.
    """
    _check_center(tree, c)
    lt = lt or tree.level_table
    side = tree._rooting[2]
    if side[u] != side[v]:
        return 0
    common = set(ancestors(tree, u)).intersection(ancestors(tree, v))
    return max(lt.level[t] for t in common)


def delta(tree: Tree, c: CenterInfo | None, u: int, v: int) -> int:
    c = _check_center(tree, c)
    if len(c.centers) == 1:
        return 0
    side = tree._rooting[2]
    return int(side[u] != side[v])


def distance(tree: Tree, u: int, v: int) -> int:
    """Length of the unique u-v path (equals the detour distance in a tree)."""
    if u == v:
        return 0
    if "distances" in tree.__dict__:
        return tree.distances[u][v]
    return _bfs(tree, u)[v]


def distance_via_levels(tree: Tree, c: CenterInfo | None, lt: LevelTable | None, u: int, v: int) -> int:
    lt = lt or tree.level_table
    return lt.level[u] + lt.level[v] - 2 * phi(tree, c, lt, u, v) + delta(tree, c, u, v)


def diameter(tree: Tree) -> int:
    """Double-sweep BFS."""
    first = _bfs(tree, 0)
    far = max(range(tree.n), key=first.__getitem__)
    return max(_bfs(tree, far))


def is_db_half(tree: Tree) -> bool:
    """True when no two vertices are more than n/2 apart."""
    return 2 * diameter(tree) <= tree.n
