"""Generators, canonical orders and closed forms for four tree families.

* ``symmetric`` T_{k+1}(d): internal vertices of degree k+1, all leaves at
  the same eccentricity, diameter d.
* ``firecracker`` F(m, k): m copies of a (k-1)-star, one leaf of each
  identified with a different vertex of a path on m vertices.
* ``caterpillar`` C(m, k): spine v_1..v_m, each inner spine vertex of
  degree k.
* ``pathpendant`` P'_m: path on m vertices with a pendant vertex attached
  to each central vertex.

Vertex ids
----------
symmetric
    BFS from the center: ``w`` = 0 (and ``w'`` = 1 when d is odd), then
    each level in lexicographic order of the index strings.
firecracker
    path vertices ``w^i_k`` first (ids 0..m-1, in path order), then apexes
    ``w^i_1`` (m..2m-1), then the remaining leaves ``w^i_j`` copy by copy.
caterpillar
    spine ``v_1..v_m`` (ids 0..m-1), then legs ``v_i^j`` spine vertex by
    spine vertex.
pathpendant
    path ``v_1..v_m`` (ids 0..m-1), then ``v'`` (and ``v''`` for even m).

Canonical orders
----------------
Each generator first builds the order written down for the family, checks
it is a permutation passing :func:`~hamtree.coloring.check_order`, and if
not tries a documented index repair and finally the generic search.  The
route taken is recorded in ``FamilyInstance.order_source`` and anything
other than ``"literal"`` emits an :class:`OrderFallbackWarning`.
"""

from __future__ import annotations

import itertools
import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .coloring import check_order, find_qualified_order
from .tree import Tree, is_db_half, validate_tree

log = logging.getLogger(__name__)

KINDS = ("symmetric", "firecracker", "caterpillar", "pathpendant")
PARAMS = {
    "symmetric": ("k", "d"),
    "firecracker": ("m", "k"),
    "caterpillar": ("m", "k"),
    "pathpendant": ("m",),
}
MINIMA = {
    "symmetric": {"k": 2, "d": 2},
    "firecracker": {"m": 3, "k": 4},
    "caterpillar": {"m": 3, "k": 3},
    "pathpendant": {"m": 3},
}


class BadParams(ValueError):
    pass


class OrderFallbackWarning(UserWarning):
    """The written-down order failed validation and a substitute was used."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[tuple[str, int], ...]

    @classmethod
    def make(cls, kind: str, **params: int) -> "FamilySpec":
        if kind not in KINDS:
            raise BadParams(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
        names = PARAMS[kind]
        if set(params) != set(names):
            raise BadParams(f"{kind} takes parameters {names}, got {tuple(sorted(params))}")
        for name in names:
            value = params[name]
            if not isinstance(value, int) or value < MINIMA[kind][name]:
                raise BadParams(f"{kind}: {name} must be an integer >= {MINIMA[kind][name]}, got {value}")
        return cls(kind, tuple((name, params[name]) for name in names))

    @property
    def p(self) -> dict[str, int]:
        return dict(self.params)

    def __str__(self):
        return f"{self.kind}(" + ", ".join(f"{a}={b}" for a, b in self.params) + ")"


@dataclass(frozen=True)
class FamilyInstance:
    tree: Tree
    spec: FamilySpec
    canonical_order: tuple[int, ...]
    labels: dict[int, str] = field(repr=False)
    order_source: str = "literal"
    note: str | None = None


def _exact(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {x}")
    return x.numerator


# ---------------------------------------------------------------- closed forms

def order_symmetric(k: int, d: int) -> int:
    _check("symmetric", k=k, d=d)
    if d % 2 == 0:
        x = Fraction(k + 1, k - 1) * (k ** (d // 2) - 1)
        return _exact(1 + x, "order of T_{k+1}(d)")
    x = Fraction(k, k - 1) * (k ** ((d - 1) // 2) - 1)
    return _exact(2 * (1 + x), "order of T_{k+1}(d)")


def total_level_symmetric(k: int, d: int) -> int:
    _check("symmetric", k=k, d=d)
    if d % 2 == 0:
        p = k ** (d // 2)
        x = (k + 1) * (Fraction(d * p, 2 * (k - 1)) - Fraction(p - 1, (k - 1) ** 2))
    else:
        p = k ** ((d - 1) // 2)
        x = 2 * k * (Fraction((d - 1) * p, 2 * (k - 1)) - Fraction(p - 1, (k - 1) ** 2))
    return _exact(x, "total level of T_{k+1}(d)")


def hc_symmetric(k: int, d: int) -> int:
    _check("symmetric", k=k, d=d)
    if d % 2 == 0:
        p = k ** (d // 2) - 1
        x = (Fraction((k + 1) ** 2, (k - 1) ** 2) * p * (p + Fraction(2 - (k - 1) * d, k + 1))
             - Fraction((k + 1) * d, k - 1) + 1)
    else:
        q = k ** ((d - 1) // 2)
        x = (Fraction(4 * k, (k - 1) ** 2) * (q - 1) * (k * (q - 1) + 1)
             + Fraction(2 * k, k - 1) * (2 - d) * q - Fraction(2 * k, k - 1))
    return _exact(x, "hc of T_{k+1}(d)")


def order_firecracker(m: int, k: int) -> int:
    _check("firecracker", m=m, k=k)
    return m * k


def total_level_firecracker(m: int, k: int) -> int:
    _check("firecracker", m=m, k=k)
    if m % 2:
        x = Fraction(k * m * m + (8 * k - 12) * m - k, 4)
    else:
        x = Fraction(k * m * m + 6 * m * (k - 2), 4)
    return _exact(x, "total level of F(m,k)")


def hc_firecracker(m: int, k: int) -> int:
    _check("firecracker", m=m, k=k)
    if m % 2:
        x = m * m * k * k - 6 * m * (k - 1) - Fraction(k, 2) * (m * m - 1) + 2
    else:
        x = m * m * k * k - 6 * m * (k - 1) - Fraction(k, 2) * m * m + 2
    return _exact(x, "hc of F(m,k)")


def order_caterpillar(m: int, k: int) -> int:
    _check("caterpillar", m=m, k=k)
    return m * (k - 1) - 2 * (k - 2)


def total_level_caterpillar(m: int, k: int) -> int:
    _check("caterpillar", m=m, k=k)
    if m % 2:
        x = Fraction((m * m - 5) * (k - 1), 4) + 1
    else:
        x = Fraction(m * (m - 2) * (k - 1), 4)
    return _exact(x, "total level of C(m,k)")


def hc_caterpillar(m: int, k: int) -> int:
    _check("caterpillar", m=m, k=k)
    if m % 2:
        x = ((m - 2) ** 2 * k * k - Fraction(5 * m * m - 20 * m + 19, 2) * k
             + Fraction(3 * m * m - 12 * m + 11, 2))
    else:
        x = ((m - 2) ** 2 * k * k - Fraction(5 * m * m - 20 * m + 20, 2) * k
             + Fraction(3 * m * m - 12 * m + 12, 2))
    return _exact(x, "hc of C(m,k)")


def order_path_plus_pendant(m: int) -> int:
    _check("pathpendant", m=m)
    return m + 1 if m % 2 else m + 2


def total_level_path_plus_pendant(m: int) -> int:
    _check("pathpendant", m=m)
    x = Fraction(m * m + 3, 4) if m % 2 else Fraction(m * m - 2 * m + 8, 4)
    return _exact(x, "total level of P'_m")


def hc_path_plus_pendant(m: int) -> int:
    _check("pathpendant", m=m)
    x = Fraction(m * m - 1, 2) if m % 2 else Fraction(m * m, 2) + 2 * m - 4
    return _exact(x, "hc of P'_m")


def _check(kind, **params):
    FamilySpec.make(kind, **params)


CLOSED_FORMS: dict[str, tuple[Callable[..., int], Callable[..., int], Callable[..., int]]] = {
    "symmetric": (order_symmetric, total_level_symmetric, hc_symmetric),
    "firecracker": (order_firecracker, total_level_firecracker, hc_firecracker),
    "caterpillar": (order_caterpillar, total_level_caterpillar, hc_caterpillar),
    "pathpendant": (order_path_plus_pendant, total_level_path_plus_pendant, hc_path_plus_pendant),
}


def closed_forms(spec: FamilySpec) -> dict[str, int]:
    """``{"n": ..., "total_level": ..., "hc": ...}`` from the formulas alone."""
    fo, fl, fh = CLOSED_FORMS[spec.kind]
    p = spec.p
    return {"n": fo(**p), "total_level": fl(**p), "hc": fh(**p)}


# ------------------------------------------------------------- order handling

def _positions_to_order(n: int, placed: dict[int, list[int]]) -> tuple[int, ...] | None:
    """Turn a position -> vertices map into an order, or None if it is not
    a bijection onto 0..n-1."""
    if sorted(placed) != list(range(n)) or any(len(v) != 1 for v in placed.values()):
        return None
    return tuple(placed[t][0] for t in range(n))


def _resolve(tree: Tree, spec: FamilySpec, attempts: Sequence[tuple[str, tuple[int, ...] | None]]):
    """Return (order, source, note) for the first attempt that validates."""
    require_gap = not is_db_half(tree)
    problems = []
    for name, order in attempts:
        if order is None:
            problems.append(f"{name}: not a permutation")
            continue
        rep = check_order(tree, order, require_gap=require_gap)
        if rep.ok:
            note = "; ".join(problems) or None
            if name != "literal":
                _fallback(spec, name, note)
            return order, name, note
        problems.append(f"{name}: {rep.first_violation[1]}")
    order = find_qualified_order(tree, require_gap=require_gap)
    note = "; ".join(problems)
    if order is None:
        raise RuntimeError(f"{spec}: no qualified order found ({note})")
    _fallback(spec, "search", note)
    return order, "search", note


def _fallback(spec, source, note):
    msg = f"{spec}: canonical order taken from {source} ({note})"
    log.info(msg)
    warnings.warn(msg, OrderFallbackWarning, stacklevel=4)


def _positions(n: int, items) -> dict[int, list[int]]:
    placed: dict[int, list[int]] = {}
    for t, v in items:
        placed.setdefault(t, []).append(v)
    return placed


# ------------------------------------------------------------------ symmetric

def _symmetric_tree(k: int, d: int):
    # each non-central vertex is keyed by (top, i1, ..., il); top is the
    # branch number t (d even) or the side 0/1 (d odd)
    keys: list[tuple] = []
    labels: dict[int, str] = {}
    edges = []
    if d % 2 == 0:
        keys.append(("w",))
        labels[0] = "w"
        frontier = []
        for t in range(1, k + 2):
            keys.append((t,))
            edges.append((0, len(keys) - 1))
            frontier.append(len(keys) - 1)
        depth = d // 2
    else:
        keys += [("w",), ("w'",)]
        labels.update({0: "w", 1: "w'"})
        edges.append((0, 1))
        frontier = []
        for side in (0, 1):
            for i in range(k):
                keys.append((side, i))
                edges.append((side, len(keys) - 1))
                frontier.append(len(keys) - 1)
        depth = (d - 1) // 2
    for _ in range(depth - 1):
        nxt = []
        for u in frontier:
            for i in range(k):
                keys.append(keys[u] + (i,))
                edges.append((u, len(keys) - 1))
                nxt.append(len(keys) - 1)
        frontier = nxt
    for u, key in enumerate(keys):
        if u in labels:
            continue
        if d % 2 == 0:
            t, idx = key[0], key[1:]
            labels[u] = f"w^{t}" + (f"_{{{','.join(map(str, idx))}}}" if idx else "")
        else:
            name = "w" if key[0] == 0 else "w'"
            labels[u] = f"{name}_{{{','.join(map(str, key[1:]))}}}"
    return validate_tree(len(keys), edges), keys, labels


def _sym_index(idx: Sequence[int], k: int, top: int) -> int:
    """``1 + i_1 + i_2 k + ... + i_l k^{l-1} + sum_{l+1 <= s <= top} k^s``."""
    l = len(idx)
    return 1 + sum(i * k ** s for s, i in enumerate(idx)) + sum(k ** s for s in range(l + 1, top + 1))


def _symmetric_order(tree: Tree, keys, k: int, d: int, top: int):
    n = tree.n
    if d % 2 == 0:
        rename = {}
        for u, key in enumerate(keys):
            if u:
                rename.setdefault((key[0], _sym_index(key[1:], k, top)), []).append(u)
        items = [(0, 0)]
        for j in range(1, n - k - 1):
            s = -(-j // (k + 1))
            t = j % (k + 1) or k + 1
            items += [(j, u) for u in rename.get((t, s), [])]
        # tail u_j = w^{j-n+k+2}; w^t has id t
        items += [(j, j - n + k + 2) for j in range(n - k - 1, n)]
    else:
        rename = {}
        for u, key in enumerate(keys):
            if u > 1:
                rename.setdefault((key[0], _sym_index(key[1:], k, top)), []).append(u)
        items = [(0, 0), (n - 1, 1)]
        for j in range(1, n - 1):
            s = -(-j // 2)
            side = 0 if j % 2 == 0 else 1
            items += [(j, u) for u in rename.get((side, s), [])]
    return _positions_to_order(n, _positions(n, items))


def gen_symmetric(k: int, d: int) -> FamilyInstance:
    spec = FamilySpec.make("symmetric", k=k, d=d)
    tree, keys, labels = _symmetric_tree(k, d)
    attempts = [("literal", _symmetric_order(tree, keys, k, d, d // 2))]
    if d % 2 == 0:
        # the top vertex w^t of a branch has no index digits, so the offset
        # sum must stop one power earlier for j to run over 1..|branch|
        attempts.append(("repaired", _symmetric_order(tree, keys, k, d, d // 2 - 1)))
    order, source, note = _resolve(tree, spec, attempts)
    return FamilyInstance(tree, spec, order, labels, source, note)


# ---------------------------------------------------------------- firecracker

def _fire_id(m: int, k: int, i: int, j: int) -> int:
    # copy i in 1..m, position j in 1..k (j=1 apex, j=k on the path)
    if j == k:
        return i - 1
    if j == 1:
        return m + i - 1
    return 2 * m + (i - 1) * (k - 2) + (j - 2)


def _firecracker_tree(m: int, k: int):
    edges = [(_fire_id(m, k, i, k), _fire_id(m, k, i + 1, k)) for i in range(1, m)]
    for i in range(1, m + 1):
        for j in range(2, k + 1):
            edges.append((_fire_id(m, k, i, 1), _fire_id(m, k, i, j)))
    labels = {_fire_id(m, k, i, j): f"w^{i}_{j}" for i in range(1, m + 1) for j in range(1, k + 1)}
    return validate_tree(m * k, edges), labels


def _firecracker_literal(m: int, k: int, c: int):
    n = m * k
    fid = lambda i, j: _fire_id(m, k, i, j)  # noqa: E731
    if m % 2:
        items = [(0, fid(c, k))]
        for i in range(1, m + 1):
            for j in range(1, k):
                if i == c:
                    t = (j - 1) * m + (i - c)
                elif i < c:
                    t = (j - 1) * m + 2 * i
                else:
                    t = (j - 1) * m + 2 * (i - c) + 1
                items.append((t, fid(i, j)))
        for i in range(1, m + 1):
            if i < c:
                items.append(((k - 1) * m - 2 * (i - c) + 1, fid(i, k)))
            elif i > c:
                items.append(((k - 1) * m + 2 * (m - i + 1), fid(i, k)))
    else:
        h = m // 2
        items = [(0, fid(h + 1, k)), (n - 1, fid(h, k))]
        for i in range(1, m + 1):
            for j in range(1, k):
                t = (j - 1) * m + 2 * i - 1 if i <= h else (j - 1) * m + 2 * (i - h)
                items.append((t, fid(i, j)))
        for i in range(1, m + 1):
            if i < h:
                items.append(((k - 1) * m + 2 * i - 1, fid(i, k)))
            elif i > h + 1:
                items.append(((k - 1) * m + 2 * (i - 1 - h), fid(i, k)))
    return _positions_to_order(n, _positions(n, items))


def _firecracker_repaired_odd(m: int, k: int):
    # center copy c = (m+1)/2; per star level j the slots run
    # own apex side, left, right, left, ..., right, then the path vertices
    # alternate left/right and finish next to the center
    n = m * k
    c = (m + 1) // 2
    fid = lambda i, j: _fire_id(m, k, i, j)  # noqa: E731
    items = [(0, fid(c, k))]
    for i in range(1, m + 1):
        for j in range(1, k):
            if i == c:
                off = 1
            elif i < c:
                off = 2 * i
            else:
                off = 2 * (i - c) + 1
            items.append(((j - 1) * m + off, fid(i, j)))
    for i in range(1, m + 1):
        if i < c:
            items.append(((k - 1) * m + 2 * (c - i) - 1, fid(i, k)))
        elif i > c:
            items.append(((k - 1) * m + 2 * (m - i + 1), fid(i, k)))
    return _positions_to_order(n, _positions(n, items))


def gen_firecracker(m: int, k: int) -> FamilyInstance:
    spec = FamilySpec.make("firecracker", m=m, k=k)
    tree, labels = _firecracker_tree(m, k)
    attempts = [("literal", _firecracker_literal(m, k, m // 2))]
    if m % 2:
        attempts.append(("repaired", _firecracker_repaired_odd(m, k)))
    order, source, note = _resolve(tree, spec, attempts)
    return FamilyInstance(tree, spec, order, labels, source, note)


# ---------------------------------------------------------------- caterpillar

def _cat_id(m: int, k: int, i: int, j: int = 0) -> int:
    # j = 0 is the spine vertex v_i, j >= 1 its j-th leg
    if j == 0:
        return i - 1
    return m + (i - 2) * (k - 2) + (j - 1)


def _caterpillar_tree(m: int, k: int):
    edges = [(_cat_id(m, k, i), _cat_id(m, k, i + 1)) for i in range(1, m)]
    labels = {_cat_id(m, k, i): f"v_{i}" for i in range(1, m + 1)}
    for i in range(2, m):
        for j in range(1, k - 1):
            edges.append((_cat_id(m, k, i), _cat_id(m, k, i, j)))
            labels[_cat_id(m, k, i, j)] = f"v_{i}^{j}"
    return validate_tree(len(labels), edges), labels


def _caterpillar_literal(m: int, k: int):
    n = order_caterpillar(m, k)
    cid = lambda i, j=0: _cat_id(m, k, i, j)  # noqa: E731
    h = m // 2
    items = []
    if m % 2:
        items += [(0, cid(h + 1)), (n - 1, cid(h))]
        for i in range(1, m + 1):
            if i < h:
                items.append((2 * i - 1, cid(i)))
            elif i > h + 1:
                items.append((2 * (i - h), cid(i)))
        for i in range(2, m):
            for j in range(1, k - 1):
                if i < h:
                    t = (m - 2) * j + 2 * (i - 1)
                elif i == h:
                    t = (m - 2) * j + 1
                else:
                    t = (m - 2) * j + 2 * (i - h) + 1
                items.append((t, cid(i, j)))
    else:
        items += [(0, cid(h + 1)), (n - 1, cid(h))]
        for i in range(1, m + 1):
            if i < h - 1:
                items.append((2 * i - 1, cid(i)))
            elif i > h + 1:
                items.append((2 * (i - h), cid(i)))
        for i in range(2, m):
            for j in range(1, k - 1):
                t = (m - 2) * j + 2 * (i - 2) + 1 if i <= h else (m - 2) * j + 2 * (i - h)
                items.append((t, cid(i, j)))
    return _positions_to_order(n, _positions(n, items))


def _caterpillar_repaired(m: int, k: int):
    n = order_caterpillar(m, k)
    cid = lambda i, j=0: _cat_id(m, k, i, j)  # noqa: E731
    items = []
    if m % 2:
        # center v_c with c = (m+1)/2 first, its neighbor v_{c-1} last;
        # spine slots alternate right/left, leg blocks run own, left, right, ...
        c = (m + 1) // 2
        items += [(0, cid(c)), (n - 1, cid(c - 1))]
        for i in range(1, m + 1):
            if i < c - 1:
                items.append((2 * i, cid(i)))
            elif i > c:
                items.append((2 * (i - c) - 1, cid(i)))
        for i in range(2, m):
            for j in range(1, k - 1):
                if i < c:
                    off = 2 * (i - 1)
                elif i == c:
                    off = 1
                else:
                    off = 2 * (i - c) + 1
                items.append(((m - 2) * j + off, cid(i, j)))
    else:
        h = m // 2
        items += [(0, cid(h + 1)), (n - 1, cid(h))]
        for i in range(1, m + 1):
            if i < h:
                items.append((2 * i - 1, cid(i)))
            elif i > h + 1:
                items.append((2 * (i - h - 1), cid(i)))
        for i in range(2, m):
            for j in range(1, k - 1):
                off = 2 * (i - 2) + 1 if i <= h else 2 * (i - h)
                items.append(((m - 2) * j + off, cid(i, j)))
    return _positions_to_order(n, _positions(n, items))


def gen_caterpillar(m: int, k: int) -> FamilyInstance:
    spec = FamilySpec.make("caterpillar", m=m, k=k)
    tree, labels = _caterpillar_tree(m, k)
    attempts = [("literal", _caterpillar_literal(m, k)), ("repaired", _caterpillar_repaired(m, k))]
    order, source, note = _resolve(tree, spec, attempts)
    return FamilyInstance(tree, spec, order, labels, source, note)


# ---------------------------------------------------------- path plus pendant

def _path_plus_pendant_tree(m: int):
    edges = [(i, i + 1) for i in range(m - 1)]
    labels = {i: f"v_{i + 1}" for i in range(m)}
    if m % 2:
        edges.append(((m + 1) // 2 - 1, m))
        labels[m] = "v'"
    else:
        edges += [(m // 2 - 1, m), (m // 2, m + 1)]
        labels.update({m: "v'", m + 1: "v''"})
    return validate_tree(len(labels), edges), labels


def gen_path_plus_pendant(m: int) -> FamilyInstance:
    spec = FamilySpec.make("pathpendant", m=m)
    tree, labels = _path_plus_pendant_tree(m)
    v = lambda i: i - 1  # noqa: E731  (v_i -> id)
    if m % 2:
        h = (m + 1) // 2
        seq = [v(h)]
        for i in range(1, h):
            seq += [v(i), v(h + i)]
        seq.append(m)
    else:
        h = m // 2
        seq = [v(h + 1)]
        for i in range(1, h):
            seq += [v(i), v(h + 1 + i)]
        seq += [m, m + 1, v(h)]
    order = tuple(seq) if sorted(seq) == list(range(tree.n)) else None
    order, source, note = _resolve(tree, spec, [("literal", order)])
    return FamilyInstance(tree, spec, order, labels, source, note)


GENERATORS: dict[str, Callable[..., FamilyInstance]] = {
    "symmetric": gen_symmetric,
    "firecracker": gen_firecracker,
    "caterpillar": gen_caterpillar,
    "pathpendant": gen_path_plus_pendant,
}


def generate(spec: FamilySpec) -> FamilyInstance:
    return GENERATORS[spec.kind](**spec.p)


def grid(kind: str, **ranges: Sequence[int]) -> list[FamilySpec]:
    """Specs over the cartesian product of parameter ranges, in a fixed order."""
    names = PARAMS[kind]
    if set(ranges) != set(names):
        raise BadParams(f"{kind} takes parameters {names}")
    return [FamilySpec.make(kind, **dict(zip(names, combo)))
            for combo in itertools.product(*(ranges[a] for a in names))]
