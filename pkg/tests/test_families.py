import warnings

import networkx as nx
import pytest

from hamtree.coloring import check_order, coloring_from_order, lower_bound, verify
from hamtree.families import (KINDS, BadParams, FamilySpec, OrderFallbackWarning,
                              closed_forms, gen_caterpillar, gen_firecracker,
                              gen_path_plus_pendant, gen_symmetric, generate, grid,
                              hc_caterpillar, hc_firecracker, hc_path_plus_pendant,
                              hc_symmetric)
from hamtree.tree import diameter, is_db_half, star_tree
from helpers import K13, quiet, to_nx

GRID = (grid("symmetric", k=[2, 3], d=[2, 3, 4, 5])
        + grid("firecracker", m=[3, 4, 5, 6], k=[4, 5, 6])
        + grid("caterpillar", m=[3, 4, 5, 6, 7], k=[3, 4, 5])
        + grid("pathpendant", m=list(range(3, 12))))


def iso(a, b):
    return nx.is_isomorphic(to_nx(a), to_nx(b))


@pytest.mark.parametrize("gen, args", [
    (gen_symmetric, (2, 2)),
    (gen_caterpillar, (3, 3)),
    (gen_path_plus_pendant, (3,)),
])
def test_small_members_are_the_claw(gen, args):
    t = quiet(gen, *args).tree
    assert t.n == 4 and iso(t, K13)


def test_symmetric_examples():
    t = quiet(gen_symmetric, 2, 3).tree
    assert t.n == 6 and t.level_table.total == 4
    t = quiet(gen_symmetric, 3, 2).tree
    assert t.n == 5 and iso(t, star_tree(4))
    assert t.center_info.centers == (0,) and t.adjacency[0] == (1, 2, 3, 4)


@pytest.mark.parametrize("k, d", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 4)])
def test_symmetric_structure(k, d):
    t = quiet(gen_symmetric, k, d).tree
    g = to_nx(t)
    ecc = nx.eccentricity(g)
    leaves = [u for u in g if g.degree(u) == 1]
    assert all(g.degree(u) == k + 1 for u in g if g.degree(u) > 1)
    assert len({ecc[u] for u in leaves}) == 1
    assert nx.diameter(g) == d


def test_firecracker_examples():
    inst = quiet(gen_firecracker, 3, 4)
    t = inst.tree
    assert t.n == 12 and diameter(t) == 6 and t.level_table.total == 23
    assert t.center_info.centers == (1,)  # middle path vertex
    assert check_order(t, inst.canonical_order, require_gap=False).ok
    t4 = quiet(gen_firecracker, 4, 4).tree
    assert t4.n == 16 and t4.center_info.centers == (1, 2)


@pytest.mark.parametrize("m, k", [(3, 4), (4, 4), (5, 5), (6, 4)])
def test_firecracker_structure(m, k):
    # m stars on k-1 leaves, one leaf of each glued to a path vertex
    t = quiet(gen_firecracker, m, k).tree
    g = to_nx(t)
    path = g.subgraph(range(m))
    assert nx.is_isomorphic(path, nx.path_graph(m))
    rest = g.copy()
    rest.remove_edges_from(path.edges)
    comps = list(nx.connected_components(rest))
    assert len(comps) == m
    assert all(nx.is_isomorphic(rest.subgraph(c), nx.star_graph(k - 1)) for c in comps)
    assert all(len(c & set(range(m))) == 1 for c in comps)


def test_caterpillar_examples():
    t = quiet(gen_caterpillar, 4, 3).tree
    assert t.n == 6 and t.level_table.total == 4
    assert [t.degree(i) for i in range(4)] == [1, 3, 3, 1]
    t = quiet(gen_caterpillar, 5, 3).tree
    assert t.n == 8 and t.center_info.centers == (2,)


@pytest.mark.parametrize("m, k", [(3, 3), (4, 5), (5, 4), (7, 3)])
def test_caterpillar_structure(m, k):
    t = quiet(gen_caterpillar, m, k).tree
    degs = [t.degree(i) for i in range(m)]
    assert degs == [1] + [k] * (m - 2) + [1]
    assert all(t.degree(u) == 1 for u in range(m, t.n))
    assert diameter(t) == m - 1


def test_path_plus_pendant_examples():
    t = gen_path_plus_pendant(4).tree
    assert t.n == 6 and len(t.center_info.centers) == 2 and t.level_table.total == 4
    t = gen_path_plus_pendant(5).tree
    assert t.n == 6 and t.level_table.total == 7
    assert not is_db_half(t)


@pytest.mark.parametrize("fn, args, value", [
    (hc_symmetric, (2, 2), 4),
    (hc_symmetric, (2, 3), 12),
    (hc_firecracker, (3, 4), 76),
    (hc_caterpillar, (4, 3), 12),
    (hc_caterpillar, (3, 3), 4),
    (hc_path_plus_pendant, (3,), 4),
    (hc_path_plus_pendant, (4,), 12),
    (hc_path_plus_pendant, (5,), 12),
])
def test_hc_formula_examples(fn, args, value):
    assert fn(*args) == value


@pytest.mark.parametrize("kind, params", [
    ("symmetric", {"k": 1, "d": 3}),
    ("symmetric", {"k": 2, "d": 1}),
    ("firecracker", {"m": 3, "k": 3}),
    ("firecracker", {"m": 2, "k": 4}),
    ("caterpillar", {"m": 2, "k": 3}),
    ("caterpillar", {"m": 3, "k": 2}),
    ("pathpendant", {"m": 2}),
    ("spider", {"m": 3}),
    ("pathpendant", {"m": 3, "k": 4}),
])
def test_bad_params(kind, params):
    with pytest.raises(BadParams):
        FamilySpec.make(kind, **params)


def test_bad_params_through_functions():
    with pytest.raises(BadParams):
        hc_firecracker(3, 3)
    with pytest.raises(BadParams):
        gen_caterpillar(2, 3)


@pytest.mark.parametrize("spec", GRID, ids=str)
def test_grid_identities(spec):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OrderFallbackWarning)
        inst = generate(spec)
    t = inst.tree
    cf = closed_forms(spec)
    assert t.n == cf["n"]
    assert t.level_table.total == cf["total_level"]
    assert check_order(t, inst.canonical_order, require_gap=not is_db_half(t)).ok
    col = coloring_from_order(t, inst.canonical_order)
    assert cf["hc"] == lower_bound(t) == col.span
    assert verify(t, col).valid
    assert set(inst.labels) == set(range(t.n))
    assert inst.order_source in ("literal", "repaired", "search")
    if spec.kind != "pathpendant":
        assert is_db_half(t)


def test_order_sources_and_warnings():
    with pytest.warns(OrderFallbackWarning):
        inst = gen_symmetric(2, 4)
    assert inst.order_source == "repaired" and inst.note
    with warnings.catch_warnings():
        warnings.simplefilter("error", OrderFallbackWarning)
        assert gen_symmetric(2, 3).order_source == "literal"
        assert gen_firecracker(4, 4).order_source == "literal"
        assert gen_path_plus_pendant(6).order_source == "literal"


def test_fallback_is_logged(caplog):
    with caplog.at_level("INFO", logger="hamtree.families"):
        quiet(gen_caterpillar, 4, 3)
    assert any("caterpillar" in r.message for r in caplog.records)


def test_labels():
    inst = quiet(gen_firecracker, 3, 4)
    assert inst.labels[0].startswith("w") and len(inst.labels) == 12
    inst = quiet(gen_caterpillar, 4, 3)
    assert inst.labels[0] == "v_1"
    assert gen_path_plus_pendant(4).labels[5] == "v''"


def test_grid_order_and_spec_str():
    specs = grid("caterpillar", m=[3, 4], k=[3, 4])
    assert [s.p for s in specs] == [{"m": 3, "k": 3}, {"m": 3, "k": 4},
                                   {"m": 4, "k": 3}, {"m": 4, "k": 4}]
    assert str(specs[0]) == "caterpillar(m=3, k=3)"
    with pytest.raises(BadParams):
        grid("caterpillar", m=[3])
    assert set(KINDS) == {"symmetric", "firecracker", "caterpillar", "pathpendant"}


def test_generation_is_deterministic():
    for spec in GRID[:10]:
        a, b = quiet(generate, spec), quiet(generate, spec)
        assert a.tree == b.tree and a.canonical_order == b.canonical_order
