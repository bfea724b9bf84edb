import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamtree.coloring import greedy_coloring, verify
from hamtree.oracle import (BudgetExceeded, Inexhaustive, OracleBudget, brute_force_D,
                            brute_force_hc, canonical_form, enumerate_trees,
                            labeled_trees, prufer_decode, random_tree)
from hamtree.tree import path_tree, star_tree, validate_tree
from helpers import C33, C43, K13, P4p, P5p, T33, D_by_permutations, hc_by_color_search, to_nx, trees


def test_star_witness():
    res = brute_force_hc(K13)
    assert res.value == 4
    assert res.witness.colors == (0, 2, 3, 4)
    assert verify(K13, res.witness).valid


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_stars(k):
    assert brute_force_hc(star_tree(k), use_bound=False).value == (k - 1) ** 2


@pytest.mark.parametrize("tree, value", [(T33, 12), (C43, 12), (C33, 4), (P4p, 12), (P5p, 12)])
def test_small_values(tree, value):
    res = brute_force_hc(tree, use_bound=False)
    assert res.value == value == hc_by_color_search(tree)[0]
    assert verify(tree, res.witness).valid and res.witness.span == value


def test_paths_allow_repeated_colors():
    # a hamiltonian path's ends may share a color
    assert brute_force_hc(path_tree(2)).value == 0
    assert brute_force_hc(path_tree(4)).value == hc_by_color_search(path_tree(4))[0]


@given(trees(1, 6))
@settings(max_examples=40, deadline=None)
def test_matches_definition_search(t):
    res = brute_force_hc(t, use_bound=False)
    assert res.value == hc_by_color_search(t)[0]
    assert verify(t, res.witness).valid and res.witness.span == res.value


@given(trees(4, 8))
@settings(max_examples=40, deadline=None)
def test_bound_stop_gives_same_value(t):
    assert brute_force_hc(t).value == brute_force_hc(t, use_bound=False).value


def test_D_examples():
    # both computed by exhaustive permutation search
    assert brute_force_D(K13) == 5 == D_by_permutations(K13)
    assert brute_force_D(path_tree(3)) == 3 == D_by_permutations(path_tree(3))
    assert brute_force_D(path_tree(2)) == 1
    assert brute_force_D(validate_tree(1, [])) == 0


@given(trees(1, 7))
@settings(max_examples=40)
def test_D_against_permutations(t):
    assert brute_force_D(t) == D_by_permutations(t)


def _beat_greedy(tree, order, top):
    """Is there a valid coloring non-decreasing along ``order`` with span <= top?"""
    n = tree.n
    dist = tree.distances
    cols = {}

    def place(i, lo):
        if i == n:
            return True
        u = order[i]
        for c in range(lo, top + 1):
            if all(dist[u][v] + c - cv >= n - 1 for v, cv in cols.items()):
                cols[u] = c
                if place(i + 1, c):
                    return True
                del cols[u]
        return False

    return place(0, 0)


@given(trees(2, 7), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_greedy_closure_is_order_optimal(t, seed):
    order = list(range(t.n))
    random.Random(seed).shuffle(order)
    span = greedy_coloring(t, order).span
    assert _beat_greedy(t, order, span)
    if span > 0:
        assert not _beat_greedy(t, order, span - 1)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6),
                                      (7, 11), (8, 23), (9, 47), (10, 106)])
def test_class_counts(n, count):
    cls = list(enumerate_trees(n))
    assert len(cls) == count
    assert len({canonical_form(t) for t in cls}) == count


@pytest.mark.parametrize("n", range(1, 9))
def test_classes_match_networkx(n):
    ours = list(enumerate_trees(n))
    theirs = list(nx.nonisomorphic_trees(n)) if n > 1 else [nx.empty_graph(1)]
    assert len(ours) == len(theirs)
    for g in theirs:
        assert sum(nx.is_isomorphic(g, to_nx(t)) for t in ours) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_classes_match_prufer_dedup(n):
    from_prufer = {canonical_form(t) for t in labeled_trees(n)}
    assert from_prufer == {canonical_form(t) for t in enumerate_trees(n)}


@pytest.mark.parametrize("n", range(1, 7))
def test_labeled_count(n):
    ts = list(enumerate_trees(n, labeled=True))
    assert len(ts) == max(1, n ** (n - 2))
    assert len(set(ts)) == len(ts)


@given(trees(1, 14), st.integers(0, 10**6))
def test_canonical_form_is_label_invariant(t, seed):
    perm = list(range(t.n))
    random.Random(seed).shuffle(perm)
    relabeled = validate_tree(t.n, [(perm[a], perm[b]) for a, b in t.edges])
    assert canonical_form(relabeled) == canonical_form(t)


def test_canonical_form_separates():
    assert canonical_form(path_tree(4)) != canonical_form(star_tree(3))
    assert canonical_form(P4p) != canonical_form(P5p)


def test_prufer_decode():
    assert prufer_decode([0, 0], 4) == star_tree(3)
    assert prufer_decode([1, 2], 4) == path_tree(4)


def test_enumeration_limits():
    with pytest.raises(BudgetExceeded):
        list(enumerate_trees(11))
    with pytest.raises(BudgetExceeded):
        list(enumerate_trees(0))


def test_inexhaustive_on_size():
    with pytest.raises(Inexhaustive):
        brute_force_hc(random_tree(30, 1))
    with pytest.raises(Inexhaustive):
        brute_force_D(random_tree(12, 1))


def test_inexhaustive_on_node_limit():
    t = random_tree(10, 3)
    with pytest.raises(Inexhaustive) as exc:
        brute_force_hc(t, OracleBudget(node_limit=5), use_bound=False)
    best = exc.value.best
    assert best is not None and verify(t, best.witness).valid


def test_inexhaustive_on_time_limit():
    t = random_tree(10, 3)
    with pytest.raises(Inexhaustive):
        brute_force_hc(t, OracleBudget(time_limit=0.0), use_bound=False)


def test_budget_raises_max_n():
    t = star_tree(10)
    res = brute_force_hc(t, OracleBudget(max_n=11))
    assert res.value == 81
    assert verify(t, res.witness).valid


def test_determinism():
    t = random_tree(9, 42)
    a = brute_force_hc(t, use_bound=False)
    b = brute_force_hc(t, use_bound=False)
    assert a == b
    assert random_tree(20, 5).edges == random_tree(20, 5).edges
    assert [t.edges for t in enumerate_trees(7)] == [t.edges for t in enumerate_trees(7)]


def test_census_against_definition_search():
    for n in range(1, 7):
        for t in enumerate_trees(n):
            assert brute_force_hc(t, use_bound=False).value == hc_by_color_search(t)[0]
