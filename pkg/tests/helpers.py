"""Shared trees, strategies and definition-level oracles for the tests."""

import itertools
import warnings

import networkx as nx

from hypothesis import strategies as st

from hamtree.families import OrderFallbackWarning, gen_caterpillar, gen_firecracker, gen_symmetric
from hamtree.oracle import prufer_decode
from hamtree.tree import star_tree, validate_tree


def quiet(fn, *args):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OrderFallbackWarning)
        return fn(*args)


# Small named trees.  T3(3) is the symmetric tree with two adjacent
# centers, each with two leaf children.
K13 = star_tree(3)
T33 = quiet(gen_symmetric, 2, 3).tree
P4p = validate_tree(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])
P5p = validate_tree(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])
C43 = quiet(gen_caterpillar, 4, 3).tree
C33 = quiet(gen_caterpillar, 3, 3).tree
F34 = quiet(gen_firecracker, 3, 4).tree


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return prufer_decode(seq, n)


def hc_by_color_search(tree):
    """Smallest S admitting a hamiltonian coloring into {0..S}.

    Straight from the definition: backtracking over vertex colors, no
    ordering argument involved.  Only usable for n <= 6 or so.
    """
    n = tree.n
    dist = tree.distances
    colors = [None] * n

    def fill(u, top):
        if u == n:
            return True
        for c in range(top + 1):
            if all(dist[u][v] + abs(c - colors[v]) >= n - 1 for v in range(u)):
                colors[u] = c
                if fill(u + 1, top):
                    return True
        colors[u] = None
        return False

    top = 0
    while not fill(0, top):
        top += 1
    return top, tuple(colors)


def D_by_permutations(tree):
    dist = tree.distances
    return max(sum(dist[a][b] for a, b in zip(p, p[1:]))
               for p in itertools.permutations(range(tree.n)))



def to_nx(tree):
    g = nx.Graph()
    g.add_nodes_from(range(tree.n))
    g.add_edges_from(tree.edges)
    return g
