# Colorings of the claw K_{1,3}, by hand and by search.
from hamtree import (brute_force_hc, coloring_from_order, lower_bound, star_tree,
                     verify)

t = star_tree(3)          # hub 0, leaves 1 2 3
print("edges:", t.edges)
print("lower bound:", lower_bound(t))

# hub first: the leaves then need colors at least 2 apart from the hub
good = coloring_from_order(t, [0, 1, 2, 3])
print("hub first:", good.colors, "span", good.span, verify(t, good).valid)

# starting from a leaf costs one extra color
worse = coloring_from_order(t, [1, 0, 2, 3])
print("leaf first:", worse.colors, "span", worse.span, verify(t, worse).valid)

# an invalid one, to see what verify reports
bad = verify(t, [0, 1, 2, 3])
for v in bad.violations:
    print("  pair", (v.u, v.v), "short by", -v.slack)

res = brute_force_hc(t)
print("exact hc:", res.value, "witness", res.witness.colors)

# bigger stars: hc(K_{1,k}) = (k-1)^2
for k in range(3, 8):
    print(k, brute_force_hc(star_tree(k)).value, (k - 1) ** 2)
