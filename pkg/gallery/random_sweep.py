# How tight is the level bound on random trees?
from collections import Counter

from hamtree import (NoQualifiedOrder, brute_force_hc, hc_via_conditions,
                     lower_bound, random_tree)

gaps = Counter()
tight_with_order = 0
for seed in range(300):
    t = random_tree(9, seed)
    if t.max_degree < 3:
        continue
    gap = brute_force_hc(t, use_bound=False).value - lower_bound(t)
    gaps[gap] += 1
    try:
        hc_via_conditions(t)
        tight_with_order += 1
        assert gap == 0
    except NoQualifiedOrder:
        pass

print("hc - bound : count")
for g in sorted(gaps):
    print(f"{g:10d} : {gaps[g]}")
print("trees with a qualified order (all tight):", tight_with_order)
