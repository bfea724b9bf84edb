# Closed forms for the four families next to what the trees actually give.
import warnings

from hamtree import OrderFallbackWarning, OracleBudget, grid
from hamtree.report import family_table, render

warnings.simplefilter("ignore", OrderFallbackWarning)

budget = OracleBudget(max_n=9)

rows = family_table(grid("symmetric", k=[2, 3], d=[2, 3, 4]), budget)
print(render("symmetric", rows, "markdown"))

rows = family_table(grid("firecracker", m=[3, 4, 5], k=[4, 5]), budget)
print(render("firecracker", rows, "markdown"))

rows = family_table(grid("caterpillar", m=[3, 4, 5, 6], k=[3, 4]), budget)
print(render("caterpillar", rows, "markdown"))

# path plus pendant stops being a "short diameter" tree from m = 5 on,
# so its orders also have to keep consecutive vertices close
rows = family_table(grid("pathpendant", m=range(3, 11)), budget)
print(render("pathpendant", rows, "csv"))
