"""How many subspaces share a generic Wronskian: d(k, l) from the hook formula.

The count equals the number of standard Young tableaux of the k x l rectangle.
For k = l = 2 there are two pencils of cubics with a given quartic Wronskian.
"""

from polysubspace import wronski_degree
from polysubspace.partitions import bounded_partitions

print("     " + "".join(f"{l:>10}" for l in range(1, 6)))
for k in range(1, 6):
    print(f"k={k:<3}" + "".join(f"{wronski_degree(k, l):>10}" for l in range(1, 6)))

# the shapes that can occur at one point when k = l = 2
print("\nshapes in the 2 x 2 box:", [lam.parts for lam in bounded_partitions(2, 2)])
