# coding: utf-8

# # Cartesian products
#
# The strong resolving graph of G □ H is the direct product of the two factor
# strong resolving graphs, so dim_s(G □ H) reduces to an independence number
# of a direct product.

# In[1]:

from smdim import (
    boundary,
    cartesian_product,
    complete,
    cycle,
    direct_product,
    hamming,
    independence_number,
    path,
    product_sdim_bounds,
    sr_product_identity_check,
    strong_metric_dimension,
    strong_resolving_graph,
)

g, h = cycle(5), complete(3)
print(sr_product_identity_check(g, h))


# The identity lets us count: |∂G||∂H| minus the independence number.

# In[2]:

gs, hs = strong_resolving_graph(g), strong_resolving_graph(h)
via_beta = len(boundary(g)) * len(boundary(h)) - independence_number(direct_product(gs, hs))
direct = strong_metric_dimension(cartesian_product(g, h)).value
print(via_beta, direct)


# Grids of paths need exactly two vertices (opposite corners); nothing else does.

# In[3]:

for a in range(2, 6):
    print([strong_metric_dimension(cartesian_product(path(a), path(b))).value for b in range(2, 6)])

print(strong_metric_dimension(cartesian_product(path(3), cycle(4))).value)


# Bounds from factor invariants bracket the exact value.

# In[4]:

for a, b in [(complete(3), complete(3)), (path(4), path(7)), (cycle(4), cycle(6))]:
    bounds = product_sdim_bounds(a, b)
    print(bounds, strong_metric_dimension(cartesian_product(a, b)).value)


# Hamming graphs, products of complete graphs, follow (n-1)n^(k-1).

# In[5]:

for k, n in [(2, 3), (2, 4), (3, 3)]:
    print(k, n, strong_metric_dimension(hamming(k, n)).value, (n - 1) * n ** (k - 1))
