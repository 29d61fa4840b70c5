# coding: utf-8

# # Direct products with complete graphs
#
# In K_r × K_t two vertices are mutually maximally distant exactly when they
# agree in one coordinate. The strong resolving graph is then K_r □ K_t.

# In[1]:

from smdim import (
    complete,
    cycle,
    direct_product,
    formula_sdim,
    path,
    sr_direct_complete_identity_check,
    strong_metric_dimension,
)

print(all(sr_direct_complete_identity_check(r, t) for r in range(3, 6) for t in range(3, 6)))
print(strong_metric_dimension(direct_product(complete(3), complete(4))).value)


# Paths times complete graphs: t⌈r/2⌉.

# In[2]:

for r in range(2, 8):
    g = direct_product(path(r), complete(3))
    print(r, strong_metric_dimension(g).value, formula_sdim("pr_times_kt", (r, 3)))


# Cycles times complete graphs. The published closed form splits into three
# branches. Watch r = 8: the exact value is one t above tr/2. When r is a
# multiple of four, opposite odd positions have the same parity, so a cover of
# the even positions misses those antipodal edges.

# In[3]:

for r in range(4, 13):
    g = direct_product(cycle(r), complete(3))
    print(r, strong_metric_dimension(g).value, formula_sdim("cr_times_kt", (r, 3)))
