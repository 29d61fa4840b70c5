# coding: utf-8

# # Strong resolving sets on small graphs
#
# A vertex w strongly resolves u and v when one of them sits on a shortest path
# from the other to w. The strong metric dimension is the size of the smallest
# set of vertices that strongly resolves every pair.

# In[1]:

from smdim import (
    all_pairs_distances,
    boundary,
    cycle,
    mmd_pairs,
    path,
    sdim_oracle,
    star,
    strong_metric_dimension,
    strong_resolving_graph,
)


# A path needs a single endpoint: everything lies on a shortest path to it.

# In[2]:

print(strong_metric_dimension(path(6)))


# Cycles need about half their vertices.

# In[3]:

for n in range(3, 10):
    print(n, strong_metric_dimension(cycle(n)).value)


# ## Mutually maximally distant pairs
#
# Only pairs that are maximally distant from each other in both directions
# matter. In an even cycle those are the antipodal pairs.

# In[4]:

c6 = cycle(6)
print(sorted(mmd_pairs(c6)))
print(boundary(c6))


# Put those pairs in a graph of their own and any vertex cover of it is a
# strong resolving set. For C6 that graph is three disjoint edges, hence 3.

# In[5]:

sr = strong_resolving_graph(c6)
print(sr.n, sr.m, sorted(sr.label_edges(), key=sorted))


# The brute-force search over subsets agrees. It is only usable up to ten or so
# vertices.

# In[6]:

for g in (path(5), cycle(7), star(4)):
    print(strong_metric_dimension(g).value, sdim_oracle(g).value)


# Distances are a plain integer matrix.

# In[7]:

all_pairs_distances(cycle(5)).d
