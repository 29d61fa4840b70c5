# coding: utf-8

# # Sweeping closed formulas
#
# Each closed formula has a sweep that builds the graphs, solves them exactly
# and records pass or fail per instance. Reports serialise to JSON and CSV.

# In[1]:

from smdim import verify, FORMULAS, STRUCTURAL_CHECKS

print(len(FORMULAS), "formulas,", len(STRUCTURAL_CHECKS), "structural checks")


# In[2]:

report = verify("hamming", {"k": [2, 3], "n": [2, 3]})
print(report.all_pass)
print(report.to_csv())


# Structural checks guarded by hypotheses skip instances where the hypothesis
# fails, and say why.

# In[3]:

report = verify("vertex_transitive_theorem")
for inst in report.instances:
    if inst.status == "skip":
        print(inst.params, inst.message)


# Running everything takes a couple of seconds.

# In[4]:

for theorem in list(FORMULAS) + list(STRUCTURAL_CHECKS):
    r = verify(theorem)
    print(f"{theorem:28s} {len(r.instances):4d} pass={r.count('pass'):4d} "
          f"fail={r.count('fail')} skip={r.count('skip')} error={r.count('error')}")
