# %% [markdown]
# # Building two-sided group graphs
#
# A pair of subsets L, R of a finite group G gives a graph on G with an arc
# g -> l^-1 g r for every l in L and r in R. Three conditions on (L, R) decide
# whether that graph is simple and undirected. Each failing condition leaves a
# visible defect in the graph.

# %%
from twosided import ConnectionPair, build_graph, check_property, make_dihedral, make_symmetric
from twosided.connection import scan_defects

D6 = make_dihedral(6)
pair = ConnectionPair.of(D6, ["a", "a^2"], ["b", "a^3b"])
verdict = check_property(pair)
print("property holds:", verdict.overall)
gamma = build_graph(pair)
print("vertices", gamma.pair.group.order, "valency", gamma.valency())

# %% [markdown]
# A pair that fails: two distinct transpositions in S3. One side is conjugate
# to the other, so some vertex gets a loop.

# %%
S3 = make_symmetric(3)
bad = ConnectionPair.of(S3, ["(12)"], ["(13)"])
v = check_property(bad)
for cond in (v.cond1, v.cond2, v.cond3):
    print(cond.name, "pass" if cond.passed else f"fails at {S3.name(cond.g)}")
print("loops at", sorted(S3.name(a[0]) for a in scan_defects(build_graph(bad)).loops))

# %% [markdown]
# Graphs export to DOT for drawing.

# %%
print(gamma.to_dot()[:200])
