# %% [markdown]
# # Components, Cayley graphs and transitivity
#
# The components are predicted from parities of words in L and R. When the
# normalizers of L and R are large enough, the graph is a Cayley graph with an
# explicit regular subgroup.

# %%
from twosided import ConnectionPair, analyze, check_connectivity_criterion, make_dihedral

D6 = make_dihedral(6)
split = ConnectionPair.of(D6, ["ab", "a^3", "e"], ["b"])
cv = check_connectivity_criterion(split)
print("component sizes:", [len(c) for c in cv.components])
print("parity prediction agrees with BFS:", cv.components == cv.bfs_components)

# %% [markdown]
# Components of different sizes rule out vertex-transitivity, so this graph is
# not a Cayley graph even though every vertex has the same degree.

# %%
report = analyze(split).as_dict()
print(report["transitivity"])

# %%
lex = ConnectionPair.of(D6, ["a", "a^2"], ["b", "a^3b"])
print(analyze(lex).as_dict()["cayley"])
