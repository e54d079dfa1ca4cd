# %% [markdown]
# # Isomorphisms and exhaustive searches
#
# Inverting, translating or applying a group automorphism gives an explicit
# isomorphism onto another two-sided graph. Every bijection is re-checked arc
# by arc.

# %%
from twosided import ConnectionPair, iso_swap, iso_translate, make_dihedral, recognize_shape
from twosided.iso import maps_arcs
from twosided.search import census_rows, petersen_search

D6 = make_dihedral(6)
pair = ConnectionPair.of(D6, ["a", "a^2"], ["b", "a^3b"])
first = iso_swap(pair)
second = iso_translate(first.target.pair, D6.parse_element("a"), D6.parse_element("b"))
chain = first.bijection.then(second.bijection)
print("composed map is an isomorphism:", maps_arcs(first.source, second.target, chain.forward))
print("shape:", recognize_shape(first.source))

# %% [markdown]
# No cubic two-sided graph over a group of order 10 is the Petersen graph.

# %%
rep = petersen_search()
print(rep.as_dict()["candidates"], "hits:", len(rep.hits))

# %% [markdown]
# A census over one group, summary line only.

# %%
*_, summary = census_rows([D6], max_valency=2)
print(summary)
