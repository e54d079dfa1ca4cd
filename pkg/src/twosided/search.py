"""Exhaustive searches over connection pairs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from . import symmetry
from .analysis import (
    check_cayley_conditions,
    check_transitivity,
    connected_components,
    sabidussi_regular_subgroup,
)
from .connection import ConnectionPair, build_graph, check_property
from .graphs import petersen_graph
from .groups import ElementSet, FiniteGroup, make_cyclic, make_dihedral
from .sampling import inverse_pairs, small_groups

DEFAULT_CENSUS_ORDER_CAP = 24


def subsets_of_size(G: FiniteGroup, k: int) -> Iterator[ElementSet]:
    for combo in combinations(range(G.order), k):
        yield G.subset(combo)


def inverse_closed_subsets(G: FiniteGroup, max_size: int) -> Iterator[ElementSet]:
    blocks = inverse_pairs(G)
    for k in range(1, len(blocks) + 1):
        for combo in combinations(blocks, k):
            bits = 0
            for b in combo:
                bits |= b.bits
            S = ElementSet(G, bits)
            if len(S) <= max_size:
                yield S


def pairs_with_valency(G: FiniteGroup, valency: int) -> Iterator[ConnectionPair]:
    """All (L, R) with |L| |R| == valency, in a fixed order."""
    for a in range(1, valency + 1):
        if valency % a:
            continue
        b = valency // a
        if a > G.order or b > G.order:
            continue
        rights = list(subsets_of_size(G, b))
        for L in subsets_of_size(G, a):
            for R in rights:
                yield ConnectionPair(L, R)


@dataclass
class PetersenSearchReport:
    valency: int
    candidates: dict[str, int] = field(default_factory=dict)
    pairs_checked: dict[str, int] = field(default_factory=dict)
    hits: list[ConnectionPair] = field(default_factory=list)
    visited: list[ConnectionPair] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "valency": self.valency,
            "pairs_checked": self.pairs_checked,
            "candidates": self.candidates,
            "hits": [{"group": p.group.label, "L": p.left.names(), "R": p.right.names()} for p in self.hits],
        }


def petersen_search(groups: list[FiniteGroup] | None = None, valency: int = 3) -> PetersenSearchReport:
    """Every pair with the property and |L| |R| = ``valency`` over the groups
    of order 10, each graph tested for isomorphism with the Petersen graph."""
    if groups is None:
        groups = [make_cyclic(10), make_dihedral(5)]
    target = petersen_graph()
    rep = PetersenSearchReport(valency)
    for G in groups:
        checked = valid = 0
        for pair in pairs_with_valency(G, valency):
            checked += 1
            if not check_property(pair).overall:
                continue
            valid += 1
            rep.visited.append(pair)
            gamma = build_graph(pair)
            if symmetry.find_isomorphism(target, gamma.simple_view()) is not None:
                rep.hits.append(pair)
        rep.pairs_checked[G.label] = checked
        rep.candidates[G.label] = valid
    return rep


def census_rows(groups: list[FiniteGroup], max_valency: int = 4, inverse_closed: bool = False,
                cap: int | None = symmetry.DEFAULT_VERTEX_CAP) -> Iterator[dict]:
    """One row per pair with the property, then one summary row per group.

    ``cayley`` is True when a sufficient condition or a regular subgroup of
    Aut is found, False when the graph is not vertex-transitive, and None if
    the regular-subgroup search hit its size limit.
    """
    for G in groups:
        totals = {"pairs_checked": 0, "valid": 0, "connected": 0, "cayley": 0, "vertex_transitive": 0, "non_vt": 0}
        if inverse_closed:
            sets = list(inverse_closed_subsets(G, max_valency))
            pairs = (ConnectionPair(L, R) for L in sets for R in sets if len(L) * len(R) <= max_valency)
        else:
            pairs = (p for k in range(1, max_valency + 1) for p in pairs_with_valency(G, k))
        for pair in pairs:
            totals["pairs_checked"] += 1
            if not check_property(pair).overall:
                continue
            totals["valid"] += 1
            row = census_row(pair, cap)
            totals["connected"] += row["connected"]
            totals["cayley"] += bool(row["cayley"])
            if row["vertex_transitive"] is True:
                totals["vertex_transitive"] += 1
            elif row["vertex_transitive"] is False:
                totals["non_vt"] += 1
            yield row
        yield {"group": G.label, "summary": True, **totals}


def census_row(pair: ConnectionPair, cap: int | None = symmetry.DEFAULT_VERTEX_CAP) -> dict:
    G = pair.group
    gamma = build_graph(pair)
    comps = connected_components(gamma)
    cv = check_cayley_conditions(pair, gamma)
    tv = check_transitivity(pair, gamma, cap)
    if cv.any_condition:
        cayley, evidence = True, cv.regular_subgroup_found or "normalizer factorization"
    elif tv.vertex_transitive is False:
        cayley, evidence = False, "not vertex-transitive"
    elif tv.vertex_transitive is None:
        cayley, evidence = None, "above vertex cap"
    else:
        try:
            found = sabidussi_regular_subgroup(gamma, cap)
        except symmetry.CapExceeded:
            cayley, evidence = None, "search limit"
        else:
            cayley = found is not None
            evidence = "regular subgroup of Aut" if cayley else "no regular subgroup"
    return {
        "group": G.label,
        "L": pair.left.names(),
        "R": pair.right.names(),
        "valency": len(pair.left) * len(pair.right),
        "connected": len(comps) == 1,
        "components": [len(c) for c in comps],
        "cayley": cayley,
        "cayley_evidence": evidence,
        "k_transitive": tv.k_transitive,
        "vertex_transitive": tv.vertex_transitive,
    }


def census_groups(max_order: int, force: bool = False) -> list[FiniteGroup]:
    if max_order > DEFAULT_CENSUS_ORDER_CAP and not force:
        raise ValueError(f"max order {max_order} exceeds cap {DEFAULT_CENSUS_ORDER_CAP}; pass force")
    return small_groups(max_order)
