"""End-to-end reproduction of the worked example graphs, one claim at a time."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import (
    check_cayley_conditions,
    check_connectivity_criterion,
    check_transitivity,
    connected_components,
    sabidussi_regular_subgroup,
)
from .connection import ConnectionPair, build_graph, cayley_graph, check_property
from .graphs import SimpleGraph
from .groups import direct_product, make_dihedral, make_symmetric, subgroup_closure
from .iso import coordinate_inversion_iso, graphs_isomorphic, iso_swap, recognize_shape, verify_shape


@dataclass(frozen=True)
class Claim:
    example: str
    claim: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'ok' if self.ok else 'MISMATCH'}] {self.example}: {self.claim}" + (f" ({self.detail})" if self.detail else "")


class _Collector:
    def __init__(self, example):
        self.example = example
        self.claims: list[Claim] = []

    def __call__(self, claim, ok, detail=""):
        self.claims.append(Claim(self.example, claim, bool(ok), str(detail)))
        return ok


def dihedral_pair(n: int, left: str, right: str) -> ConnectionPair:
    G = make_dihedral(n)
    return ConnectionPair.of(G, [G.parse_element(t) for t in left.split(",")],
                             [G.parse_element(t) for t in right.split(",")])


def _names(G, vs):
    return sorted(G.name(v) for v in vs)


def lex_cycle_example() -> list[Claim]:
    c = _Collector("dihedral-12-lex-cycle")
    pair = dihedral_pair(6, "a,a^2", "b,a^3b")
    G, L, R = pair.group, pair.left, pair.right
    c("property holds", check_property(pair).overall)
    c("L is not inverse-closed", not L.is_inverse_closed())
    c("R is inverse-closed", R.is_inverse_closed())
    c("L L^-1 = {e, a, a^5}", L.product(L.inverse()).names() == ["e", "a", "a^5"], L.product(L.inverse()).names())
    c("R R^-1 = {e, a^3}", R.product(R.inverse()).names() == ["e", "a^3"], R.product(R.inverse()).names())
    gamma = build_graph(pair)
    c("valency 4", gamma.is_simple and gamma.valency() == 4, gamma.valency())
    cv = check_cayley_conditions(pair, gamma)
    c("left-translation condition holds", cv.via_GL)
    c("inversion maps the graph onto Cay(G, R^-1 L)", cv.gl_graph_matches)
    c("R^-1 L equals L R", R.inverse().product(L) == L.product(R))
    cay = cayley_graph(L.product(R))
    c("graph is isomorphic to Cay(G, L R)", graphs_isomorphic(gamma, cay) is not None)
    shape = recognize_shape(gamma)
    c("shape C6[2K1]", str(shape) == "lexicographic-cycle-with-2K1(6)" and verify_shape(gamma, shape), shape)
    c("regular subgroup of Aut found", sabidussi_regular_subgroup(gamma) is not None)
    return c.claims


def k6_matching_example() -> list[Claim]:
    c = _Collector("sym3-k6-minus-matching")
    G = make_symmetric(3)
    pair = ConnectionPair.of(G, [G.parse_element("e"), G.parse_element("(12)")],
                             [G.parse_element("(123)"), G.parse_element("(132)")])
    c("property holds", check_property(pair).overall)
    gamma = build_graph(pair)
    c("valency 4", gamma.is_simple and gamma.valency() == 4, gamma.valency())
    shape = recognize_shape(gamma)
    matching = sorted(tuple(sorted((G.name(u), G.name(v)))) for u, v in shape.witness or ())
    want = sorted(tuple(sorted(p)) for p in (("e", "(12)"), ("(13)", "(123)"), ("(23)", "(132)")))
    c("shape K6 minus a perfect matching", str(shape) == "complete-minus-perfect-matching(6)" and verify_shape(gamma, shape), shape)
    c("removed matching is {e,(12)}, {(13),(123)}, {(23),(132)}", matching == want, matching)
    c("graph equals Cay(G, L R)", gamma.arc_pairs() == cayley_graph(pair.left.product(pair.right)).arc_pairs())
    res = iso_swap(pair)
    c("inversion is an isomorphism onto 2SCay(G; R, L)", res.bijection.description == "inverse-map")
    swapped = res.target
    c("2SCay(G; R, L) is isomorphic to Cay(G, R L)",
      graphs_isomorphic(swapped, cayley_graph(pair.right.product(pair.left))) is not None)
    return c.claims


def split_components_example() -> list[Claim]:
    c = _Collector("dihedral-12-split-components")
    pair = dihedral_pair(6, "ab,a^3,e", "b")
    G = pair.group
    c("property holds", check_property(pair).overall)
    gamma = build_graph(pair)
    c("valency 3", gamma.is_simple and gamma.valency() == 3, gamma.valency())
    fact = subgroup_closure(pair.left).product(subgroup_closure(pair.right)) == G.full()
    c("<L><R> is not G", not fact)
    comps = connected_components(gamma)
    sizes = sorted(len(x) for x in comps)
    c("two components of orders 4 and 8", sizes == [4, 8], sizes)
    sv = gamma.simple_view()
    parts = [SimpleGraph.induced(sv, comp)[0] for comp in comps]
    c("components are not isomorphic", len(parts) == 2 and graphs_isomorphic(parts[0], parts[1]) is None)
    tv = check_transitivity(pair, gamma)
    c("not vertex-transitive", tv.vertex_transitive is False, f"orbits={tv.orbit_count}")
    c("no regular subgroup of Aut", sabidussi_regular_subgroup(gamma) is None)
    return c.claims


def cycle_sweep_example(ns=range(3, 13)) -> list[Claim]:
    c = _Collector("dihedral-cycle-sweep")
    for n in ns:
        pair = dihedral_pair(n, "b", "a,a^-1")
        G = pair.group
        gamma = build_graph(pair)
        c(f"n={n}: property holds, valency 2", check_property(pair).overall and gamma.valency() == 2)
        comps = connected_components(gamma)
        c(f"n={n}: connected iff n odd", (len(comps) == 1) == (n % 2 == 1), len(comps))
        shape = recognize_shape(gamma)
        want = f"cycle({2 * n})" if n % 2 else f"disjoint-cycles(2,{n})"
        c(f"n={n}: shape {want}", str(shape) == want and verify_shape(gamma, shape), shape)
        cc = check_connectivity_criterion(pair, gamma)
        c(f"n={n}: criterion agrees with BFS", cc.matches_bfs and cc.factorization_holds)
        if n % 2 == 0:
            a = lambda i: G.parse_element(f"a^{i % n}")
            c0 = {a(2 * i) for i in range(n)} | {G.multiply(G.parse_element("b"), a(2 * i - 1)) for i in range(n)}
            got = set(cc.components[0]) if cc.components else set()
            c(f"n={n}: component of e is {{a^2i, b a^(2i-1)}}", got == c0 and G.identity in got, _names(G, got))
    return c.claims


def product_example(G1, G2, h1: str, h2: str, key: str) -> list[Claim]:
    """L = (H1 - e) x {e}, R = {e} x (H2 - e) for subgroups generated by h1, h2."""
    c = _Collector(key)
    G = direct_product(G1, G2)
    H1 = subgroup_closure(G1.subset([G1.parse_element(h1)]))
    H2 = subgroup_closure(G2.subset([G2.parse_element(h2)]))
    n2 = G2.order
    L = G.subset(x * n2 + G2.identity for x in H1 if x != G1.identity)
    R = G.subset(G1.identity * n2 + y for y in H2 if y != G2.identity)
    pair = ConnectionPair(L, R)
    c("property holds", check_property(pair).overall)
    cv = check_cayley_conditions(pair)
    c("no sufficient Cayley condition holds",
      not (cv.via_GR or cv.via_GL or cv.via_delta or cv.via_delta_prime),
      f"GR={cv.via_GR} GL={cv.via_GL} delta={cv.via_delta} delta'={cv.via_delta_prime}")
    _, phi = coordinate_inversion_iso(pair)
    c("coordinate inversion is an isomorphism onto Cay(G, L R)", phi is not None)
    c("coordinate inversion is an involution", all(phi(phi(g)) == g for g in G.elements))
    return c.claims


def run_examples(include_large: bool = True) -> list[Claim]:
    claims = []
    claims += lex_cycle_example()
    claims += k6_matching_example()
    claims += split_components_example()
    claims += cycle_sweep_example()
    S3 = make_symmetric(3)
    claims += product_example(S3, S3, "(12)", "(12)", "product-of-nonnormal-subgroups")
    if include_large:
        claims += product_example(S3, make_dihedral(4), "(12)", "b", "product-sym3-dihedral-8")
    return claims
