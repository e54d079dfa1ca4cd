import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from twosided.analysis import (
    HypothesisViolation,
    ValencyNotPrime,
    analyze,
    automorphism_group,
    check_cayley_conditions,
    check_connectivity_criterion,
    check_simplified_property,
    check_transitivity,
    connected_components,
    is_prime,
    parity_reachability,
    prime_valency_analysis,
    random_decomposition_parity,
    sabidussi_regular_subgroup,
)
from twosided.connection import ConnectionPair, build_graph, check_property
from twosided.graphs import petersen_graph
from twosided.groups import (
    automorphism_samples,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_symmetric,
    normalizer,
    subgroup_closure,
)
from twosided.sampling import random_pair, random_valid_pair, small_groups

D6 = make_dihedral(6)
S3 = make_symmetric(3)
LEX = ConnectionPair.of(D6, ["a", "a^2"], ["b", "a^3b"])
K6M = ConnectionPair.of(S3, ["e", "(12)"], ["(123)", "(132)"])
SPLIT = ConnectionPair.of(D6, ["ab", "a^3", "e"], ["b"])


def cycle_pair(n):
    G = make_dihedral(n)
    return ConnectionPair.of(G, ["b"], ["a", "a^-1"])


# components and parity


def test_components_of_worked_graphs():
    assert [len(c) for c in connected_components(build_graph(LEX))] == [12]
    assert sorted(map(len, connected_components(build_graph(SPLIT)))) == [4, 8]


def test_edgeless_graph():
    # no arcs can occur, so build an undirected view with none
    from twosided.graphs import SimpleGraph

    assert connected_components(SimpleGraph.from_edges(4, [])) == [[0], [1], [2], [3]]


def test_parity_single_reflection():
    for n in (3, 4):
        G = make_dihedral(n)
        b = G.parse_element("b")
        par = parity_reachability(G.subset([b]))
        assert par[G.identity] == (True, False) and par[b] == (False, True)


def test_parity_rotations():
    for n in (3, 5, 7):
        G = make_dihedral(n)
        par = parity_reachability(G.subset(["a", "a^-1"]))
        assert all(par[G.parse_element(f"a^{i}")] == (True, True) for i in range(n))
    for n in (4, 6):
        G = make_dihedral(n)
        par = parity_reachability(G.subset(["a", "a^-1"]))
        for i in range(n):
            assert par[G.parse_element(f"a^{i}")] == (i % 2 == 0, i % 2 == 1)


# connectivity criterion


def test_cycle_family():
    for n in range(3, 10):
        cc = check_connectivity_criterion(cycle_pair(n))
        assert cc.factorization_holds and cc.star_holds == (n % 2 == 1) and cc.matches_bfs


def test_even_case_component_of_identity():
    n = 6
    P = cycle_pair(n)
    G = P.group
    cc = check_connectivity_criterion(P)
    want = sorted({G.parse_element(f"a^{2 * i % n}") for i in range(n)}
                  | {G.multiply(G.parse_element("b"), G.parse_element(f"a^{(2 * i - 1) % n}")) for i in range(n)})
    assert cc.components[0] == want
    assert set(P.left) | set(P.right) <= set(cc.components[1])


def test_failed_factorization_is_disconnected():
    P = ConnectionPair.of(D6, ["b"], ["a^3"])
    assert check_property(P).overall
    cc = check_connectivity_criterion(P)
    assert not cc.factorization_holds and len(cc.bfs_components) >= 2


def test_rejects_non_inverse_closed():
    with pytest.raises(HypothesisViolation):
        check_connectivity_criterion(LEX)


def test_rejects_pairs_without_property():
    with pytest.raises(HypothesisViolation):
        check_connectivity_criterion(ConnectionPair.of(S3, ["(12)"], ["(12)"]))


INV_GROUPS = [G for G in small_groups(24) if G.order > 1]


@st.composite
def valid_inverse_closed(draw):
    G = INV_GROUPS[draw(st.integers(0, len(INV_GROUPS) - 1))]
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    P = random_valid_pair(G, rng, max_size=2, inverse_closed=True, tries=100)
    return P


@settings(max_examples=200, deadline=None)
@given(valid_inverse_closed())
def test_criterion_agrees_with_bfs(P):
    if P is None:
        return
    cc = check_connectivity_criterion(P)
    assert cc.matches_bfs
    if cc.factorization_holds and not cc.star_holds:
        G = P.group
        assert G.identity in cc.components[0]
        assert set(P.left) | set(P.right) <= set(cc.components[1])


def test_parity_label_stable_under_random_decompositions():
    rng = random.Random(11)
    checked = 0
    for n in (4, 6, 8):
        P = cycle_pair(n)
        labels = check_connectivity_criterion(P).delta_labels
        for g in P.group.elements:
            seen = {random_decomposition_parity(P, g, rng) for _ in range(100)} - {None}
            assert seen <= {labels[g]}
            checked += bool(seen)
    assert checked > 0


# Cayley conditions


def test_lex_pair_left_condition():
    cv = check_cayley_conditions(LEX)
    assert cv.via_GL and cv.gl_graph_matches
    assert cv.connection_set_if_cayley == LEX.right.inverse().product(LEX.left)


def test_right_condition_gives_same_arcs():
    P = ConnectionPair.of(make_cyclic(8), ["a"], ["a^2", "a^6"])
    cv = check_cayley_conditions(P)
    assert cv.via_GR and cv.via_GL and cv.gr_graph_matches and cv.gl_graph_matches


def test_product_of_nonnormal_subgroups_fails_all_conditions():
    G = direct_product(S3, S3)
    t = S3.parse_element("(12)")
    P = ConnectionPair.of(G, [t * 6], [t])
    cv = check_cayley_conditions(P)
    assert check_property(P).overall
    assert not (cv.via_GR or cv.via_GL or cv.via_delta or cv.via_delta_prime)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_abelian_groups_satisfy_both_translation_conditions(seed):
    rng = random.Random(seed)
    G = rng.choice([make_cyclic(n) for n in range(2, 13)])
    P = random_valid_pair(G, rng, tries=100)
    if P is not None:
        cv = check_cayley_conditions(P)
        assert cv.via_GR and cv.via_GL


# symmetry


def test_aut_orders():
    assert automorphism_group(build_graph(K6M)).order == 48
    assert automorphism_group(build_graph(cycle_pair(5))).order == 20
    aut = automorphism_group(build_graph(SPLIT))
    assert sorted(map(len, aut.orbits())) == [4, 8]


def test_sabidussi():
    assert sabidussi_regular_subgroup(build_graph(LEX)) is not None
    assert sabidussi_regular_subgroup(build_graph(SPLIT)) is None
    assert sabidussi_regular_subgroup(petersen_graph()) is None


def test_aut_elements_preserve_arcs():
    g = build_graph(LEX)
    arcs = g.arc_pairs()
    aut = automorphism_group(g)
    for p in aut.elements():
        assert {(p[s], p[t]) for s, t in arcs} == arcs
    assert sum(map(len, aut.orbits())) == 12


def test_transitivity_examples():
    tv = check_transitivity(SPLIT, build_graph(SPLIT))
    assert not tv.k_transitive and tv.vertex_transitive is False
    tv = check_transitivity(LEX, build_graph(LEX))
    assert normalizer(LEX.left).product(normalizer(LEX.right)) == D6.full()
    assert tv.k_transitive and tv.vertex_transitive and tv.k_in_aut


def test_normal_subsets_give_k_transitive():
    G = make_symmetric(4)
    cls = G.subset(["(12)(34)", "(13)(24)", "(14)(23)"])
    P = ConnectionPair(G.subset([G.identity]), cls)
    tv = check_transitivity(P, build_graph(P), cap=0)
    assert normalizer(cls) == G.full() and tv.k_transitive


VALID_GROUPS = [G for G in small_groups(16) if G.order > 2]


@st.composite
def valid_pairs(draw):
    G = VALID_GROUPS[draw(st.integers(0, len(VALID_GROUPS) - 1))]
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    return random_valid_pair(G, rng, max_size=3, inverse_closed=draw(st.booleans()), tries=100)


@settings(max_examples=120, deadline=None)
@given(valid_pairs())
def test_k_and_group_automorphisms_act_on_graph(P):
    if P is None:
        return
    gamma = build_graph(P)
    tv = check_transitivity(P, gamma)
    assert tv.k_in_aut and tv.outer_in_aut
    if tv.k_transitive:
        assert tv.vertex_transitive is True


@settings(max_examples=120, deadline=None)
@given(valid_pairs())
def test_right_condition_yields_regular_subgroup(P):
    if P is None:
        return
    gamma = build_graph(P)
    cv = check_cayley_conditions(P, gamma)
    if cv.via_GR:
        assert cv.gr_graph_matches and sabidussi_regular_subgroup(gamma) is not None
    if cv.via_GL:
        assert cv.gl_graph_matches


def test_tabulated_automorphisms_fixing_both_sides_act():
    for P in (LEX, K6M, SPLIT):
        arcs = build_graph(P).arc_pairs()
        for s in automorphism_samples(P.group):
            if {s[x] for x in P.left} == set(P.left) and {s[x] for x in P.right} == set(P.right):
                assert {(s[a], s[b]) for a, b in arcs} == arcs


# simplified conditions


def test_simplified_overlap_fails():
    G = make_cyclic(6)
    P = ConnectionPair.of(G, ["a", "a^2"], ["a^2"])
    sv = check_simplified_property(P)
    assert sv.applicable and not sv.cond2 and not check_property(P).cond2.passed


def test_simplified_on_lex_pair():
    sv = check_simplified_property(LEX)
    assert sv.applicable and sv.equivalence_ok


def test_simplified_inapplicable():
    sv = check_simplified_property(SPLIT)
    assert not sv.applicable and sv.equivalence_ok is None


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_simplified_equivalence(seed):
    rng = random.Random(seed)
    G = rng.choice(VALID_GROUPS)
    P = random_pair(G, rng, max_size=3, inverse_closed=rng.random() < 0.5)
    sv = check_simplified_property(P)
    if sv.applicable:
        assert sv.equivalence_ok


# prime valency


def test_is_prime():
    assert [k for k in range(20) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_valency_two_cycle_is_cayley():
    rep = prime_valency_analysis(cycle_pair(5))
    assert rep.outcome == "cayley" and rep.consistent


def test_not_prime_rejected():
    with pytest.raises(ValencyNotPrime):
        prime_valency_analysis(LEX)


def test_disconnected_rejected():
    with pytest.raises(HypothesisViolation):
        prime_valency_analysis(SPLIT)


def test_abelian_prime_valency_is_cayley():
    for n in (5, 7, 10):
        G = make_cyclic(n)
        for r in G.elements:
            P = ConnectionPair.of(G, ["a", "a^-1", "e"], [r])
            if not check_property(P).overall or len(connected_components(build_graph(P))) != 1:
                continue
            rep = prime_valency_analysis(P)
            assert rep.outcome == "cayley" and rep.expected_cayley


def test_dichotomy_on_dihedral_of_twice_odd_order():
    G = make_dihedral(5)
    seen = 0
    for L in [G.subset(c) for c in (["a", "a^4", "b"], ["b", "ab", "a^2b"], ["a", "a^2", "b"])]:
        for r in G.elements:
            P = ConnectionPair(L, G.subset([r]))
            if not check_property(P).overall or len(connected_components(build_graph(P))) != 1:
                continue
            seen += 1
            rep = prime_valency_analysis(P)
            assert rep.consistent and rep.outcome == "cayley"
    assert seen > 0


# report


def test_report_schema():
    d = analyze(cycle_pair(6)).as_dict()
    assert list(d) == ["group", "L", "R", "property", "valency", "connectivity", "cayley", "transitivity", "prime_valency"]
    assert set(d["connectivity"]) == {"factorization", "star", "components", "delta"}
    assert d["connectivity"]["components"] == sorted(d["connectivity"]["components"])
    json.dumps(d)


def test_report_on_defective_pair():
    d = analyze(ConnectionPair.of(S3, ["(12)"], ["(13)"])).as_dict()
    assert d["property"]["overall"] is False and d["cayley"] is None and d["valency"] is None


def test_factorization_flag_on_split_pair():
    cc = check_connectivity_criterion(SPLIT)
    assert subgroup_closure(SPLIT.left).product(subgroup_closure(SPLIT.right)) != D6.full()
    assert not cc.factorization_holds and sorted(map(len, cc.components)) == [4, 8]
