"""Connectivity, Cayley-ness and vertex-transitivity of two-sided Cayley graphs."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from . import symmetry
from .connection import (
    ConnectionPair,
    PropertyVerdict,
    TwoSidedCayleyGraph,
    build_graph,
    cayley_graph,
    check_property,
    lambda_map,
)
from .graphs import SimpleGraph, components
from .groups import (
    ElementSet,
    FiniteGroup,
    automorphism_samples,
    center,
    conjugacy_class,
    normalizer,
    subgroup_closure,
)

__all__ = [
    "HypothesisViolation",
    "ValencyNotPrime",
    "ConnectivityVerdict",
    "CayleyVerdict",
    "TransitivityVerdict",
    "SimplifiedVerdict",
    "PrimeValencyReport",
    "AnalysisReport",
    "connected_components",
    "parity_reachability",
    "word_parities",
    "check_connectivity_criterion",
    "check_cayley_conditions",
    "automorphism_group",
    "sabidussi_regular_subgroup",
    "check_transitivity",
    "check_simplified_property",
    "prime_valency_analysis",
    "is_prime",
    "analyze",
]


class HypothesisViolation(ValueError):
    pass


class ValencyNotPrime(ValueError):
    pass


def _as_simple(graph) -> SimpleGraph:
    if isinstance(graph, SimpleGraph):
        return graph
    if not graph.is_simple:
        raise ValueError("graph is not simple and undirected")
    return graph.simple_view()


def connected_components(graph: TwoSidedCayleyGraph | SimpleGraph) -> list[list[int]]:
    """Weakly connected components, sorted by element index."""
    if isinstance(graph, SimpleGraph):
        return components(graph.adj)
    return components(graph.weak_adjacency())


# words and parity


def word_parities(S: ElementSet) -> tuple[int, int]:
    """Bitsets of elements that are values of words in S of even / odd length.

    The empty word counts (even length, value e).
    """
    G = S.group
    gens = list(S)
    seen = [0, 0]
    seen[0] = 1 << G.identity
    queue = deque([(G.identity, 0)])
    while queue:
        g, p = queue.popleft()
        q = 1 - p
        row = G.mult[g]
        for s in gens:
            h = row[s]
            if not (seen[q] >> h) & 1:
                seen[q] |= 1 << h
                queue.append((h, q))
    return seen[0], seen[1]


def parity_reachability(S: ElementSet) -> list[tuple[bool, bool]]:
    """Per element: (value of an even-length word in S, value of an odd-length word)."""
    even, odd = word_parities(S)
    return [(bool((even >> g) & 1), bool((odd >> g) & 1)) for g in S.group.elements]


@dataclass(frozen=True)
class ConnectivityVerdict:
    """``components`` is the partition the criterion predicts (C0 then C1 in
    the two-component case); when the factorization fails it is the BFS
    partition. ``delta_labels[g]`` is the word-length parity class of g."""

    factorization_holds: bool
    star_holds: bool
    opposite_parity_words: bool
    components: list[list[int]]
    delta_labels: list[int] | None
    bfs_components: list[list[int]]

    @property
    def predicted_count(self) -> int | None:
        if self.star_holds:
            return 1
        if self.factorization_holds:
            return 2
        return None

    @property
    def matches_bfs(self) -> bool:
        bfs = sorted(self.bfs_components)
        if self.star_holds:
            return len(bfs) == 1
        if self.factorization_holds:
            return sorted(self.components) == bfs
        return len(bfs) >= 2

    def as_dict(self) -> dict:
        return {
            "factorization": self.factorization_holds,
            "star": self.star_holds,
            "components": self.components,
            "delta": self.delta_labels,
        }


def check_connectivity_criterion(pair: ConnectionPair, graph: TwoSidedCayleyGraph | None = None) -> ConnectivityVerdict:
    """Connectivity from words in L and R, for inverse-closed pairs with the property.

    The graph is connected iff G = <L><R> and some word in L times some word in
    R of opposite length parity evaluates to e. If only the factorization
    holds, vertices split by the parity of |w| + |w'| over any g = w w'.
    """
    L, R = pair.left, pair.right
    if not (L.is_inverse_closed() and R.is_inverse_closed()):
        raise HypothesisViolation("connectivity criterion needs inverse-closed L and R")
    if not check_property(pair).overall:
        raise HypothesisViolation("connectivity criterion needs a pair with the 2S-Cayley property")
    G = pair.group
    bfs = connected_components(graph or build_graph(pair))
    fact = subgroup_closure(L).product(subgroup_closure(R)) == G.full()
    le, lo = word_parities(L)
    re_, ro = word_parities(R)
    inv = G.inv
    words = any(
        ((le >> g) & 1 and (ro >> inv[g]) & 1) or ((lo >> g) & 1 and (re_ >> inv[g]) & 1)
        for g in G.elements
    )
    star = fact and words
    if star:
        return ConnectivityVerdict(True, True, True, [list(G.elements)], None, bfs)
    if not fact:
        return ConnectivityVerdict(False, False, words, bfs, None, bfs)
    labels = _delta_labels(G, (le, lo), (re_, ro))
    c0 = [g for g in G.elements if labels[g] == 0]
    c1 = [g for g in G.elements if labels[g] == 1]
    return ConnectivityVerdict(True, False, False, [c0, c1], labels, bfs)


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _delta_labels(G: FiniteGroup, lpar, rpar) -> list[int]:
    m = G.mult
    seen = [set() for _ in G.elements]
    for p in (0, 1):
        xs = list(_bits(lpar[p]))
        for q in (0, 1):
            ys = list(_bits(rpar[q]))
            for x in xs:
                row = m[x]
                for y in ys:
                    seen[row[y]].add((p + q) % 2)
    labels = []
    for g, s in enumerate(seen):
        if len(s) != 1:
            raise RuntimeError(f"parity class of element {g} is not well defined: {s}")
        labels.append(s.pop())
    return labels


def random_decomposition_parity(pair: ConnectionPair, g: int, rng: random.Random, max_len: int = 12) -> int | None:
    """Parity of |w| + |w'| for a random decomposition g = w w', or None if none was hit."""
    G = pair.group
    L, R = list(pair.left), list(pair.right)
    m = G.mult
    for _ in range(2000):
        k = rng.randrange(max_len + 1)
        x = G.identity
        for _ in range(k):
            x = m[x][rng.choice(L)]
        j = rng.randrange(max_len + 1)
        y = G.identity
        for _ in range(j):
            y = m[y][rng.choice(R)]
        if m[x][y] == g:
            return (k + j) % 2
    return None


# Cayley conditions


@dataclass(frozen=True)
class CayleyVerdict:
    via_GR: bool
    via_GL: bool
    via_delta: bool
    via_delta_prime: bool
    regular_subgroup_found: str | None
    connection_set_if_cayley: ElementSet | None
    gr_graph_matches: bool | None = None
    gl_graph_matches: bool | None = None
    witness_GR: int | None = None
    witness_GL: int | None = None

    @property
    def any_condition(self) -> bool:
        return self.via_GR or self.via_GL or self.via_delta or self.via_delta_prime

    def as_dict(self) -> dict:
        S = self.connection_set_if_cayley
        return {
            "via_GR": self.via_GR,
            "via_GL": self.via_GL,
            "via_delta": self.via_delta,
            "via_delta_prime": self.via_delta_prime,
            "regular_subgroup": self.regular_subgroup_found,
            "connection_set": S.names() if S is not None else None,
        }


def check_cayley_conditions(pair: ConnectionPair, graph: TwoSidedCayleyGraph | None = None) -> CayleyVerdict:
    """Sufficient conditions for Cayley-ness, each checked by exhaustive g-scan.

    via_GR: ``L^-1 g R == L^-1 R g`` for all g; then the graph is Cay(G, L^-1 R).
    via_GL: ``L^-1 g R == g L^-1 R`` for all g; then inversion maps it onto Cay(G, R^-1 L).
    via_delta / via_delta_prime: the two normalizer factorizations of G.
    """
    G = pair.group
    L, R = pair.left, pair.right
    Li = L.inverse()
    LiR = Li.product(R)
    wr = wl = None
    for g in G.elements:
        lhs = Li.translate(g).product(R)
        if wr is None and lhs != LiR.translate(g, "right"):
            wr = g
        if wl is None and lhs != LiR.translate(g, "left"):
            wl = g
    via_gr, via_gl = wr is None, wl is None
    n_li, n_lir, n_r = normalizer(Li), normalizer(LiR), normalizer(R)
    full = G.full()
    via_d = (n_li & n_lir).product(n_r) == full
    via_dp = n_li.product(n_lir & n_r) == full

    gamma = graph or build_graph(pair)
    arcs = gamma.arc_pairs()
    gr_ok = gl_ok = None
    conn = None
    found = None
    if via_gr:
        gr_ok = cayley_graph(LiR).arc_pairs() == arcs
        conn, found = LiR, "G_R"
    if via_gl:
        RiL = R.inverse().product(L)
        inv = G.inv
        gl_ok = {(inv[s], inv[t]) for s, t in arcs} == cayley_graph(RiL).arc_pairs()
        if conn is None:
            conn, found = RiL, "G_L"
    return CayleyVerdict(via_gr, via_gl, via_d, via_dp, found, conn, gr_ok, gl_ok, wr, wl)


def automorphism_group(graph, cap: int | None = symmetry.DEFAULT_VERTEX_CAP) -> symmetry.AutomorphismGroup:
    """Automorphism group of a simple graph as a stabilizer chain."""
    return symmetry.automorphism_group(_as_simple(graph), cap=cap)


def sabidussi_regular_subgroup(graph, cap: int | None = symmetry.DEFAULT_VERTEX_CAP,
                               aut: symmetry.AutomorphismGroup | None = None) -> symmetry.RegularSubgroup | None:
    """A vertex-regular subgroup of Aut(graph), i.e. a certificate that it is a Cayley graph."""
    if aut is not None:
        return symmetry.regular_subgroup(aut)
    return symmetry.cayley_certificate(_as_simple(graph), cap)


# vertex-transitivity


@dataclass(frozen=True)
class TransitivityVerdict:
    k_transitive: bool
    k_in_aut: bool
    orbit_count: int | None
    vertex_transitive: bool | None
    outer_in_aut: bool
    k_orbit_of_identity: list[int] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "k_transitive": self.k_transitive,
            "k_in_aut": self.k_in_aut,
            "orbit_count": self.orbit_count,
            "vertex_transitive": self.vertex_transitive,
        }


def check_transitivity(pair: ConnectionPair, graph: TwoSidedCayleyGraph | None = None,
                       cap: int | None = symmetry.DEFAULT_VERTEX_CAP) -> TransitivityVerdict:
    """Symmetries from normalizers, and the actual orbit count of Aut.

    Every ``g -> x^-1 g y`` with x in N_G(L), y in N_G(R) is checked to map
    arcs to arcs, as is every tabulated group automorphism fixing L and R
    setwise. ``vertex_transitive`` is None above the vertex cap or for
    non-simple graphs.
    """
    G = pair.group
    gamma = graph or build_graph(pair)
    arcs = gamma.arc_pairs()
    nl, nr = normalizer(pair.left), normalizer(pair.right)
    k_ok = True
    for x in nl:
        for y in nr:
            img = lambda_map(G, x, y).image
            if {(img[s], img[t]) for s, t in arcs} != arcs:
                k_ok = False
                break
        if not k_ok:
            break
    outer_ok = True
    for sigma in automorphism_samples(G):
        if pair.left.bits == _image_bits(pair.left, sigma) and pair.right.bits == _image_bits(pair.right, sigma):
            if {(sigma[s], sigma[t]) for s, t in arcs} != arcs:
                outer_ok = False
                break
    k_orbit = sorted({G.mult[G.inv[x]][y] for x in nl for y in nr})
    k_trans = nl.product(nr) == G.full()
    orbit_count = vt = None
    if gamma.is_simple and (cap is None or G.order <= cap):
        orbit_count = len(automorphism_group(gamma, cap).orbits())
        vt = orbit_count == 1
    return TransitivityVerdict(k_trans, k_ok, orbit_count, vt, outer_ok, k_orbit)


def _image_bits(S: ElementSet, sigma) -> int:
    out = 0
    for g in S:
        out |= 1 << sigma[g]
    return out


@dataclass(frozen=True)
class SimplifiedVerdict:
    """The single-set conditions, valid in place of the full ones when
    G = N_G(L) N_G(R). ``equivalence_ok`` is None when not applicable."""

    applicable: bool
    cond1: bool
    cond2: bool
    cond3: bool
    equivalence_ok: bool | None
    witnesses: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3


def check_simplified_property(pair: ConnectionPair, full: PropertyVerdict | None = None) -> SimplifiedVerdict:
    """``L^-1 R == L R^-1``, ``L & R`` empty, ``L^-1 L & R^-1 R == {e}``."""
    G = pair.group
    L, R = pair.left, pair.right
    Li, Ri = L.inverse(), R.inverse()
    applicable = normalizer(L).product(normalizer(R)) == G.full()
    a, b = Li.product(R), L.product(Ri)
    c1 = a == b
    meet = L & R
    c2 = not meet
    q = (Li.product(L) & Ri.product(R)) - G.singleton(G.identity)
    c3 = not q
    wit = {}
    if not c1:
        wit["cond1"] = next(iter(ElementSet(G, a.bits ^ b.bits)))
    if not c2:
        wit["cond2"] = next(iter(meet))
    if not c3:
        wit["cond3"] = next(iter(q))
    eq = None
    if applicable:
        full = full or check_property(pair)
        eq = (c1 and c2 and c3) == full.overall
    return SimplifiedVerdict(applicable, c1, c2, c3, eq, wit)


# prime valency


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeValencyReport:
    valency: int
    is_prime: bool
    outcome: str
    singleton_side: str
    singleton: int
    singleton_central: bool
    class_of_r: ElementSet
    generation_check: bool
    disjointness_check: bool
    expected_cayley: bool
    cayley_evidence: str | None

    @property
    def dichotomy_facts_hold(self) -> bool:
        return (
            self.valency % 2 == 1
            and not self.singleton_central
            and self.generation_check
            and self.disjointness_check
        )

    @property
    def consistent(self) -> bool:
        """No contradiction with the prime-valency dichotomy."""
        if self.outcome == "cayley":
            return True
        return self.dichotomy_facts_hold and not self.expected_cayley

    def as_dict(self) -> dict:
        return {
            "valency": self.valency,
            "outcome": self.outcome,
            "singleton_side": self.singleton_side,
            "singleton_central": self.singleton_central,
            "generation_check": self.generation_check,
            "disjointness_check": self.disjointness_check,
            "expected_cayley": self.expected_cayley,
            "evidence": self.cayley_evidence,
        }


def _dihedral_twice_odd(G: FiniteGroup) -> bool:
    return G.family == "dihedral" and G.params[0] % 2 == 1


def prime_valency_analysis(pair: ConnectionPair, graph: TwoSidedCayleyGraph | None = None,
                           cap: int | None = symmetry.DEFAULT_VERTEX_CAP) -> PrimeValencyReport:
    """Either find a Cayley certificate or collect the facts a non-Cayley
    connected graph of prime valency must satisfy: one side is a singleton
    {r} with r non-central, the other side generates G and avoids the class of r."""
    L, R = pair.left, pair.right
    p = len(L) * len(R)
    if not is_prime(p):
        raise ValencyNotPrime(f"valency {p} is not prime")
    gamma = graph or build_graph(pair)
    if not gamma.is_simple:
        raise HypothesisViolation("graph is not simple and undirected")
    if len(connected_components(gamma)) != 1:
        raise HypothesisViolation("graph is not connected")
    G = pair.group
    if len(R) == 1:
        side, single, big = "R", next(iter(R)), L
    else:
        side, single, big = "L", next(iter(L)), R
    cls = conjugacy_class(G, single)
    central = single in center(G)
    gen = subgroup_closure(big) == G.full()
    disjoint = not (big & cls)

    cv = check_cayley_conditions(pair, gamma)
    evidence = None
    if cv.any_condition:
        evidence = cv.regular_subgroup_found or "normalizer factorization"
    elif sabidussi_regular_subgroup(gamma, cap) is not None:
        evidence = "regular subgroup of Aut"
    outcome = "cayley" if evidence else "dichotomy-case"
    expected = G.is_abelian() or _dihedral_twice_odd(G)
    return PrimeValencyReport(p, True, outcome, side, single, central, cls, gen, disjoint, expected, evidence)


# full report


@dataclass
class AnalysisReport:
    group: str
    left: list[str]
    right: list[str]
    property: dict
    valency: int | None
    connectivity: dict
    cayley: dict | None
    transitivity: dict | None
    prime_valency: dict | None

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "L": self.left,
            "R": self.right,
            "property": self.property,
            "valency": self.valency,
            "connectivity": self.connectivity,
            "cayley": self.cayley,
            "transitivity": self.transitivity,
            "prime_valency": self.prime_valency,
        }


def analyze(pair: ConnectionPair, cap: int | None = symmetry.DEFAULT_VERTEX_CAP) -> AnalysisReport:
    """Run every applicable check; sections whose hypotheses fail are null."""
    G = pair.group
    verdict = check_property(pair)
    gamma = build_graph(pair)
    valency = len(pair.left) * len(pair.right) if verdict.overall else None
    bfs = connected_components(gamma)
    connectivity = {
        "factorization": subgroup_closure(pair.left).product(subgroup_closure(pair.right)) == G.full(),
        "star": None,
        "components": bfs,
        "delta": None,
    }
    cayley = transitivity = prime = None
    if verdict.overall:
        if pair.left.is_inverse_closed() and pair.right.is_inverse_closed():
            connectivity = check_connectivity_criterion(pair, gamma).as_dict()
        cv = check_cayley_conditions(pair, gamma)
        cayley = cv.as_dict()
        tv = check_transitivity(pair, gamma, cap)
        transitivity = tv.as_dict()
        if is_prime(valency) and len(bfs) == 1 and (cap is None or G.order <= cap):
            prime = prime_valency_analysis(pair, gamma, cap).as_dict()
    return AnalysisReport(
        G.label,
        pair.left.names(),
        pair.right.names(),
        verdict.as_dict(G),
        valency,
        connectivity,
        cayley,
        transitivity,
        prime,
    )
