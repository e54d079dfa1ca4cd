"""Explicit isomorphisms between two-sided Cayley graphs, and shape recognition.

Every map returned here has been checked arc by arc against both graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from . import symmetry
from .connection import ConnectionPair, TwoSidedCayleyGraph, build_graph, cayley_graph, check_property
from .graphs import SimpleGraph, components, petersen_graph
from .groups import is_automorphism, subgroup_closure

__all__ = [
    "VertexBijection",
    "IsoResult",
    "ShapeVerdict",
    "IsomorphismCheckFailed",
    "NotAnAutomorphism",
    "ShapeViolation",
    "maps_arcs",
    "iso_swap",
    "iso_translate",
    "iso_group_automorphism",
    "coordinate_inversion_iso",
    "graphs_isomorphic",
    "recognize_shape",
    "verify_shape",
]


class IsomorphismCheckFailed(AssertionError):
    pass


class NotAnAutomorphism(ValueError):
    def __init__(self, pair):
        super().__init__(f"not a group automorphism: fails on pair {pair}")
        self.pair = pair


class ShapeViolation(ValueError):
    pass


@dataclass(frozen=True)
class VertexBijection:
    forward: tuple[int, ...]
    description: str = "explicit"
    params: tuple = ()

    def __post_init__(self):
        if sorted(self.forward) != list(range(len(self.forward))):
            raise ValueError("forward is not a bijection")

    def __call__(self, v: int) -> int:
        return self.forward[v]

    def __len__(self):
        return len(self.forward)

    def then(self, other: "VertexBijection") -> "VertexBijection":
        return VertexBijection(symmetry.compose(self.forward, other.forward), "explicit")

    def inverse(self) -> "VertexBijection":
        return VertexBijection(symmetry.invert(self.forward), "explicit")

    def to_json_obj(self) -> dict:
        return {"permutation": list(self.forward), "description": self.description}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "VertexBijection":
        d = json.loads(text)
        return cls(tuple(d["permutation"]), d["description"])


@dataclass(frozen=True)
class IsoResult:
    source: TwoSidedCayleyGraph
    target: TwoSidedCayleyGraph
    bijection: VertexBijection


def _arc_set(graph) -> set[tuple[int, int]]:
    if isinstance(graph, SimpleGraph):
        return {(u, v) for u in range(graph.n) for v in graph.adj[u]}
    return graph.arc_pairs()


def maps_arcs(source, target, phi: Sequence[int]) -> bool:
    """(u, v) is an arc of source iff (phi u, phi v) is an arc of target."""
    return {(phi[u], phi[v]) for u, v in _arc_set(source)} == _arc_set(target)


def _finish(pair, target_pair, phi, description, params=()):
    src = build_graph(pair)
    dst = build_graph(target_pair)
    if not maps_arcs(src, dst, phi):
        raise IsomorphismCheckFailed(f"{description} map is not an isomorphism for {pair!r}")
    return IsoResult(src, dst, VertexBijection(tuple(phi), description, params))


def _require_property(pair):
    if not check_property(pair).overall:
        raise ValueError(f"{pair!r} does not have the 2S-Cayley property")


def iso_swap(pair: ConnectionPair) -> IsoResult:
    """2SCay(G; L, R) -> 2SCay(G; R, L) via g -> g^-1."""
    _require_property(pair)
    return _finish(pair, pair.swapped(), pair.group.inv, "inverse-map")


def iso_translate(pair: ConnectionPair, x: int, y: int) -> IsoResult:
    """2SCay(G; L, R) -> 2SCay(G; L^x, R^y) via g -> x^-1 g y."""
    _require_property(pair)
    G = pair.group
    m = G.mult
    phi = [m[m[G.inv[x]][g]][y] for g in G.elements]
    target = ConnectionPair(pair.left.conjugate(x), pair.right.conjugate(y))
    return _finish(pair, target, phi, "translation", (x, y))


def _apply(S, sigma):
    return S.group.subset(sigma[g] for g in S)


def iso_group_automorphism(pair: ConnectionPair, sigma: Sequence[int]) -> IsoResult:
    """2SCay(G; L, R) -> 2SCay(G; L^sigma, R^sigma) via g -> g^sigma."""
    bad = is_automorphism(pair.group, sigma)
    if bad is not None:
        raise NotAnAutomorphism(bad)
    _require_property(pair)
    target = ConnectionPair(_apply(pair.left, sigma), _apply(pair.right, sigma))
    return _finish(pair, target, tuple(sigma), "group-automorphism")


def coordinate_inversion_iso(pair: ConnectionPair) -> tuple[TwoSidedCayleyGraph, VertexBijection]:
    """Isomorphism (g1, g2) -> (g1, g2^-1) onto Cay(G1 x G2, L R).

    Requires L = (H1 minus e) x {e} and R = {e} x (H2 minus e) for subgroups H1, H2.
    Returns the Cayley graph and the verified bijection.
    """
    G = pair.group
    if len(G.factors) != 2:
        raise ShapeViolation("group must be a direct product of two factors")
    G1, G2 = G.factors
    n2 = G2.order
    e1, e2 = G1.identity, G2.identity

    def coords(g):
        return divmod(g, n2)

    h1 = [coords(g) for g in pair.left]
    h2 = [coords(g) for g in pair.right]
    if any(b != e2 or a == e1 for a, b in h1) or any(a != e1 or b == e2 for a, b in h2):
        raise ShapeViolation("L must lie in (G1 - e) x {e} and R in {e} x (G2 - e)")
    for H, F, comp in ((h1, G1, 0), (h2, G2, 1)):
        S = F.subset([c[comp] for c in H] + [F.identity])
        if subgroup_closure(S) != S:
            raise ShapeViolation("L and R must come from subgroups with the identity removed")
    phi = tuple(a * n2 + G2.inv[b] for a, b in map(coords, G.elements))
    gamma = build_graph(pair)
    cay = cayley_graph(pair.left.product(pair.right))
    if not maps_arcs(gamma, cay, phi):
        raise IsomorphismCheckFailed("coordinate inversion is not an isomorphism")
    return cay, VertexBijection(phi, "explicit")


def _simple(graph) -> SimpleGraph:
    if isinstance(graph, SimpleGraph):
        return graph
    if not graph.is_simple:
        raise ValueError("graph is not simple and undirected")
    return graph.simple_view()


def graphs_isomorphic(g1, g2, cap: int | None = symmetry.DEFAULT_VERTEX_CAP) -> VertexBijection | None:
    a, b = _simple(g1), _simple(g2)
    perm = symmetry.find_isomorphism(a, b, cap)
    return VertexBijection(perm, "explicit") if perm is not None else None


# shapes


@dataclass(frozen=True)
class ShapeVerdict:
    """``shape`` is one of cycle, disjoint-cycles, complete-minus-perfect-matching,
    lexicographic-cycle-with-2K1, petersen, none."""

    shape: str
    params: tuple = ()
    witness: object = None

    def __str__(self):
        return f"{self.shape}({','.join(map(str, self.params))})" if self.params else self.shape


def _cycle_order(adj, start):
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return order
        w = min(nxt) if prev is None else nxt[0]
        if w == start:
            return order
        order.append(w)
        prev, cur = cur, w


def recognize_shape(graph, cap: int | None = symmetry.DEFAULT_VERTEX_CAP) -> ShapeVerdict:
    """Try, in order: cycle, equal disjoint cycles, K_n minus a perfect matching,
    C_n[2K1] (a cycle with every vertex replaced by two twins), Petersen."""
    g = _simple(graph)
    n = g.n
    comps = components(g.adj)
    degs = set(g.degrees())
    if degs == {2}:
        cycles = [_cycle_order(g.adj, c[0]) for c in comps]
        if all(len(c) == len(comp) for c, comp in zip(cycles, comps)):
            if len(cycles) == 1:
                return ShapeVerdict("cycle", (n,), cycles[0])
            if len({len(c) for c in cycles}) == 1:
                return ShapeVerdict("disjoint-cycles", (len(cycles), len(cycles[0])), cycles)
    if n >= 2 and n % 2 == 0 and degs == {n - 2}:
        others = [[w for w in range(n) if w != v and w not in g.adj[v]] for v in range(n)]
        if all(len(o) == 1 for o in others) and all(others[others[v][0]] == [v] for v in range(n)):
            matching = sorted({tuple(sorted((v, others[v][0]))) for v in range(n)})
            return ShapeVerdict("complete-minus-perfect-matching", (n,), matching)
    if n >= 6 and n % 2 == 0 and degs == {4}:
        lex = _lex_cycle(g)
        if lex is not None:
            return ShapeVerdict("lexicographic-cycle-with-2K1", (n // 2,), lex)
    if n == 10 and degs == {3}:
        perm = symmetry.find_isomorphism(petersen_graph(), g, cap)
        if perm is not None:
            return ShapeVerdict("petersen", (), perm)
    return ShapeVerdict("none")


def _lex_cycle(g: SimpleGraph):
    classes = {}
    for v in range(g.n):
        classes.setdefault(g.adj[v], []).append(v)
    twins = list(classes.values())
    if any(len(t) != 2 for t in twins):
        return None
    where = {v: i for i, t in enumerate(twins) for v in t}
    qadj = [set() for _ in twins]
    for u, v in g.edges():
        qadj[where[u]].add(where[v])
        qadj[where[v]].add(where[u])
    if any(len(s) != 2 for s in qadj) or len(components(qadj)) != 1:
        return None
    order = _cycle_order(qadj, 0)
    if len(order) != len(twins):
        return None
    return [tuple(twins[i]) for i in order]


def verify_shape(graph, verdict: ShapeVerdict) -> bool:
    """Re-check a shape certificate directly against the graph's edges."""
    g = _simple(graph)
    n = g.n
    edges = {frozenset(e) for e in g.edges()}
    if verdict.shape == "none":
        return verdict.witness is None
    if verdict.shape == "cycle":
        c = verdict.witness
        return sorted(c) == list(range(n)) and edges == {frozenset((c[i], c[(i + 1) % n])) for i in range(n)}
    if verdict.shape == "disjoint-cycles":
        cyc = verdict.witness
        want = set()
        for c in cyc:
            want |= {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}
        flat = sorted(v for c in cyc for v in c)
        return flat == list(range(n)) and len({len(c) for c in cyc}) == 1 and edges == want
    if verdict.shape == "complete-minus-perfect-matching":
        mt = {frozenset(p) for p in verdict.witness}
        covered = sorted(v for p in mt for v in p)
        allpairs = {frozenset((u, v)) for u in range(n) for v in range(u + 1, n)}
        return covered == list(range(n)) and edges == allpairs - mt
    if verdict.shape == "lexicographic-cycle-with-2K1":
        tw = verdict.witness
        k = len(tw)
        want = set()
        for i in range(k):
            for u in tw[i]:
                for v in tw[(i + 1) % k]:
                    want.add(frozenset((u, v)))
        flat = sorted(v for t in tw for v in t)
        return flat == list(range(n)) and edges == want
    if verdict.shape == "petersen":
        p = petersen_graph()
        perm = verdict.witness
        return {frozenset((perm[u], perm[v])) for u, v in p.edges()} == edges
    return False
