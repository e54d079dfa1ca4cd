"""Two-sided Cayley graphs 2SCay(G; L, R) and the maps ``g -> x^-1 g y``.

A pair (L, R) of non-empty subsets gives a digraph on G with an arc from g to
``l^-1 g r`` for every l in L, r in R. :func:`check_property` tests the three
set conditions that make that digraph a simple undirected graph, and
:func:`scan_defects` looks at the graph itself, so the two can be compared.
"""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .graphs import SimpleGraph
from .groups import ElementSet, FiniteGroup, OwnershipError, center

__all__ = [
    "ConnectionPair",
    "ConnectionMap",
    "ConditionCheck",
    "PropertyVerdict",
    "DerangementVerdict",
    "SimpleFlag",
    "TwoSidedCayleyGraph",
    "DefectScan",
    "lambda_map",
    "lambda_inverse",
    "lambda_equal",
    "connection_set",
    "check_property",
    "check_derangement_conditions",
    "build_graph",
    "cayley_graph",
    "scan_defects",
]


@dataclass(frozen=True)
class ConnectionPair:
    left: ElementSet
    right: ElementSet

    def __post_init__(self):
        if self.left.group is not self.right.group:
            raise OwnershipError("L and R must be subsets of the same group")
        if not self.left or not self.right:
            raise ValueError("L and R must be non-empty")

    @classmethod
    def of(cls, group: FiniteGroup, left, right) -> "ConnectionPair":
        """Build from iterables of element indices or literals."""
        return cls(group.subset(left), group.subset(right))

    @property
    def group(self) -> FiniteGroup:
        return self.left.group

    def swapped(self) -> "ConnectionPair":
        return ConnectionPair(self.right, self.left)

    def __repr__(self):
        return f"ConnectionPair({self.group.label}; L={self.left!r}, R={self.right!r})"


@dataclass(frozen=True)
class ConnectionMap:
    """The permutation ``g -> x^-1 g y`` of the group, tabulated."""

    group: FiniteGroup
    left_elt: int
    right_elt: int
    image: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.image[g]

    def then(self, other: "ConnectionMap") -> "ConnectionMap":
        """Apply self, then other. Equals ``lambda_map(x*u, y*v)``."""
        m = self.group.mult
        return ConnectionMap(
            self.group,
            m[self.left_elt][other.left_elt],
            m[self.right_elt][other.right_elt],
            tuple(other.image[i] for i in self.image),
        )

    def is_identity(self) -> bool:
        return all(i == g for g, i in enumerate(self.image))

    def fixed_points(self) -> list[int]:
        return [g for g, i in enumerate(self.image) if i == g]

    def is_derangement(self) -> bool:
        return not self.fixed_points()


def lambda_map(G: FiniteGroup, x: int, y: int) -> ConnectionMap:
    G._check(x)
    G._check(y)
    m = G.mult
    xi = G.inv[x]
    return ConnectionMap(G, x, y, tuple(m[m[xi][g]][y] for g in G.elements))


def lambda_inverse(lam: ConnectionMap) -> ConnectionMap:
    G = lam.group
    out = lambda_map(G, G.inv[lam.left_elt], G.inv[lam.right_elt])
    assert all(out.image[lam.image[g]] == g for g in G.elements)
    return out


def lambda_equal(G: FiniteGroup, l: int, r: int, u: int, v: int) -> bool:
    """True iff ``u = z l`` and ``v = z r`` for some central z.

    This holds exactly when the two maps agree pointwise; the tests check
    that equivalence exhaustively on small groups.
    """
    m = G.mult
    z = m[u][G.inv[l]]
    return m[v][G.inv[r]] == z and z in center(G)


def connection_set(pair: ConnectionPair) -> list[ConnectionMap]:
    """Distinct maps ``lambda_{l,r}``, (l, r) in L x R, in (l, r) index order."""
    seen = {}
    for l in pair.left:
        for r in pair.right:
            lam = lambda_map(pair.group, l, r)
            seen.setdefault(lam.image, lam)
    return list(seen.values())


# the three conditions


@dataclass(frozen=True)
class ConditionCheck:
    """Outcome of one condition; on failure, ``g`` and ``detail`` witness it."""

    name: str
    passed: bool
    g: int | None = None
    detail: tuple = ()

    def __bool__(self):
        return self.passed

    def as_dict(self, group: FiniteGroup | None = None) -> dict:
        d = {"passed": self.passed}
        if not self.passed:
            nm = (lambda i: group.names[i]) if group else (lambda i: i)
            d["g"] = nm(self.g) if self.g is not None else None
            d["detail"] = [nm(i) for i in self.detail]
        return d


@dataclass(frozen=True)
class PropertyVerdict:
    cond1: ConditionCheck
    cond2: ConditionCheck
    cond3: ConditionCheck

    @property
    def overall(self) -> bool:
        return self.cond1.passed and self.cond2.passed and self.cond3.passed

    def __bool__(self):
        return self.overall

    def as_dict(self, group=None) -> dict:
        return {
            "overall": self.overall,
            "cond1": self.cond1.as_dict(group),
            "cond2": self.cond2.as_dict(group),
            "cond3": self.cond3.as_dict(group),
        }


def _check_symmetric_sets(pair: ConnectionPair) -> ConditionCheck:
    L, R = pair.left, pair.right
    Li, Ri = L.inverse(), R.inverse()
    for g in pair.group.elements:
        a = Li.translate(g).product(R)
        b = L.translate(g).product(Ri)
        if a != b:
            x = next(iter(ElementSet(a.group, a.bits ^ b.bits)))
            return ConditionCheck("cond1", False, g, (x,))
    return ConditionCheck("cond1", True)


def _check_no_fixed_conjugates(pair: ConnectionPair) -> ConditionCheck:
    G, L, R = pair.group, pair.left, pair.right
    for g in G.elements:
        hit = L.conjugate(g) & R
        if hit:
            r = next(iter(hit))
            l = next(x for x in L if G.conjugate(x, g) == r)
            return ConditionCheck("cond2", False, g, (l, r))
    return ConditionCheck("cond2", True)


def _check_quotients(pair: ConnectionPair) -> ConditionCheck:
    G, L, R = pair.group, pair.left, pair.right
    m, inv, e = G.mult, G.inv, G.identity
    rq = {}
    for r1 in R:
        for r2 in R:
            rq.setdefault(m[r1][inv[r2]], (r1, r2))
    lq = {}
    for l1 in L:
        for l2 in L:
            lq.setdefault(m[l1][inv[l2]], (l1, l2))
    for g in G.elements:
        for q, (l1, l2) in lq.items():
            c = G.conjugate(q, g)
            if c != e and c in rq:
                return ConditionCheck("cond3", False, g, (l1, l2) + rq[c])
    return ConditionCheck("cond3", True)


def check_property(pair: ConnectionPair) -> PropertyVerdict:
    """Check the three conditions for every g, keeping the first witness of each.

    1. ``L^-1 g R == L g R^-1``; witness: g and an element of the symmetric difference.
    2. ``L^g & R`` empty; witness: g and (l, r) with ``l^g == r``.
    3. ``(L L^-1)^g & (R R^-1) == {e}``; witness: g and (l1, l2, r1, r2) with
       ``(l1 l2^-1)^g == r1 r2^-1 != e``.
    """
    return PropertyVerdict(
        _check_symmetric_sets(pair),
        _check_no_fixed_conjugates(pair),
        _check_quotients(pair),
    )


@dataclass(frozen=True)
class DerangementVerdict:
    unique_return: ConditionCheck
    derangements: ConditionCheck
    quotient_derangements: ConditionCheck
    identity_criterion_ok: bool

    @property
    def overall(self) -> bool:
        return self.unique_return.passed and self.derangements.passed and self.quotient_derangements.passed

    def as_dict(self, group=None) -> dict:
        return {
            "overall": self.overall,
            "unique_return": self.unique_return.as_dict(group),
            "derangements": self.derangements.as_dict(group),
            "quotient_derangements": self.quotient_derangements.as_dict(group),
            "identity_criterion_ok": self.identity_criterion_ok,
        }


def check_derangement_conditions(pair: ConnectionPair) -> DerangementVerdict:
    """Conditions on the connection set as a set of permutations.

    ``unique_return``: for each (l, r) and vertex x exactly one (l', r') makes
    ``lambda_{l,r}`` then ``lambda_{l',r'}`` fix x (detail: l, r, x, count).
    ``derangements``: every ``lambda_{l,r}`` is fixed-point-free (detail: l, r).
    ``quotient_derangements``: every non-identity ``lambda_{l1,r1}`` then
    ``lambda_{l2,r2}^-1`` is fixed-point-free (detail: l1, r1, l2, r2).

    ``identity_criterion_ok`` records whether, for every (l, r), some such
    composite being the identity coincides with ``L l & R r & Z(G)`` being
    non-empty. This is reported, never used to infer the other verdicts.
    """
    G, L, R = pair.group, pair.left, pair.right
    maps = {(l, r): lambda_map(G, l, r) for l in L for r in R}
    Z = center(G)

    deranged = ConditionCheck("derangements", True)
    for (l, r), lam in maps.items():
        fp = lam.fixed_points()
        if fp:
            deranged = ConditionCheck("derangements", False, fp[0], (l, r))
            break

    unique = ConditionCheck("unique_return", True)
    ident_ok = True
    for (l, r), lam in maps.items():
        counts = [0] * G.order
        has_identity = False
        for mu in maps.values():
            img = mu.image
            comp = [img[i] for i in lam.image]
            if all(c == g for g, c in enumerate(comp)):
                has_identity = True
            for x in G.elements:
                if comp[x] == x:
                    counts[x] += 1
        if unique.passed:
            for x, c in enumerate(counts):
                if c != 1:
                    unique = ConditionCheck("unique_return", False, x, (l, r, x, c))
                    break
        crit = bool(L.translate(l) & R.translate(r) & Z)
        if crit != has_identity:
            ident_ok = False

    quot = ConditionCheck("quotient_derangements", True)
    inverses = {k: lambda_inverse(v) for k, v in maps.items()}
    for (l1, r1), lam in maps.items():
        for (l2, r2), mu in inverses.items():
            comp = lam.then(mu)
            if comp.is_identity():
                continue
            fp = comp.fixed_points()
            if fp:
                quot = ConditionCheck("quotient_derangements", False, fp[0], (l1, r1, l2, r2))
                break
        if not quot.passed:
            break

    return DerangementVerdict(unique, deranged, quot, ident_ok)


# graphs


class SimpleFlag(str, enum.Enum):
    SIMPLE = "simple-undirected"
    DEFECTIVE = "directed-or-defective"
    UNVERIFIED = "unverified"


@dataclass(frozen=True)
class DefectScan:
    symmetric: bool
    loops: list[tuple[int, int, int, int]]
    multi_arcs: list[tuple[int, int, list[tuple[int, int]]]]

    @property
    def simple(self) -> bool:
        return self.symmetric and not self.loops and not self.multi_arcs


@dataclass(frozen=True, eq=False)
class TwoSidedCayleyGraph:
    """Labelled arcs ``(source, target, l, r)`` with ``target = l^-1 source r``.

    Arcs are ordered source-major, then by index of l, then of r.
    """

    pair: ConnectionPair
    arcs: tuple[tuple[int, int, int, int], ...]
    flag: SimpleFlag = SimpleFlag.UNVERIFIED

    @property
    def group(self) -> FiniteGroup:
        return self.pair.group

    @property
    def order(self) -> int:
        return self.group.order

    def arc_pairs(self) -> set[tuple[int, int]]:
        return {(s, t) for s, t, _, _ in self.arcs}

    def out_neighbors(self) -> list[set[int]]:
        out = [set() for _ in range(self.order)]
        for s, t, _, _ in self.arcs:
            out[s].add(t)
        return out

    def weak_adjacency(self) -> list[set[int]]:
        """Neighbours ignoring arc direction (loops dropped)."""
        out = [set() for _ in range(self.order)]
        for s, t, _, _ in self.arcs:
            if s != t:
                out[s].add(t)
                out[t].add(s)
        return out

    @property
    def is_simple(self) -> bool:
        return self.flag is SimpleFlag.SIMPLE

    def simple_view(self) -> SimpleGraph:
        """The underlying simple undirected graph (loops, directions and multiplicities dropped)."""
        return SimpleGraph(tuple(frozenset(a) for a in self.weak_adjacency()), self.group.names)

    def valency(self) -> int | None:
        """Common out-degree of the underlying arc set, or None if irregular."""
        degs = {len(a) for a in self.out_neighbors()}
        return degs.pop() if len(degs) == 1 else None

    def to_dot(self) -> str:
        names = self.group.names
        lines = []
        if self.is_simple:
            lines.append("graph G {")
            for v in range(self.order):
                lines.append(f'  {v} [label="{names[v]}"];')
            seen = set()
            for s, t, _, _ in self.arcs:
                key = (min(s, t), max(s, t))
                if key not in seen:
                    seen.add(key)
                    lines.append(f"  {key[0]} -- {key[1]};")
        else:
            lines.append("digraph G {")
            for v in range(self.order):
                lines.append(f'  {v} [label="{names[v]}"];')
            for s, t, l, r in self.arcs:
                lines.append(f'  {s} -> {t} [label="{names[l]},{names[r]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "group": self.group.label,
            "vertices": list(self.group.names),
            "simple": self.flag.value,
            "arcs": [{"source": s, "target": t, "l": l, "r": r} for s, t, l, r in self.arcs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _arcs(pair: ConnectionPair) -> Iterator[tuple[int, int, int, int]]:
    G = pair.group
    m, inv = G.mult, G.inv
    L, R = list(pair.left), list(pair.right)
    for g in G.elements:
        for l in L:
            h = m[inv[l]][g]
            for r in R:
                yield (g, m[h][r], l, r)


def scan_defects(graph: TwoSidedCayleyGraph) -> DefectScan:
    pairs = graph.arc_pairs()
    symmetric = all((t, s) in pairs for s, t in pairs)
    loops = [a for a in graph.arcs if a[0] == a[1]]
    labels = defaultdict(list)
    for s, t, l, r in graph.arcs:
        labels[(s, t)].append((l, r))
    multi = [(s, t, lab) for (s, t), lab in labels.items() if len(lab) > 1]
    return DefectScan(symmetric, loops, multi)


def build_graph(pair: ConnectionPair) -> TwoSidedCayleyGraph:
    """All ``|G| |L| |R|`` labelled arcs; ``flag`` set from a defect scan.

    Defective pairs are built and flagged, never refused.
    """
    raw = TwoSidedCayleyGraph(pair, tuple(_arcs(pair)))
    flag = SimpleFlag.SIMPLE if scan_defects(raw).simple else SimpleFlag.DEFECTIVE
    return TwoSidedCayleyGraph(pair, raw.arcs, flag)


def cayley_graph(S: ElementSet) -> TwoSidedCayleyGraph:
    """Cay(G, S): vertex x is joined to every ``s x``.

    Realised as 2SCay(G; S^-1, {e}), whose arcs are exactly ``x -> s x``.
    """
    G = S.group
    return build_graph(ConnectionPair(S.inverse(), G.singleton(G.identity)))
