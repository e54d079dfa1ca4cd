"""Plain undirected graphs on vertices ``0..n-1``, plus small fixtures."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


@dataclass(frozen=True)
class SimpleGraph:
    adj: tuple[frozenset[int], ...]
    names: tuple[str, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None):
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(frozenset(s) for s in nbrs), tuple(names) if names is not None else None)

    @property
    def n(self) -> int:
        return len(self.adj)

    def __len__(self):
        return len(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def is_regular(self, k: int | None = None) -> bool:
        ds = set(self.degrees())
        return len(ds) <= 1 and (k is None or ds <= {k})

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def induced(self, vertices: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph, relabelled ``0..k-1``; also returns the old labels."""
        verts = sorted(vertices)
        pos = {v: i for i, v in enumerate(verts)}
        adj = tuple(frozenset(pos[w] for w in self.adj[v] if w in pos) for v in verts)
        names = tuple(self.label(v) for v in verts) if self.names else None
        return SimpleGraph(adj, names), verts

    def complement(self) -> "SimpleGraph":
        full = frozenset(range(self.n))
        return SimpleGraph(tuple(full - a - {v} for v, a in enumerate(self.adj)), self.names)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph whose edges are ``(perm[u], perm[v])``."""
        return SimpleGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


def components(adj: Sequence[Iterable[int]]) -> list[list[int]]:
    """Connected components by BFS, each sorted, ordered by smallest vertex."""
    n = len(adj)
    comp = [-1] * n
    out = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    q.append(w)
        out.append(sorted(members))
    return out


def is_isomorphism(g1: SimpleGraph, g2: SimpleGraph, perm: Sequence[int]) -> bool:
    """True iff ``perm`` is a bijection carrying edges of g1 exactly onto edges of g2."""
    if g1.n != g2.n or sorted(perm) != list(range(g1.n)):
        return False
    e1 = {frozenset((perm[u], perm[v])) for u, v in g1.edges()}
    e2 = {frozenset(e) for e in g2.edges()}
    return e1 == e2


def kneser_graph(n: int, k: int) -> SimpleGraph:
    """K(n, k): k-subsets of {1..n}, adjacent when disjoint."""
    verts = list(combinations(range(1, n + 1), k))
    edges = [(i, j) for i, j in combinations(range(len(verts)), 2) if not set(verts[i]) & set(verts[j])]
    names = ["{" + ",".join(map(str, v)) + "}" for v in verts]
    return SimpleGraph.from_edges(len(verts), edges, names)


def petersen_graph() -> SimpleGraph:
    """The Petersen graph, built as the Kneser graph K(5, 2)."""
    return kneser_graph(5, 2)


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
