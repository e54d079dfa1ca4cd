"""Automorphism groups and isomorphisms of small graphs.

Both searches use individualization and equitable refinement of ordered
partitions. Refinement only looks at cell positions and neighbour counts, so
it commutes with relabelling: an isomorphism maps the refined partitions of
one graph onto those of the other. That makes the search complete, and each
candidate leaf is still checked edge by edge before it is returned.

Automorphism groups are returned as a stabilizer chain (base, strong
generators, transversals), so large groups such as the automorphism group of
a perfect matching on 36 vertices are handled without listing elements.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graphs import SimpleGraph, components

DEFAULT_VERTEX_CAP = 40
DEFAULT_ELEMENT_LIMIT = 200_000


class CapExceeded(ValueError):
    pass


Perm = tuple[int, ...]


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def invert(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _masks(graph: SimpleGraph) -> list[int]:
    out = []
    for nb in graph.adj:
        m = 0
        for w in nb:
            m |= 1 << w
        out.append(m)
    return out


def _refine(masks: list[int], cells: list[list[int]]):
    """Equitable refinement. Returns (cells, trace); trace is isomorphism-invariant."""
    cells = [list(c) for c in cells]
    trace = []
    si = 0
    while si < len(cells):
        wmask = 0
        for v in cells[si]:
            wmask |= 1 << v
        new = []
        split = False
        for ci, X in enumerate(cells):
            if len(X) == 1:
                new.append(X)
                continue
            counts = {}
            for v in X:
                counts.setdefault((masks[v] & wmask).bit_count(), []).append(v)
            if len(counts) == 1:
                new.append(X)
                continue
            keys = sorted(counts)
            trace.append((si, ci, tuple((k, len(counts[k])) for k in keys)))
            new.extend(counts[k] for k in keys)
            split = True
        if split:
            cells = new
            si = 0
        else:
            si += 1
    trace.append(tuple(len(c) for c in cells))
    return cells, tuple(trace)


def _individualize(cells, ci, v):
    rest = [w for w in cells[ci] if w != v]
    return cells[:ci] + [[v], rest] + cells[ci + 1:]


def _first_nonsingleton(cells):
    for i, c in enumerate(cells):
        if len(c) > 1:
            return i
    return None


def _initial(n, colors):
    if colors is None:
        return [list(range(n))]
    groups = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


@dataclass
class _Level:
    cells: list
    trace: tuple
    ci: int | None
    base_point: int | None


def _left_path(masks, start):
    levels = []
    cells, trace = _refine(masks, start)
    while True:
        ci = _first_nonsingleton(cells)
        if ci is None:
            levels.append(_Level(cells, trace, None, None))
            return levels
        b = cells[ci][0]
        levels.append(_Level(cells, trace, ci, b))
        cells, trace = _refine(masks, _individualize(cells, ci, b))


def _is_iso_masks(ma, mb, perm):
    for v, m in enumerate(ma):
        img = 0
        while m:
            low = m & -m
            img |= 1 << perm[low.bit_length() - 1]
            m ^= low
        if img != mb[perm[v]]:
            return False
    return True


def _descend(path, ma, mb, level, cells, avoid=None):
    """Depth-first search below ``level`` on the right-hand graph.

    ``cells`` is the right partition matching ``path[level]``. Returns a
    bijection (left vertex -> right vertex) or None.
    """
    lv = path[level]
    if lv.ci is None:
        left_leaf = [c[0] for c in lv.cells]
        right_leaf = [c[0] for c in cells]
        perm = [0] * len(ma)
        for a, b in zip(left_leaf, right_leaf):
            perm[a] = b
        return tuple(perm) if _is_iso_masks(ma, mb, perm) else None
    nxt = path[level + 1]
    for t in cells[lv.ci]:
        if avoid is not None and t in avoid:
            continue
        sub, trace = _refine(mb, _individualize(cells, lv.ci, t))
        if trace != nxt.trace:
            continue
        found = _descend(path, ma, mb, level + 1, sub)
        if found is not None:
            return found
    return None


def _check_cap(n, cap):
    if cap is not None and n > cap:
        raise CapExceeded(f"{n} vertices exceeds cap {cap}")


@dataclass
class AutomorphismGroup:
    """Stabilizer chain of a graph's automorphism group.

    ``transversals[i]`` maps each point t of the i-th basic orbit to an
    automorphism fixing ``base[:i]`` and sending ``base[i]`` to t.
    """

    n: int
    base: list[int]
    generators: list[Perm]
    transversals: list[dict[int, Perm]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def __len__(self):
        return self.order

    def orbits(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for v, w in enumerate(g):
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def contains(self, perm: Sequence[int]) -> bool:
        """Membership by sifting through the chain."""
        g = tuple(perm)
        for b, trans in zip(self.base, self.transversals):
            t = g[b]
            if t not in trans:
                return False
            g = compose(g, invert(trans[t]))
        return all(i == v for v, i in enumerate(g))

    def stabilizer_elements(self, level: int = 1, limit: int = DEFAULT_ELEMENT_LIMIT) -> list[Perm]:
        """Elements fixing ``base[:level]`` pointwise."""
        size = math.prod(len(t) for t in self.transversals[level:])
        if size > limit:
            raise CapExceeded(f"group of order {size} exceeds element limit {limit}")
        elems = [tuple(range(self.n))]
        for trans in reversed(self.transversals[level:]):
            elems = [compose(h, u) for u in trans.values() for h in elems]
        return elems

    def elements(self, limit: int = DEFAULT_ELEMENT_LIMIT) -> list[Perm]:
        return self.stabilizer_elements(0, limit)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements())


def _orbit_transversal(point, gens, n):
    trans = {point: tuple(range(n))}
    queue = [point]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g[x]
            if y not in trans:
                trans[y] = compose(trans[x], g)
                queue.append(y)
    return trans


def automorphism_group(graph: SimpleGraph, colors: Sequence | None = None,
                       cap: int | None = DEFAULT_VERTEX_CAP) -> AutomorphismGroup:
    """Full automorphism group (colour-preserving if ``colors`` is given)."""
    n = graph.n
    _check_cap(n, cap)
    masks = _masks(graph)
    path = _left_path(masks, _initial(n, colors))
    base = [lv.base_point for lv in path if lv.ci is not None]
    gens: list[Perm] = []
    transversals: list[dict[int, Perm]] = [None] * len(base)
    for i in reversed(range(len(base))):
        lv = path[i]
        b = base[i]
        level_gens = list(gens)
        trans = _orbit_transversal(b, level_gens, n)
        for t in lv.cells[lv.ci]:
            if t in trans:
                continue
            sub, trace = _refine(masks, _individualize(lv.cells, lv.ci, t))
            if trace != path[i + 1].trace:
                continue
            sigma = _descend(path, masks, masks, i + 1, sub)
            if sigma is not None:
                gens.append(sigma)
                level_gens.append(sigma)
                trans = _orbit_transversal(b, level_gens, n)
        transversals[i] = trans
    return AutomorphismGroup(n, base, gens, transversals)


def find_isomorphism(g1: SimpleGraph, g2: SimpleGraph,
                     cap: int | None = DEFAULT_VERTEX_CAP) -> Perm | None:
    """A bijection ``perm`` with ``perm[u]`` in g2 for u in g1, or None."""
    if g1.n != g2.n:
        return None
    _check_cap(g1.n, cap)
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    ma, mb = _masks(g1), _masks(g2)
    path = _left_path(ma, _initial(g1.n, None))
    cells, trace = _refine(mb, _initial(g2.n, None))
    if trace != path[0].trace:
        return None
    return _descend(path, ma, mb, 0, cells)


@dataclass(frozen=True)
class RegularSubgroup:
    elements: tuple[Perm, ...]
    generators: tuple[Perm, ...]


def _has_fixed_point(p):
    return any(i == v for v, i in enumerate(p))


def _semiregular_closure(gens, n):
    """Group generated by ``gens`` if it is semiregular of order <= n, else None."""
    ident = tuple(range(n))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elems:
                    if _has_fixed_point(y):
                        return None
                    elems.add(y)
                    if len(elems) > n:
                        return None
                    nxt.append(y)
        frontier = nxt
    if n % len(elems):
        return None
    return elems


def _iter_stabilizer(aut: AutomorphismGroup, level: int) -> Iterator[Perm]:
    """Lazily enumerate the elements fixing ``base[:level]``, identity first."""
    trans = [list(t.values()) for t in aut.transversals[level:]]
    for t in trans:
        t.sort(key=lambda p: p != tuple(range(aut.n)))
    for combo in itertools.product(*reversed(trans)):
        g = tuple(range(aut.n))
        for u in combo:
            g = compose(g, u)
        yield g


def regular_subgroup(aut: AutomorphismGroup, limit: int = DEFAULT_ELEMENT_LIMIT) -> RegularSubgroup | None:
    """Search for a subgroup acting regularly on the vertices.

    Subgroups are grown one fixed-point-free generator at a time, keeping the
    group semiregular, until it covers every vertex. Candidates are drawn
    lazily from the point stabilizer; more than ``limit`` candidate checks
    raises CapExceeded rather than answering.
    """
    n = aut.n
    if n == 1:
        return RegularSubgroup((tuple(range(1)),), ())
    if not aut.is_transitive() or aut.order % n:
        return None
    v0 = aut.base[0]
    reps = aut.transversals[0]
    budget = [limit]

    def grow(gens, elems):
        if len(elems) == n:
            return gens, elems
        covered = {g[v0] for g in elems}
        v = min(w for w in range(n) if w not in covered)
        for s in _iter_stabilizer(aut, 1):
            budget[0] -= 1
            if budget[0] < 0:
                raise CapExceeded(f"regular subgroup search exceeded {limit} candidates")
            g = compose(s, reps[v])
            if _has_fixed_point(g):
                continue
            closure = _semiregular_closure(gens + [g], n)
            if closure is None:
                continue
            found = grow(gens + [g], closure)
            if found:
                return found
        return None

    found = grow([], {tuple(range(n))})
    if not found:
        return None
    gens, elems = found
    return RegularSubgroup(tuple(sorted(elems)), tuple(gens))


def cayley_certificate(graph: SimpleGraph, cap: int | None = DEFAULT_VERTEX_CAP,
                       limit: int = DEFAULT_ELEMENT_LIMIT) -> RegularSubgroup | None:
    """Regular subgroup of Aut(graph), reducing through components first.

    A disjoint union of m copies of a connected graph D is Cayley exactly when
    D is (the component of the identity in Cay(G, S) is Cay(<S>, S)), and a
    graph shares its automorphisms with its complement. Working on one
    component of whichever side is disconnected keeps wreath-product
    automorphism groups out of the search.
    """
    comps = components(graph.adj)
    if len(comps) > 1:
        return _from_components(graph, comps, cap, limit)
    co = graph.complement()
    co_comps = components(co.adj)
    if len(co_comps) > 1:
        return _from_components(co, co_comps, cap, limit)
    return regular_subgroup(automorphism_group(graph, cap=cap), limit)


def _from_components(graph, comps, cap, limit):
    if len({len(c) for c in comps}) > 1:
        return None
    base, base_labels = graph.induced(comps[0])
    maps = [base_labels]
    for c in comps[1:]:
        other, labels = graph.induced(c)
        iso = find_isomorphism(base, other)
        if iso is None:
            return None
        maps.append([labels[iso[x]] for x in range(base.n)])
    local = cayley_certificate(base, cap, limit)
    if local is None:
        return None
    m, n = len(comps), graph.n

    def lift(h, shift):
        p = [0] * n
        for i, phi in enumerate(maps):
            target = maps[(i + shift) % m]
            for x in range(base.n):
                p[phi[x]] = target[h[x]]
        return tuple(p)

    ident = tuple(range(base.n))
    elems = tuple(sorted(lift(h, j) for h in local.elements for j in range(m)))
    gens = tuple(lift(h, 0) for h in local.generators) + ((lift(ident, 1),) if m > 1 else ())
    return RegularSubgroup(elems, gens)
