"""Finite groups as dense multiplication tables, and the subset algebra on them.

Elements are plain ``int`` indices into the table. Subsets are :class:`ElementSet`
values backed by a Python ``int`` used as a bitset over element indices.

Products compose left to right: for permutation groups ``g*h`` means "apply g,
then h".
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "NotClosed",
    "NotAssociative",
    "NoIdentity",
    "NoInverse",
    "OwnershipError",
    "OrderLimitExceeded",
    "FiniteGroup",
    "ElementSet",
    "from_multiplication_table",
    "make_cyclic",
    "make_dihedral",
    "make_symmetric",
    "make_quaternion",
    "direct_product",
    "multiply",
    "inverse",
    "conjugate",
    "set_inverse",
    "set_conjugate",
    "set_product",
    "translate",
    "subgroup_closure",
    "center",
    "normalizer",
    "conjugacy_class",
    "is_inverse_closed",
    "is_automorphism",
    "extend_homomorphism",
    "automorphism_samples",
    "DEFAULT_ORDER_LIMIT",
]

DEFAULT_ORDER_LIMIT = 720


class GroupError(ValueError):
    pass


class NotClosed(GroupError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class NotAssociative(GroupError):
    def __init__(self, triple):
        a, b, c = triple
        super().__init__(f"(g{a}*g{b})*g{c} != g{a}*(g{b}*g{c})")
        self.triple = triple


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    def __init__(self, element):
        super().__init__(f"element {element} has no two-sided inverse")
        self.element = element


class OwnershipError(GroupError):
    """Raised when sets or elements from different groups are combined."""


class OrderLimitExceeded(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A validated finite group.

    ``mult[g][h]`` is the index of ``g*h``. Instances compare by identity;
    the constructors below are cached so that, e.g., two calls to
    ``make_dihedral(6)`` return the same object.
    """

    mult: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identity: int
    names: tuple[str, ...]
    label: str = ""
    family: str = "table"
    params: tuple = ()
    factors: tuple["FiniteGroup", ...] = ()
    generators: dict = field(default_factory=dict)
    _name_index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_name_index", {nm: i for i, nm in enumerate(self.names)})

    def __repr__(self):
        return f"FiniteGroup({self.label or 'order ' + str(self.order)})"

    def __len__(self):
        return len(self.mult)

    @property
    def order(self) -> int:
        return len(self.mult)

    @property
    def table(self) -> np.ndarray:
        out = np.array(self.mult, dtype=np.intp)
        out.setflags(write=False)
        return out

    @property
    def elements(self) -> range:
        return range(self.order)

    def _check(self, g):
        if not 0 <= g < self.order:
            raise OwnershipError(f"{g} is not an element index of {self!r}")

    def multiply(self, g: int, h: int) -> int:
        self._check(g)
        self._check(h)
        return self.mult[g][h]

    def inverse(self, g: int) -> int:
        self._check(g)
        return self.inv[g]

    def conjugate(self, g: int, x: int) -> int:
        """Return ``g^x = x^-1 g x``."""
        self._check(g)
        self._check(x)
        return self.mult[self.mult[self.inv[x]][g]][x]

    def name(self, g: int) -> str:
        return self.names[g]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mult[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        return bool((t == t.T).all())

    # subsets

    def subset(self, members: Iterable[int | str] = ()) -> "ElementSet":
        bits = 0
        for m in members:
            g = self.parse_element(m) if isinstance(m, str) else int(m)
            self._check(g)
            bits |= 1 << g
        return ElementSet(self, bits)

    def full(self) -> "ElementSet":
        return ElementSet(self, (1 << self.order) - 1)

    def empty(self) -> "ElementSet":
        return ElementSet(self, 0)

    def singleton(self, g: int) -> "ElementSet":
        self._check(g)
        return ElementSet(self, 1 << g)

    # element literals

    def parse_element(self, text: str) -> int:
        """Parse an element literal: a display name, ``e``, a generator word
        like ``a^-1*b`` (cyclic, dihedral, Q8), cycle notation for symmetric
        groups, or a parenthesised tuple for direct products."""
        s = text.strip()
        if s in self._name_index:
            return self._name_index[s]
        if s in ("e", "1", "id"):
            return self.identity
        if self.factors:
            return self._parse_tuple(s)
        if self.family == "symmetric":
            return self._parse_cycles(s)
        return self._parse_word(s)

    def _parse_tuple(self, s):
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"product element {s!r} must be written as (g1,g2,...)")
        parts = split_top_level(s[1:-1])
        if len(parts) != len(self.factors):
            raise ValueError(f"{s!r}: expected {len(self.factors)} components, got {len(parts)}")
        idx = 0
        for part, fac in zip(parts, self.factors):
            idx = idx * fac.order + fac.parse_element(part)
        return idx

    def _parse_cycles(self, s):
        n = self.params[0]
        if not re.fullmatch(r"(\([\d ,]*\))+", s.replace(" ", "")):
            raise ValueError(f"bad cycle literal {s!r}")
        img = list(range(n))
        for body in re.findall(r"\(([^)]*)\)", s):
            body = body.strip()
            if "," in body or " " in body:
                pts = [int(t) for t in re.split(r"[ ,]+", body) if t]
            else:
                pts = [int(ch) for ch in body]
            if any(not 1 <= p <= n for p in pts) or len(set(pts)) != len(pts):
                raise ValueError(f"bad cycle ({body}) for S{n}")
            step = list(range(n))
            for i, p in enumerate(pts):
                step[p - 1] = pts[(i + 1) % len(pts)] - 1
            # cycles compose left to right, like group products
            img = [step[img[i]] for i in range(n)]
        return self._perm_index[tuple(img)]

    def _parse_word(self, s):
        if not self.generators:
            raise ValueError(f"group {self!r} has no generator names; use element names")
        pos = 0
        g = self.identity
        token = re.compile(r"\s*\*?\s*([A-Za-z])(?:\^(-?\d+))?\s*")
        while pos < len(s):
            m = token.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse element {s!r} at position {pos}")
            letter, exp = m.group(1), int(m.group(2) or 1)
            if letter == "e":
                x = self.identity
            elif letter in self.generators:
                x = self.generators[letter]
            else:
                raise ValueError(f"unknown generator {letter!r} at position {m.start(1)} in {s!r}")
            if exp < 0:
                x, exp = self.inv[x], -exp
            for _ in range(exp):
                g = self.mult[g][x]
            pos = m.end()
        return g


def split_top_level(s: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside any parentheses or brackets."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [p.strip() for p in out]


@dataclass(frozen=True, eq=False)
class ElementSet:
    """A subset of a :class:`FiniteGroup`, stored as a bitset."""

    group: FiniteGroup
    bits: int = 0

    def __iter__(self) -> Iterator[int]:
        b, i = self.bits, 0
        while b:
            if b & 1:
                yield i
            b >>= 1
            i += 1

    def __len__(self):
        return self.bits.bit_count()

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, g):
        return isinstance(g, int) and g >= 0 and (self.bits >> g) & 1 == 1

    def __eq__(self, other):
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.group is other.group and self.bits == other.bits

    def __hash__(self):
        return hash((id(self.group), self.bits))

    def __repr__(self):
        return "{" + ", ".join(self.names()) + "}"

    def _same(self, other):
        if self.group is not other.group:
            raise OwnershipError("element sets belong to different groups")

    def __or__(self, other):
        self._same(other)
        return ElementSet(self.group, self.bits | other.bits)

    def __and__(self, other):
        self._same(other)
        return ElementSet(self.group, self.bits & other.bits)

    def __sub__(self, other):
        self._same(other)
        return ElementSet(self.group, self.bits & ~other.bits)

    def __le__(self, other):
        self._same(other)
        return self.bits & ~other.bits == 0

    def names(self) -> list[str]:
        return [self.group.names[g] for g in self]

    def indices(self) -> list[int]:
        return list(self)

    def inverse(self) -> "ElementSet":
        inv = self.group.inv
        bits = 0
        for g in self:
            bits |= 1 << inv[g]
        return ElementSet(self.group, bits)

    def conjugate(self, x: int) -> "ElementSet":
        G = self.group
        G._check(x)
        m, xi = G.mult, G.inv[x]
        bits = 0
        for g in self:
            bits |= 1 << m[m[xi][g]][x]
        return ElementSet(G, bits)

    def product(self, other: "ElementSet") -> "ElementSet":
        self._same(other)
        m = self.group.mult
        right = list(other)
        bits = 0
        for a in self:
            row = m[a]
            for b in right:
                bits |= 1 << row[b]
        return ElementSet(self.group, bits)

    def translate(self, g: int, side: str = "right") -> "ElementSet":
        """``S*g`` for ``side='right'``, ``g*S`` for ``side='left'``."""
        G = self.group
        G._check(g)
        m = G.mult
        bits = 0
        if side == "right":
            for s in self:
                bits |= 1 << m[s][g]
        elif side == "left":
            row = m[g]
            for s in self:
                bits |= 1 << row[s]
        else:
            raise ValueError("side must be 'left' or 'right'")
        return ElementSet(G, bits)

    def is_inverse_closed(self) -> bool:
        return self.inverse() == self


def _latin_and_assoc(t: np.ndarray):
    n = t.shape[0]
    for a in range(n):
        # (a*b)*c vs a*(b*c) for all b, c
        lhs = t[t[a]]
        rhs = t[a][t]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            raise NotAssociative((a, int(b), int(c)))


def from_multiplication_table(
    table: Sequence[Sequence[int]] | np.ndarray,
    names: Sequence[str] | None = None,
    *,
    label: str = "",
    _family: str = "table",
    _params: tuple = (),
    _factors: tuple = (),
    _generators: dict | None = None,
) -> FiniteGroup:
    """Validate ``table`` and build a :class:`FiniteGroup`.

    Raises NotClosed, NoIdentity, NoInverse or NotAssociative, each carrying
    the offending position, element or triple.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotClosed(f"table must be a non-empty square matrix, got shape {t.shape}")
    n = t.shape[0]
    if not np.issubdtype(t.dtype, np.integer):
        raise NotClosed("table entries must be integers")
    out = np.argwhere((t < 0) | (t >= n))
    if out.size:
        i, j = map(int, out[0])
        raise NotClosed(f"entry ({i},{j}) = {t[i, j]} is not an element index", (i, j))
    t = t.astype(np.intp)
    ar = np.arange(n)
    ids = [e for e in range(n) if (t[e] == ar).all() and (t[:, e] == ar).all()]
    if not ids:
        raise NoIdentity("no two-sided identity element")
    e = ids[0]
    hits = t == e
    inv = []
    for g in range(n):
        cand = np.flatnonzero(hits[g] & hits[:, g])
        if cand.size == 0:
            raise NoInverse(g)
        inv.append(int(cand[0]))
    _latin_and_assoc(t)
    if names is None:
        names = [str(i) for i in range(n)]
    names = tuple(names)
    if len(names) != n or len(set(names)) != n:
        raise ValueError("names must be n distinct strings")
    return FiniteGroup(
        mult=tuple(tuple(int(x) for x in row) for row in t),
        inv=tuple(inv),
        identity=e,
        names=names,
        label=label,
        family=_family,
        params=_params,
        factors=_factors,
        generators=dict(_generators or {}),
    )


def _power_name(i, letter="a"):
    if i == 0:
        return ""
    return letter if i == 1 else f"{letter}^{i}"


@lru_cache(maxsize=None)
def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n; elements ordered e, a, a^2, ..., a^(n-1)."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + [_power_name(i) for i in range(1, n)]
    return from_multiplication_table(
        table, names, label=f"C{n}", _family="cyclic", _params=(n,),
        _generators={"a": 1 % n},
    )


@lru_cache(maxsize=None)
def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group <a, b | a^n = b^2 = e, bab = a^-1> of order 2n.

    Index i < n is a^i, index n + i is a^i b.
    """
    if n < 1:
        raise ValueError("dihedral group needs n >= 1")

    def idx(i, s):
        return s * n + i % n

    table = [[0] * (2 * n) for _ in range(2 * n)]
    for s in (0, 1):
        for i in range(n):
            for t in (0, 1):
                for j in range(n):
                    k = i + (j if s == 0 else -j)
                    table[idx(i, s)][idx(j, t)] = idx(k, (s + t) % 2)
    names = ["e"] + [_power_name(i) for i in range(1, n)]
    names += [_power_name(i) + "b" for i in range(n)]
    return from_multiplication_table(
        table, names, label=f"D{n}", _family="dihedral", _params=(n,),
        _generators={"a": 1 % n, "b": n},
    )


@lru_cache(maxsize=None)
def make_quaternion() -> FiniteGroup:
    """Quaternion group Q8 = <a, b | a^4 = e, b^2 = a^2, ba = a^-1 b>.

    Index i < 4 is a^i, index 4 + i is a^i b.
    """
    table = [[0] * 8 for _ in range(8)]
    for s in (0, 1):
        for i in range(4):
            for t in (0, 1):
                for j in range(4):
                    k = i + (j if s == 0 else -j)
                    u = s + t
                    if u == 2:
                        k, u = k + 2, 0
                    table[s * 4 + i][t * 4 + j] = u * 4 + k % 4
    names = ["e", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"]
    return from_multiplication_table(
        table, names, label="Q8", _family="quaternion", _params=(),
        _generators={"a": 1, "b": 4},
    )


def _cycle_name(p):
    n = len(p)
    seen, out = set(), []
    sep = "" if n <= 9 else " "
    for i in range(n):
        if i in seen or p[i] == i:
            continue
        cyc, j = [i], p[i]
        seen.add(i)
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append("(" + sep.join(str(c + 1) for c in cyc) + ")")
    return "".join(out) or "e"


@lru_cache(maxsize=None)
def make_symmetric(n: int, limit: int = DEFAULT_ORDER_LIMIT) -> FiniteGroup:
    """Symmetric group on {1..n}, elements in lexicographic one-line order.

    ``g*h`` applies g first, then h.
    """
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    if math.factorial(n) > limit:
        raise OrderLimitExceeded(f"S{n} has order {math.factorial(n)} > limit {limit}")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(h[g[x]] for x in range(n))] for h in perms] for g in perms]
    G = from_multiplication_table(
        table, [_cycle_name(p) for p in perms], label=f"S{n}",
        _family="symmetric", _params=(n,),
    )
    object.__setattr__(G, "_perm_index", index)
    object.__setattr__(G, "perms", tuple(perms))
    return G


@lru_cache(maxsize=None)
def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product; elements in row-major tuple order."""
    if len(groups) < 2:
        raise ValueError("direct_product needs at least two factors")
    flat = []
    for G in groups:
        flat.extend(G.factors or (G,))
    orders = [G.order for G in flat]
    n = math.prod(orders)
    if n > 10 * DEFAULT_ORDER_LIMIT:
        raise OrderLimitExceeded(f"product order {n} too large")
    coords = np.array(np.unravel_index(np.arange(n), orders)).T
    table = np.zeros((n, n), dtype=np.intp)
    for k, G in enumerate(flat):
        t = G.table
        comp = t[coords[:, k][:, None], coords[:, k][None, :]]
        stride = math.prod(orders[k + 1:])
        table += comp * stride
    names = ["(" + ",".join(G.names[c] for G, c in zip(flat, row)) + ")" for row in coords]
    return from_multiplication_table(
        table, names, label="x".join(G.label or "?" for G in flat),
        _family="product", _factors=tuple(flat),
    )


# module-level operations mirroring the methods


def multiply(G: FiniteGroup, g: int, h: int) -> int:
    return G.multiply(g, h)


def inverse(G: FiniteGroup, g: int) -> int:
    return G.inverse(g)


def conjugate(G: FiniteGroup, g: int, x: int) -> int:
    return G.conjugate(g, x)


def set_inverse(S: ElementSet) -> ElementSet:
    return S.inverse()


def set_conjugate(S: ElementSet, g: int) -> ElementSet:
    return S.conjugate(g)


def set_product(A: ElementSet, B: ElementSet) -> ElementSet:
    return A.product(B)


def translate(S: ElementSet, g: int, side: str = "right") -> ElementSet:
    return S.translate(g, side)


def is_inverse_closed(S: ElementSet) -> bool:
    return S.is_inverse_closed()


def subgroup_closure(S: ElementSet) -> ElementSet:
    """Smallest subgroup containing S, by breadth-first closure."""
    if not S:
        raise ValueError("subgroup_closure of the empty set")
    G = S.group
    gens = set(S) | set(S.inverse())
    seen = 1 << G.identity
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        row = G.mult[x]
        for s in gens:
            y = row[s]
            if not (seen >> y) & 1:
                seen |= 1 << y
                queue.append(y)
    return ElementSet(G, seen)


def center(G: FiniteGroup) -> ElementSet:
    t = G.table
    return G.subset(np.flatnonzero((t == t.T).all(axis=1)).tolist())


def normalizer(S: ElementSet) -> ElementSet:
    """``{g : S g = g S}``, for an arbitrary non-empty subset S."""
    if not S:
        raise ValueError("normalizer of the empty set")
    G = S.group
    return G.subset(g for g in G.elements if S.translate(g, "right") == S.translate(g, "left"))


def conjugacy_class(G: FiniteGroup, g: int) -> ElementSet:
    G._check(g)
    return G.subset({G.conjugate(g, x) for x in G.elements})


def conjugacy_classes(G: FiniteGroup) -> list[ElementSet]:
    seen = 0
    out = []
    for g in G.elements:
        if not (seen >> g) & 1:
            c = conjugacy_class(G, g)
            seen |= c.bits
            out.append(c)
    return out


# automorphisms of G


def is_automorphism(G: FiniteGroup, perm: Sequence[int]) -> tuple[int, int] | None:
    """Return None if ``perm`` is an automorphism of G, else a violating pair (g, h)."""
    p = np.asarray(perm, dtype=np.intp)
    if p.shape != (G.order,) or sorted(p.tolist()) != list(range(G.order)):
        return (-1, -1)
    t = G.table
    bad = np.argwhere(p[t] != t[p][:, p])
    if bad.size:
        return (int(bad[0][0]), int(bad[0][1]))
    return None


def extend_homomorphism(G: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> tuple[int, ...] | None:
    """Extend ``gens[i] -> images[i]`` to an automorphism of G, or return None."""
    m = G.mult
    img = {G.identity: G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, images):
            y, fy = m[x][s], m[img[x]][t]
            if y in img:
                if img[y] != fy:
                    return None
            else:
                img[y] = fy
                queue.append(y)
    if len(img) != G.order:
        return None
    perm = tuple(img[g] for g in G.elements)
    return perm if is_automorphism(G, perm) is None else None


def inner_automorphism(G: FiniteGroup, x: int) -> tuple[int, ...]:
    return tuple(G.conjugate(g, x) for g in G.elements)


def _tabulated_outer(G: FiniteGroup) -> list[tuple[int, ...]]:
    out = []
    if G.family == "cyclic":
        (n,) = G.params
        for k in range(1, max(n, 2)):
            if math.gcd(k, n) == 1:
                p = extend_homomorphism(G, [1 % n], [k % n])
                if p:
                    out.append(p)
    elif G.family == "dihedral":
        (n,) = G.params
        for k in range(1, max(n, 2)):
            if math.gcd(k, n) != 1:
                continue
            for j in range(n):
                p = extend_homomorphism(G, [1 % n, n], [k % n, n + j])
                if p:
                    out.append(p)
    elif G.family == "quaternion":
        four = [g for g in G.elements if G.element_order(g) == 4]
        for x in four:
            for y in four:
                p = extend_homomorphism(G, [1, 4], [x, y])
                if p:
                    out.append(p)
    elif G.family == "product":
        fac = G.factors
        per = [automorphism_samples(F) for F in fac]
        orders = [F.order for F in fac]
        coords = np.array(np.unravel_index(np.arange(G.order), orders)).T
        strides = [math.prod(orders[k + 1:]) for k in range(len(fac))]
        for k in range(len(fac)):
            for a in per[k][:8]:
                c = coords.copy()
                c[:, k] = np.asarray(a)[c[:, k]]
                out.append(tuple(int(v) for v in (c * strides).sum(axis=1)))
        for i in range(len(fac)):
            for j in range(i + 1, len(fac)):
                if fac[i] is fac[j]:
                    c = coords.copy()
                    c[:, [i, j]] = c[:, [j, i]]
                    out.append(tuple(int(v) for v in (c * strides).sum(axis=1)))
    return out


@lru_cache(maxsize=None)
def automorphism_samples(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Inner automorphisms plus tabulated outer ones for the built-in families.

    The list is deduplicated and every entry is verified against the table.
    """
    seen = {}
    for x in G.elements:
        p = inner_automorphism(G, x)
        seen.setdefault(p, None)
    for p in _tabulated_outer(G):
        if is_automorphism(G, p) is None:
            seen.setdefault(p, None)
    return list(seen)
