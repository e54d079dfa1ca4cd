"""Random subsets and connection pairs, for randomized suites and exploration."""

from __future__ import annotations

import random

from .connection import ConnectionPair, check_property
from .groups import ElementSet, FiniteGroup, make_cyclic, make_dihedral, make_quaternion, make_symmetric, direct_product


def small_groups(max_order: int) -> list[FiniteGroup]:
    """Built-in groups of order at most ``max_order``, in a fixed order."""
    out = [make_cyclic(n) for n in range(1, max_order + 1)]
    out += [make_dihedral(n) for n in range(2, max_order // 2 + 1)]
    if max_order >= 8:
        out.append(make_quaternion())
        out.append(direct_product(make_cyclic(2), make_cyclic(4)))
        out.append(direct_product(make_cyclic(2), make_cyclic(2), make_cyclic(2)))
    if max_order >= 9:
        out.append(direct_product(make_cyclic(3), make_cyclic(3)))
    if max_order >= 16:
        out.append(direct_product(make_cyclic(2), make_dihedral(4)))
        out.append(direct_product(make_cyclic(2), make_quaternion()))
    if max_order >= 18:
        out.append(direct_product(make_cyclic(3), make_symmetric(3)))
    if max_order >= 24:
        out.append(make_symmetric(4))
        out.append(direct_product(make_cyclic(4), make_symmetric(3)))
    return [G for G in out if G.order <= max_order]


def random_subset(G: FiniteGroup, rng: random.Random, size: int) -> ElementSet:
    return G.subset(rng.sample(range(G.order), min(size, G.order)))


def inverse_pairs(G: FiniteGroup) -> list[ElementSet]:
    """The sets {g, g^-1}, one per pair."""
    seen, out = set(), []
    for g in G.elements:
        if g not in seen:
            s = {g, G.inv[g]}
            seen |= s
            out.append(G.subset(s))
    return out


def random_inverse_closed(G: FiniteGroup, rng: random.Random, pieces: int) -> ElementSet:
    blocks = inverse_pairs(G)
    bits = 0
    for b in rng.sample(blocks, min(pieces, len(blocks))):
        bits |= b.bits
    return ElementSet(G, bits)


def random_pair(G: FiniteGroup, rng: random.Random, max_size: int = 3, inverse_closed: bool = False) -> ConnectionPair:
    if inverse_closed:
        return ConnectionPair(
            random_inverse_closed(G, rng, rng.randint(1, max_size)),
            random_inverse_closed(G, rng, rng.randint(1, max_size)),
        )
    return ConnectionPair(
        random_subset(G, rng, rng.randint(1, max_size)),
        random_subset(G, rng, rng.randint(1, max_size)),
    )


def random_valid_pair(G: FiniteGroup, rng: random.Random, max_size: int = 3, inverse_closed: bool = False,
                      tries: int = 5000) -> ConnectionPair | None:
    """Rejection-sample a pair with the 2S-Cayley property, or None."""
    for _ in range(tries):
        p = random_pair(G, rng, max_size, inverse_closed)
        if check_property(p).overall:
            return p
    return None
