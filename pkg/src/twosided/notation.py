"""Text notation for groups and element lists.

Groups: ``C<n>``, ``D<n>`` (dihedral of order 2n), ``S<n>``, ``Q8``; products
are joined with ``x``, as in ``S3xS3`` or ``C2xD4``.

Element lists are comma separated. Commas inside parentheses do not split,
so product elements read ``((12),e), (e,(123))``.
"""

from __future__ import annotations

import re

from .groups import (
    ElementSet,
    FiniteGroup,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_quaternion,
    make_symmetric,
    split_top_level,
)


class NotationError(ValueError):
    def __init__(self, message, text="", position=None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}" + (f" in {text!r}" if text else ""))
        self.text = text
        self.position = position


_FACTOR = re.compile(r"(C|D|S)(\d+)|(Q8)")


def parse_group(spec: str) -> FiniteGroup:
    s = spec.strip()
    if not s:
        raise NotationError("empty group spec")
    factors = []
    pos = 0
    for part in s.split("x"):
        m = _FACTOR.fullmatch(part.strip())
        if not m:
            raise NotationError(f"unknown group factor {part!r}", spec, pos)
        if m.group(3):
            factors.append(make_quaternion())
        else:
            kind, n = m.group(1), int(m.group(2))
            if n < 1:
                raise NotationError(f"bad parameter {n}", spec, pos)
            factors.append({"C": make_cyclic, "D": make_dihedral, "S": make_symmetric}[kind](n))
        pos += len(part) + 1
    return factors[0] if len(factors) == 1 else direct_product(*factors)


def parse_elements(G: FiniteGroup, text: str, *, allow_empty: bool = False) -> ElementSet:
    """Parse a comma-separated element list into an ElementSet."""
    if not text.strip():
        if allow_empty:
            return G.empty()
        raise NotationError("empty element list (L and R must be non-empty)", text, 0)
    out = []
    pos = 0
    for tok in split_top_level(text):
        if not tok:
            raise NotationError("empty element", text, pos)
        try:
            out.append(G.parse_element(tok))
        except (ValueError, KeyError) as exc:
            if tok == text.strip():
                raise NotationError(f"bad element: {exc}") from None
            raise NotationError(f"bad element {tok!r}: {exc}", text, text.find(tok, pos)) from None
        pos = text.find(tok, pos) + len(tok)
    return G.subset(out)


def format_elements(S: ElementSet) -> str:
    return ",".join(S.names())
