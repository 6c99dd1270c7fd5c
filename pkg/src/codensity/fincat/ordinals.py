"""Finite ordinals encoded by cardinality, and the simplex-category family.

An ordinal of cardinality n is {0, ..., n-1}; cardinality 0 is the empty
ordinal [-1], cardinality n+1 is [n].  Maps are weakly monotone value tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .category import CategoryError, FinCategory


@dataclass(frozen=True, order=True)
class OrdMap:
    dom: int
    cod: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.dom:
            raise ValueError(f"{self.dom} values expected, got {len(self.values)}")
        if any(not 0 <= v < self.cod for v in self.values):
            raise ValueError(f"values {self.values} out of range for codomain size {self.cod}")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"values {self.values} not monotone")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def label(self) -> str:
        return f"{self.dom}>{self.cod}:" + ",".join(map(str, self.values))

    @staticmethod
    def parse(text: str) -> "OrdMap":
        head, vals = text.split(":", 1)
        d, c = head.split(">")
        return OrdMap(int(d), int(c), tuple(int(v) for v in vals.split(",") if v != ""))

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.dom

    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.cod))

    def is_identity(self) -> bool:
        return self.dom == self.cod and self.values == tuple(range(self.dom))

    def is_max_preserving(self) -> bool:
        return self.dom >= 1 and self.cod >= 1 and self.values[-1] == self.cod - 1

    def sort_key(self):
        return (self.dom, self.cod, self.values)


def ord_id(n: int) -> OrdMap:
    return OrdMap(n, n, tuple(range(n)))


def ord_compose(g: OrdMap, f: OrdMap) -> OrdMap:
    """g after f."""
    if f.cod != g.dom:
        raise CategoryError(f"cannot compose {g.label()} after {f.label()}")
    return OrdMap(f.dom, g.cod, tuple(g.values[v] for v in f.values))


def ordinal_join(a: OrdMap, b: OrdMap) -> OrdMap:
    """a on the lower block, b on the upper block shifted by a.cod."""
    return OrdMap(a.dom + b.dom, a.cod + b.cod, a.values + tuple(v + a.cod for v in b.values))


def join_all(maps) -> OrdMap:
    out = OrdMap(0, 0, ())
    for m in maps:
        out = ordinal_join(out, m)
    return out


def amax(n: int) -> OrdMap:
    """The unique map [n] -> [0], i.e. cardinality n+1 to cardinality 1."""
    return OrdMap(n + 1, 1, (0,) * (n + 1))


def monotone_maps(n: int, m: int) -> Iterator[OrdMap]:
    """All weakly monotone maps from cardinality n to cardinality m, lexicographic."""
    for vals in itertools.combinations_with_replacement(range(m), n):
        yield OrdMap(n, m, vals)


def count_monotone(n: int, m: int) -> int:
    from math import comb
    if m == 0:
        return 1 if n == 0 else 0
    return comb(n + m - 1, n)


def max_canonical_form(g: OrdMap) -> tuple[OrdMap, int]:
    """Write a max-preserving g as f * amax(n) with n+1 the size of the top preimage."""
    if not g.is_max_preserving():
        raise ValueError(f"{g.label()} is not max-preserving")
    top = g.cod - 1
    k = sum(1 for v in g.values if v == top)
    p = g.dom - k
    f = OrdMap(p, g.cod - 1, g.values[:p])
    return f, k - 1


def max_compose(g2: OrdMap, g1: OrdMap) -> OrdMap:
    """Composition in the max-preserving category through canonical forms.

    (f * a^s) . (h1 * h2 * a^t) = (f . h1) * a^(t + l2), where h1 covers the
    lower block of f's domain and h2 (of domain size l2) lands in the block a^s.
    """
    if g1.cod != g2.dom:
        raise CategoryError(f"cannot compose {g2.label()} after {g1.label()}")
    f, s = max_canonical_form(g2)
    h, t = max_canonical_form(g1)
    m = f.dom
    l1 = sum(1 for v in h.values if v < m)
    l2 = h.dom - l1
    h1 = OrdMap(l1, m, h.values[:l1])
    out = ordinal_join(ord_compose(f, h1), amax(t + l2))
    if out != ord_compose(g2, g1):
        raise AssertionError("canonical-form composition law violated")
    return out


# ---- simplex categories ------------------------------------------------

def obj_name(card: int) -> str:
    return f"[{card - 1}]"


def obj_card(name: str) -> int:
    return int(name[1:-1]) + 1


def simplex_category(cards, keep: Callable[[OrdMap], bool] = lambda f: True, name: str = "") -> FinCategory:
    """Category with the given cardinalities as objects and the monotone maps passing keep."""
    cards = sorted(set(cards))
    morphisms = []
    for n in cards:
        for m in cards:
            for f in monotone_maps(n, m):
                if keep(f) or f.is_identity():
                    morphisms.append((f.label(), obj_name(n), obj_name(m)))
    identity = {obj_name(n): ord_id(n).label() for n in cards}

    def comp(g, f):
        return ord_compose(OrdMap.parse(g), OrdMap.parse(f)).label()

    cat = FinCategory.build([obj_name(n) for n in cards], morphisms, comp, identity, name)
    for (g, f), h in cat.compose_table.items():
        if h not in cat._ends:
            raise CategoryError(f"{name}: composite {h} leaves the subcategory")
    return cat


def delta_plus(max_card: int) -> FinCategory:
    """Augmented simplex category truncated to cardinalities 0..max_card."""
    return simplex_category(range(0, max_card + 1), name=f"D+<={max_card}")


def delta(max_dim: int, min_dim: int = 0) -> FinCategory:
    """Simplex category on [min_dim] .. [max_dim]."""
    return simplex_category(range(min_dim + 1, max_dim + 2), name=f"D[{min_dim}..{max_dim}]")


def delta_max(max_card: int) -> FinCategory:
    return simplex_category(range(1, max_card + 1), OrdMap.is_max_preserving, name=f"Dmax<={max_card}")


def delta_inj(max_card: int) -> FinCategory:
    return simplex_category(range(0, max_card + 1), OrdMap.is_injective, name=f"Dinj<={max_card}")
