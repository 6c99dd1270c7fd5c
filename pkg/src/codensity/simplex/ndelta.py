"""Chains of ordinal maps: the simplicial monoids N(Delta_+) and N(Delta_+^inj).

A level-k simplex is a chain [a_0] -> ... -> [a_k] of monotone maps, stored
by its cardinalities and maps.  The monoid product is the levelwise ordinal
join; the unit is the chain constant at the empty ordinal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fincat.category import Report
from ..fincat.ordinals import OrdMap, count_monotone, join_all, monotone_maps, ord_compose, ord_id, ordinal_join
from ..util import check_budget


@dataclass(frozen=True, order=True)
class Chain:
    cards: tuple
    maps: tuple  # OrdMaps, maps[i]: cards[i] -> cards[i+1]

    def __post_init__(self):
        if len(self.maps) != len(self.cards) - 1:
            raise ValueError("a chain needs one map fewer than objects")
        for i, f in enumerate(self.maps):
            if (f.dom, f.cod) != (self.cards[i], self.cards[i + 1]):
                raise ValueError(f"map {i} does not fit the cardinalities {self.cards}")

    @property
    def level(self) -> int:
        return len(self.cards) - 1

    def label(self) -> str:
        if not self.maps:
            return f"[{self.cards[0] - 1}]"
        return "|".join(f.label() for f in self.maps)

    def sort_key(self):
        return (self.level, self.cards, tuple(f.values for f in self.maps))

    @staticmethod
    def const(card: int, level: int) -> "Chain":
        return Chain((card,) * (level + 1), (ord_id(card),) * level)

    @staticmethod
    def of(*maps: OrdMap) -> "Chain":
        return Chain((maps[0].dom,) + tuple(f.cod for f in maps), tuple(maps))

    def face(self, i: int) -> "Chain":
        k = self.level
        if k == 0:
            raise ValueError("level-0 chains have no faces")
        if i == 0:
            return Chain(self.cards[1:], self.maps[1:])
        if i == k:
            return Chain(self.cards[:-1], self.maps[:-1])
        merged = ord_compose(self.maps[i], self.maps[i - 1])
        return Chain(self.cards[:i] + self.cards[i + 1:], self.maps[:i - 1] + (merged,) + self.maps[i + 1:])

    def degen(self, i: int) -> "Chain":
        c = self.cards[i]
        return Chain(self.cards[:i + 1] + self.cards[i:], self.maps[:i] + (ord_id(c),) + self.maps[i:])

    def is_degenerate(self) -> bool:
        return any(f.is_identity() for f in self.maps)

    def is_basis(self) -> bool:
        return self.cards[-1] == 1

    def is_injective(self) -> bool:
        return all(f.is_injective() for f in self.maps)

    def root(self) -> "Chain":
        """The nondegenerate chain obtained by deleting identity maps."""
        keep = [i for i, f in enumerate(self.maps) if not f.is_identity()]
        cards = (self.cards[0],) + tuple(self.cards[i + 1] for i in keep)
        return Chain(cards, tuple(self.maps[i] for i in keep))


def chain_join(a: Chain, b: Chain) -> Chain:
    if a.level != b.level:
        raise ValueError("joined chains must have the same level")
    return Chain(tuple(x + y for x, y in zip(a.cards, b.cards)),
                 tuple(ordinal_join(f, g) for f, g in zip(a.maps, b.maps)))


def join_word(word, level: int) -> Chain:
    out = Chain.const(0, level)
    for c in word:
        out = chain_join(out, c)
    return out


def count_chains(k: int, B: int, injective: bool = False) -> int:
    """Number of chains of length k with cardinalities <= B (transfer-matrix count)."""
    from math import comb
    def w(a, b):
        if injective:
            return comb(b, a)
        return count_monotone(a, b)
    vec = [1] * (B + 1)
    for _ in range(k):
        vec = [sum(vec[a] * w(a, b) for a in range(B + 1)) for b in range(B + 1)]
    return sum(vec)


def enumerate_ndelta_plus(k: int, B: int, injective: bool = False) -> list[Chain]:
    """All level-k chains with every cardinality <= B, sorted canonically."""
    check_budget(count_chains(k, B, injective), f"chains of length {k} with cardinalities <= {B}")
    out = []

    def rec(cards, maps):
        if len(cards) == k + 1:
            out.append(Chain(tuple(cards), tuple(maps)))
            return
        a = cards[-1]
        for b in range(B + 1):
            for f in monotone_maps(a, b):
                if injective and not f.is_injective():
                    continue
                rec(cards + [b], maps + [f])

    for a0 in range(B + 1):
        rec([a0], [])
    return sorted(out, key=Chain.sort_key)


def join_decompose_chain(ch: Chain) -> list[Chain]:
    """The basis factors of a chain: one fiber chain per point of the last ordinal."""
    k = ch.level
    # composite to the end from every position
    to_end = [None] * (k + 1)
    to_end[k] = ord_id(ch.cards[k])
    for i in range(k - 1, -1, -1):
        to_end[i] = ord_compose(to_end[i + 1], ch.maps[i])
    factors = []
    for j in range(ch.cards[k]):
        fibers = [[p for p in range(ch.cards[i]) if to_end[i](p) == j] for i in range(k + 1)]
        maps = []
        for i in range(k):
            lo = fibers[i + 1][0] if fibers[i + 1] else 0
            maps.append(OrdMap(len(fibers[i]), len(fibers[i + 1]), tuple(ch.maps[i](p) - lo for p in fibers[i])))
        factors.append(Chain(tuple(len(f) for f in fibers), tuple(maps)))
    return factors


def _splits(ch: Chain):
    """All ways ch = a * b with a non-unit, as (a, b) pairs.

    A split is a cut vector compatible with every map.  Preimages of initial
    segments under monotone maps are initial segments, so the cut at the last
    level determines the others.
    """
    k = ch.level
    for last in range(ch.cards[k] + 1):
        cut = [0] * (k + 1)
        cut[k] = last
        for i in range(k - 1, -1, -1):
            cut[i] = sum(1 for v in ch.maps[i].values if v < cut[i + 1])
        if not any(cut):
            continue
        a = Chain(tuple(cut), tuple(OrdMap(cut[i], cut[i + 1], f.values[:cut[i]]) for i, f in enumerate(ch.maps)))
        b = Chain(tuple(c - x for c, x in zip(ch.cards, cut)),
                  tuple(OrdMap(f.dom - cut[i], f.cod - cut[i + 1], tuple(v - cut[i + 1] for v in f.values[cut[i]:]))
                        for i, f in enumerate(ch.maps)))
        yield a, b


def count_factorizations(ch: Chain, is_generator, limit: int = 2) -> int:
    """Number of words of generators whose join is ch (counting stops at ``limit``)."""
    memo: dict = {}

    def count(c: Chain) -> int:
        if not any(c.cards):
            return 1
        if c in memo:
            return memo[c]
        total = 0
        for a, b in _splits(c):
            if is_generator(a):
                total += count(b)
                if total >= limit:
                    break
        memo[c] = min(total, limit)
        return memo[c]

    return count(ch)


@dataclass
class BasisReport:
    k: int
    B: int
    chains: int = 0
    basis_per_level: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_basis_ndelta_plus(k: int, B: int, is_generator=None, injective: bool = False, cap: int = 5) -> BasisReport:
    """Unique factorization into basis chains for every chain of level <= k, cardinalities <= B.

    The default generators are the chains ending at [0]; a different predicate
    can be passed to test other candidate generating sets.
    """
    gen = is_generator or Chain.is_basis
    rep = BasisReport(k, B)
    for lvl in range(k + 1):
        chains = enumerate_ndelta_plus(lvl, B, injective)
        rep.basis_per_level[lvl] = sum(1 for c in chains if gen(c))
        for c in chains:
            rep.chains += 1
            n = count_factorizations(c, gen)
            if n != 1 and len(rep.problems) < cap:
                rep.problems.append(f"{c.label()} has {'no' if n == 0 else 'several'} factorizations")
            if is_generator is None:
                factors = join_decompose_chain(c)
                if join_word(factors, lvl) != c or not all(f.is_basis() for f in factors):
                    rep.problems.append(f"fiber decomposition of {c.label()} does not round-trip")
            if gen(c) and lvl < k:
                for i in range(lvl + 1):
                    if not gen(c.degen(i)):
                        rep.problems.append(f"s{i}({c.label()}) is not a generator")
    return rep


def closure_check(k: int, B: int) -> Report:
    """Faces and degeneracies of window chains stay inside the window."""
    probs = []
    sets = [set(enumerate_ndelta_plus(l, B)) for l in range(k + 1)]
    for l in range(k + 1):
        for c in sets[l]:
            if l >= 1:
                for i in range(l + 1):
                    if c.face(i) not in sets[l - 1]:
                        probs.append(f"d{i}({c.label()}) leaves the window")
            if l < k:
                for i in range(l + 1):
                    if c.degen(i) not in sets[l + 1]:
                        probs.append(f"s{i}({c.label()}) leaves the window")
    return Report(not probs, probs)


# ---- horn generators ---------------------------------------------------------

def nondegenerate_basis(n: int, B: int) -> list[Chain]:
    return [c for c in enumerate_ndelta_plus(n, B) if c.is_basis() and not c.is_degenerate()]


def default_horn_generators(c: Chain) -> bool:
    """H_n: nondegenerate basis chains starting at the empty ordinal."""
    return c.cards[0] == 0


@dataclass
class HornReport:
    k: int
    B: int
    levels: dict = field(default_factory=dict)  # n -> {"X0": ., "H": ., "H_next": .}
    indices: set = field(default_factory=set)
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    @property
    def verdict(self) -> str:
        if not self.ok:
            return "no horn-generator structure found"
        if self.indices <= {0}:
            return f"left anodyne, evidence up to level {self.k} with cardinalities <= {self.B}"
        return "horn generators found"


def verify_horn_generators_ndelta_plus(k: int, B: int, in_H=None, index=None, cap: int = 5) -> HornReport:
    """d_i(h) for h in H_(n+1), i = i(h), is a bijection onto X_n minus H_n, for n <= k.

    ``in_H`` selects horn generators among nondegenerate basis chains and
    ``index`` gives i(h); the defaults are chains starting at [-1] and i = 0.
    """
    in_H = in_H or default_horn_generators
    index = index or (lambda h: 0)
    rep = HornReport(k, B)
    X = {n: nondegenerate_basis(n, B) for n in range(k + 2)}
    H = {n: [c for c in X[n] if in_H(c)] for n in X}
    if H[0]:
        rep.problems.append("H_0 is not empty")
    for n in range(k + 1):
        target = [c for c in X[n] if c not in set(H[n])]
        images = []
        for h in H[n + 1]:
            i = index(h)
            rep.indices.add(i)
            if not 0 <= i <= n + 1:
                rep.problems.append(f"index {i} out of range for {h.label()}")
                continue
            images.append(h.face(i))
        img_set = set(images)
        if len(img_set) != len(images) and len(rep.problems) < cap:
            rep.problems.append(f"level {n}: the face map on H_{n + 1} is not injective")
        if img_set != set(target) and len(rep.problems) < cap:
            missing = [c.label() for c in target if c not in img_set][:3]
            extra = [c.label() for c in img_set - set(target)][:3]
            rep.problems.append(f"level {n}: face image differs from X_{n} minus H_{n}; missing {missing}, extra {extra}")
        if len(X[n]) != len(H[n]) + len(H[n + 1]) and len(rep.problems) < cap:
            rep.problems.append(f"level {n}: |X| = {len(X[n])} but |H_n| + |H_n+1| = {len(H[n]) + len(H[n + 1])}")
        rep.levels[n] = {"X0": len(X[n]), "H": len(H[n]), "H_next": len(H[n + 1])}
    return rep


# ---- the injective variant ---------------------------------------------------

def f_kn(k: int, n: int) -> Chain:
    """The level-n chain with [-1] in positions < k and [0] from k on."""
    cards = tuple(0 if i < k else 1 for i in range(n + 1))
    maps = tuple(OrdMap(cards[i], cards[i + 1], (0,) * cards[i]) for i in range(n))
    return Chain(cards, maps)


def delta1_simplex(k: int, n: int) -> tuple:
    """The n-simplex of Delta^1 with k zeros: i -> 0 for i < k, 1 otherwise."""
    return tuple(0 if i < k else 1 for i in range(n + 1))


@dataclass
class InjBasisReport:
    n: int
    B: int
    basis_per_level: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def verify_basis_delta_inj(n: int, B: int | None = None, cap: int = 5) -> InjBasisReport:
    """Basis {f_(k,l) : 0 <= k <= l} of injective chains, for levels l <= n.

    Also checks that f_(k,l) <-> (the Delta^1 simplex with k zeros) commutes with
    faces and degeneracies, the all-zero simplex playing the role of the unit.
    """
    B = n + 1 if B is None else B
    rep = InjBasisReport(n, B)
    for lvl in range(n + 1):
        chains = enumerate_ndelta_plus(lvl, B, injective=True)
        basis = [c for c in chains if c.is_basis()]
        expected = [f_kn(k, lvl) for k in range(lvl + 1)]
        rep.basis_per_level[lvl] = len(basis)
        if sorted(basis) != sorted(expected):
            rep.problems.append(f"level {lvl}: basis differs from the f_(k,n) family")
        for c in chains:
            if count_factorizations(c, Chain.is_basis) != 1 and len(rep.problems) < cap:
                rep.problems.append(f"{c.label()} does not factor uniquely")
        # generator bijection with Delta^1, unit <-> all-zero simplex
        to_d1 = {f_kn(k, lvl): delta1_simplex(k, lvl) for k in range(lvl + 1)}
        to_d1[Chain.const(0, lvl)] = delta1_simplex(lvl + 1, lvl)
        for c, s in to_d1.items():
            if lvl >= 1:
                for i in range(lvl + 1):
                    face_c = c.face(i)
                    face_s = s[:i] + s[i + 1:]
                    k2 = sum(1 for v in face_s if v == 0)
                    want = f_kn(k2, lvl - 1) if k2 <= lvl - 1 else Chain.const(0, lvl - 1)
                    if face_c != want:
                        rep.problems.append(f"d{i} does not match Delta^1 on {c.label()}")
            for i in range(lvl + 1):
                deg_s = s[:i + 1] + s[i:]
                k2 = sum(1 for v in deg_s if v == 0)
                want = f_kn(k2, lvl + 1) if k2 <= lvl + 1 else Chain.const(0, lvl + 1)
                if c.degen(i) != want:
                    rep.problems.append(f"s{i} does not match Delta^1 on {c.label()}")
    return rep


__all__ = ["Chain", "chain_join", "join_word", "count_chains", "enumerate_ndelta_plus", "join_decompose_chain",
           "count_factorizations", "verify_basis_ndelta_plus", "BasisReport", "closure_check",
           "nondegenerate_basis", "default_horn_generators", "verify_horn_generators_ndelta_plus", "HornReport",
           "f_kn", "delta1_simplex", "verify_basis_delta_inj", "InjBasisReport", "join_all"]
