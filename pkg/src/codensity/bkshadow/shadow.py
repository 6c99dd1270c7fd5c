"""The finite-set shadow of the affine-span monad R_a.

Everything here is computed on finite windows over a finite ring; the
size spectrum of R_a-algebras is reported as a shadow of the completion
story, not as a statement about spaces.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from ..fincat.category import Report
from ..monadkit.algebras import algebra_search, isar_chain_check
from ..simplex.sset import TruncatedSSet, simplicial_identities
from ..util import skeleton
from .builtins import AffineSpanMonad
from .ring import FiniteRing


def _ring(R) -> FiniteRing:
    return FiniteRing.parse(R) if isinstance(R, str) else R


def r_product_map(R, X, Y):
    """(sum r_i x_i, sum s_j y_j) -> sum r_i s_j (x_i, y_j), from R_a(X) x R_a(Y) to R_a(X x Y)."""
    M = AffineSpanMonad(_ring(R))
    ring = M.R

    def product(u, v):
        return M.combine(((x, y), ring.mul(r, s)) for x, r in u for y, s in v)

    return product


def product_checks(R, X, Y, Z=None) -> Report:
    """Affine constraint on every output, the unit square, and compatibility with triple products."""
    M = AffineSpanMonad(_ring(R))
    X, Y = tuple(X), tuple(Y)
    prod = r_product_map(M.R, X, Y)
    probs = []
    pairs = 0
    for u in M.obj(X):
        for v in M.obj(Y):
            pairs += 1
            w = prod(u, v)
            if M.coefficient_sum(w) != M.R.one:
                probs.append(f"{u} * {v} has coefficient sum {M.coefficient_sum(w)}")
    for x in X:
        for y in Y:
            if prod(((x, M.R.one),), ((y, M.R.one),)) != (((x, y), M.R.one),):
                probs.append(f"unit square fails at ({x}, {y})")
    triples = 0
    if Z is not None:
        Z = tuple(Z)
        XY = tuple(itertools.product(X, Y))
        YZ = tuple(itertools.product(Y, Z))
        left, right = r_product_map(M.R, XY, Z), r_product_map(M.R, X, YZ)
        yz = r_product_map(M.R, Y, Z)
        for u in M.obj(X):
            for v in M.obj(Y):
                for w in M.obj(Z):
                    triples += 1
                    a = M.combine(((p[0][0], p[0][1], p[1]), r) for p, r in left(prod(u, v), w))
                    b = M.combine(((p[0], p[1][0], p[1][1]), r) for p, r in right(u, yz(v, w)))
                    if a != b:
                        probs.append(f"triple product differs on ({u}, {v}, {w})")
    return Report(not probs, probs[:5], {"pairs": pairs, "triples": triples})


@dataclass
class ShadowReport:
    ring: str
    window: list
    I: list = field(default_factory=list)
    A: list = field(default_factory=list)
    R: list = field(default_factory=list)
    spectrum: dict = field(default_factory=dict)  # size -> number of algebra structures
    sandwich: bool = False
    unresolved: dict = field(default_factory=dict)
    label: str = "shadow"

    @property
    def ok(self) -> bool:
        return self.sandwich and not self.unresolved

    def summary(self) -> dict:
        return {"ring": self.ring, "window": self.window, "label": self.label, "I": self.I, "A": self.A,
                "R": self.R, "spectrum": self.spectrum, "sandwich": self.sandwich, "unresolved": self.unresolved}


def kR_shadow(R, window, limit: int = 10_000) -> ShadowReport:
    """Sizes admitting an R_a-algebra structure, sandwiched as I(R_a) <= A(R_a) <= R(R_a)."""
    M = AffineSpanMonad(_ring(R))
    sizes = sorted(set(window))
    chain = isar_chain_check(M, sizes, t=1)
    rep = ShadowReport(M.R.name, sizes, chain.I, chain.A, chain.R)
    rep.unresolved = {n: r for n, r in chain.unresolved.items() if r.startswith("A")}
    for n in sizes:
        if n not in rep.unresolved:
            rep.spectrum[n] = len(algebra_search(M, n, limit=limit))
    rep.sandwich = set(rep.I) <= set(rep.A) <= set(rep.R)
    return rep


def _encode(t) -> str:
    return json.dumps([[x, r] for x, r in t], separators=(",", ":"))


def levelwise_affine(X: TruncatedSSet, R) -> TruncatedSSet:
    """R_a applied to every level, faces and degeneracies extended on supports."""
    M = AffineSpanMonad(_ring(R))
    levels, elems = [], []
    for n in range(X.N + 1):
        Ln = tuple(M.obj(tuple(X.levels[n])))
        elems.append(Ln)
        levels.append(tuple(_encode(t) for t in Ln))

    def extend(table, t):
        return _encode(M.combine((table[x], r) for x, r in t))

    d = {(n, i): {_encode(t): extend(X.d[(n, i)], t) for t in elems[n]} for (n, i) in X.d}
    s = {(n, i): {_encode(t): extend(X.s[(n, i)], t) for t in elems[n]} for (n, i) in X.s}
    return TruncatedSSet(X.N, levels, d, s, f"R_a({X.name or 'X'}) over {M.R.name}")


def levelwise_affine_check(X: TruncatedSSet, R) -> Report:
    Y = levelwise_affine(X, R)
    rep = simplicial_identities(Y)
    rep.data["sizes"] = [len(L) for L in Y.levels]
    return rep


def odd_subset_count(n: int) -> int:
    """Odd-cardinality subsets of an n-set (the Z/2 affine elements)."""
    from math import comb
    return sum(comb(n, k) for k in range(1, n + 1, 2))


def preserves_monos_and_epis(M, window) -> Report:
    """T(f) is injective (surjective) whenever f is, for every window map f."""
    from ..util import all_maps
    probs = []
    sizes = sorted(set(window))
    for n in sizes:
        for m in sizes:
            for f in all_maps(skeleton(n), skeleton(m)):
                Tf = M.fmap(f)
                inj = len(set(f.values)) == n
                sur = set(f.values) == set(range(m))
                if inj and len(set(Tf.values)) != len(Tf.dom):
                    probs.append(f"T of the injection {f.values} is not injective")
                if sur and set(Tf.values) != set(Tf.cod):
                    probs.append(f"T of the surjection {f.values} is not surjective")
    return Report(not probs, probs[:5])


__all__ = ["r_product_map", "product_checks", "kR_shadow", "ShadowReport", "levelwise_affine",
           "levelwise_affine_check", "odd_subset_count", "preserves_monos_and_epis"]
