"""Independent brute-force routes used to cross-check the main algorithms.

Nothing here shares code with the constraint solver or the monad classes:
hom-sets are enumerated with itertools and every equation is checked
directly, so agreement between the two routes is meaningful.
"""

from __future__ import annotations

import itertools
from math import comb


def _maps(n: int, m: int) -> list[tuple]:
    return list(itertools.product(range(m), repeat=n))


def codensity_families(c: int, D) -> list[tuple]:
    """Naturality families for T_D(c) over finite sets, by plain backtracking.

    A family assigns phi[(d, f)] in range(d) to every d in D and f: c -> d;
    naturality asks g(phi[(d, f)]) == phi[(d', g . f)] for all g: d -> d'.
    Each equation is tested as soon as both sides are assigned.
    """
    D = sorted(set(D))
    variables = [(d, f) for d in D for f in _maps(c, d)]
    pos = {v: k for k, v in enumerate(variables)}
    equations = [[] for _ in variables]  # checked when the later variable is assigned
    for d in D:
        for d2 in D:
            for g in _maps(d, d2):
                for f in _maps(c, d):
                    a = pos[(d, f)]
                    b = pos[(d2, tuple(g[v] for v in f))]
                    equations[max(a, b)].append((a, g, b))
    out: list = []
    values = [None] * len(variables)

    def rec(k):
        if k == len(variables):
            out.append(tuple(values))
            return
        for v in range(variables[k][0]):
            values[k] = v
            if all(g[values[a]] == values[b] for a, g, b in equations[k]):
                rec(k + 1)
        values[k] = None

    rec(0)
    return out


def codensity_unit_is_bijective(c: int, D) -> bool:
    fams = codensity_families(c, D)
    D = sorted(set(D))
    variables = [(d, f) for d in D for f in _maps(c, d)]
    ev = {tuple(f[x] for _, f in variables) for x in range(c)}
    return len(ev) == c and ev == set(fams)


def double_dual(k: int):
    """(V, V**, eta) for V = F2^k; V** as linear functionals on V*, eta(v) = evaluation at v."""
    V = list(itertools.product((0, 1), repeat=k))
    dual = V  # w stands for v -> w . v

    def dot(w, v):
        return sum(a * b for a, b in zip(w, v)) % 2

    funcs = []
    for vals in itertools.product((0, 1), repeat=len(dual)):
        table = dict(zip(dual, vals))
        linear = all(table[tuple((a + b) % 2 for a, b in zip(u, w))] == (table[u] + table[w]) % 2
                     for u in dual for w in dual)
        if linear:
            funcs.append(vals)
    eta = {v: tuple(dot(w, v) for w in dual) for v in V}
    return V, funcs, eta


def powerset_fakir(n: int) -> list:
    """Elements S of P(n) with P(eta)(S) == eta_P(S): the singletons."""
    X = range(n)
    subsets = [frozenset(s) for r in range(n + 1) for s in itertools.combinations(X, r)]
    return [S for S in subsets if frozenset(frozenset([x]) for x in S) == frozenset([S])]


def odd_subsets(n: int) -> int:
    return sum(comb(n, k) for k in range(1, n + 1, 2))


def monotone_count(n: int, m: int) -> int:
    """Weakly monotone maps from an n-element to an m-element chain, by enumeration."""
    return sum(1 for v in itertools.product(range(m), repeat=n) if all(a <= b for a, b in zip(v, v[1:])))


def max_preserving_count(k: int, q: int) -> int:
    return sum(1 for v in itertools.product(range(q), repeat=k)
               if all(a <= b for a, b in zip(v, v[1:])) and v and v[-1] == q - 1)


def chain_count(k: int, B: int, injective: bool = False) -> int:
    """Chains of k monotone maps among cardinalities 0..B, by nested enumeration."""
    def maps(a, b):
        out = []
        for v in itertools.product(range(b), repeat=a):
            if all(x < y if injective else x <= y for x, y in zip(v, v[1:])):
                out.append(v)
        return out
    counts = {a: 1 for a in range(B + 1)}
    for _ in range(k):
        counts = {b: sum(counts[a] * len(maps(a, b)) for a in range(B + 1)) for b in range(B + 1)}
    return sum(counts.values())


def nerve_level_count(n_objects: int, level: int) -> int:
    """Simplices of the nerve of the total order on n objects: weakly increasing sequences."""
    return comb(n_objects + level, level + 1)


__all__ = ["codensity_families", "codensity_unit_is_bijective", "double_dual", "powerset_fakir", "odd_subsets",
           "monotone_count", "max_preserving_count", "chain_count", "nerve_level_count"]
