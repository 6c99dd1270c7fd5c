"""Truncated simplicial sets with tabulated faces and degeneracies."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..fincat.category import FinCategory, Report
from ..fincat.ordinals import OrdMap, monotone_maps, ord_compose, ord_id


@dataclass
class TruncatedSSet:
    """Simplices per level 0..N; d[(n, i)] maps X_n -> X_(n-1), s[(n, i)] maps X_n -> X_(n+1)."""

    N: int
    levels: list
    d: dict
    s: dict
    name: str = ""

    def face(self, n: int, i: int, x):
        return self.d[(n, i)][x]

    def degen(self, n: int, i: int, x):
        return self.s[(n, i)][x]

    def is_degenerate(self, n: int, x) -> bool:
        if n == 0:
            return False
        return any(self.s[(n - 1, i)][self.d[(n, i)][x]] == x for i in range(n))

    def nondegenerate(self, n: int) -> list:
        return [x for x in self.levels[n] if not self.is_degenerate(n, x)]

    def faces_of(self, n: int, x) -> tuple:
        return tuple(self.d[(n, i)][x] for i in range(n + 1))

    def to_dict(self) -> dict:
        return {"N": self.N, "name": self.name, "levels": [list(L) for L in self.levels],
                "faces": {f"{n},{i}": dict(m) for (n, i), m in sorted(self.d.items())},
                "degeneracies": {f"{n},{i}": dict(m) for (n, i), m in sorted(self.s.items())}}

    @staticmethod
    def from_dict(doc: dict) -> "TruncatedSSet":
        def keyed(section):
            out = {}
            for k, m in doc.get(section, {}).items():
                n, i = (int(t) for t in k.split(","))
                out[(n, i)] = dict(m)
            return out
        X = TruncatedSSet(int(doc["N"]), [tuple(L) for L in doc["levels"]], keyed("faces"),
                          keyed("degeneracies"), doc.get("name", ""))
        if len(X.levels) != X.N + 1:
            raise ValueError(f"expected {X.N + 1} levels, found {len(X.levels)}")
        for n in range(1, X.N + 1):
            for i in range(n + 1):
                if (n, i) not in X.d:
                    raise ValueError(f"face d{i} on level {n} is missing")
        for n in range(X.N):
            for i in range(n + 1):
                if (n, i) not in X.s:
                    raise ValueError(f"degeneracy s{i} on level {n} is missing")
        return X


def load_sset(path) -> TruncatedSSet:
    return TruncatedSSet.from_dict(json.loads(Path(path).read_text()))


def simplicial_identities(X: TruncatedSSet, cap: int = 5) -> Report:
    """Every simplicial identity within the truncation, checked on every simplex."""
    probs: list[str] = []
    checked = 0

    def bad(msg):
        if len(probs) < cap:
            probs.append(msg)

    for n in range(X.N + 1):
        for x in X.levels[n]:
            # d_i d_j = d_(j-1) d_i for i < j
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        checked += 1
                        if X.face(n - 1, i, X.face(n, j, x)) != X.face(n - 1, j - 1, X.face(n, i, x)):
                            bad(f"d{i}d{j} != d{j - 1}d{i} on {x}")
            if n + 1 <= X.N:
                for j in range(n + 1):
                    y = X.degen(n, j, x)
                    for i in range(n + 2):
                        checked += 1
                        got = X.face(n + 1, i, y)
                        if i < j:
                            want = X.degen(n - 1, j - 1, X.face(n, i, x))
                        elif i in (j, j + 1):
                            want = x
                        else:
                            want = X.degen(n - 1, j, X.face(n, i - 1, x))
                        if got != want:
                            bad(f"d{i}s{j} relation fails on {x}")
            if n + 2 <= X.N:
                for j in range(n + 1):
                    for i in range(j + 1):
                        checked += 1
                        if X.degen(n + 1, i, X.degen(n, j, x)) != X.degen(n + 1, j + 1, X.degen(n, i, x)):
                            bad(f"s{i}s{j} != s{j + 1}s{i} on {x}")
    return Report(not probs, probs, {"checked": checked})


@dataclass
class SimplicialMap:
    source: TruncatedSSet
    target: TruncatedSSet
    maps: list  # per level dict

    def __call__(self, n, x):
        return self.maps[n][x]

    def validate(self, cap: int = 5) -> Report:
        S, T = self.source, self.target
        probs = []
        N = min(S.N, T.N)
        for n in range(N + 1):
            for x in S.levels[n]:
                if n >= 1:
                    for i in range(n + 1):
                        if self(n - 1, S.face(n, i, x)) != T.face(n, i, self(n, x)) and len(probs) < cap:
                            probs.append(f"d{i} not preserved at {x}")
                if n < N:
                    for i in range(n + 1):
                        if self(n + 1, S.degen(n, i, x)) != T.degen(n, i, self(n, x)) and len(probs) < cap:
                            probs.append(f"s{i} not preserved at {x}")
        return Report(not probs, probs)


def _chain_id(ms) -> str:
    return "|".join(ms)


def nerve(C: FinCategory, N: int) -> TruncatedSSet:
    """Level k: composable chains (m1, ..., mk), m1 first; level 0: objects."""
    if any("|" in m for m in C.morphism_ids):
        raise ValueError("morphism ids used in nerve simplices must not contain '|'")
    chains = [[(o,) for o in C.objects]]
    chains.append([(m,) for m in C.morphism_ids])
    for k in range(2, N + 1):
        nxt = []
        for ch in chains[-1]:
            for m in C.morphisms_from(C.tgt(ch[-1])):
                nxt.append(ch + (m,))
        chains.append(nxt)
    chains = chains[:N + 1]

    def vertices(k, ch):
        if k == 0:
            return ch
        return (C.src(ch[0]),) + tuple(C.tgt(m) for m in ch)

    levels = [tuple(c[0] for c in chains[0])] + [tuple(_chain_id(c) for c in chains[k]) for k in range(1, N + 1)]
    d, s = {}, {}
    for k in range(1, N + 1):
        for i in range(k + 1):
            table = {}
            for ch in chains[k]:
                if k == 1:
                    out = C.tgt(ch[0]) if i == 0 else C.src(ch[0])
                elif i == 0:
                    out = _chain_id(ch[1:])
                elif i == k:
                    out = _chain_id(ch[:-1])
                else:
                    out = _chain_id(ch[:i - 1] + (C.compose(ch[i], ch[i - 1]),) + ch[i + 1:])
                table[_chain_id(ch)] = out
            d[(k, i)] = table
    for k in range(0, N):
        for i in range(k + 1):
            table = {}
            for ch in chains[k]:
                vs = vertices(k, ch)
                ident = C.id(vs[i])
                if k == 0:
                    out = ident
                else:
                    out = _chain_id(ch[:i] + (ident,) + ch[i:])
                table[ch[0] if k == 0 else _chain_id(ch)] = out
            s[(k, i)] = table
    return TruncatedSSet(N, levels, d, s, f"N({C.name})")


def point(N: int) -> TruncatedSSet:
    return nerve(FinCategory.terminal(), N)


# ---- standard simplices, boundaries and horns ------------------------------

def _simplex_id(f: OrdMap) -> str:
    return ",".join(map(str, f.values))


def standard_simplex(n: int, N: int, keep=None, name: str = "") -> TruncatedSSet:
    """Delta^n truncated at N: k-simplices are monotone maps [k] -> [n].

    ``keep`` restricts to a simplicial subset (closed under faces and degeneracies).
    """
    keep = keep or (lambda f: True)
    levels, d, s = [], {}, {}
    maps = []
    for k in range(N + 1):
        mk = [f for f in monotone_maps(k + 1, n + 1) if keep(f)]
        maps.append(mk)
        levels.append(tuple(_simplex_id(f) for f in mk))
    for k in range(1, N + 1):
        for i in range(k + 1):
            delta_i = OrdMap(k, k + 1, tuple(v if v < i else v + 1 for v in range(k)))
            d[(k, i)] = {_simplex_id(f): _simplex_id(ord_compose(f, delta_i)) for f in maps[k]}
    for k in range(N):
        for i in range(k + 1):
            sigma_i = OrdMap(k + 2, k + 1, tuple(v if v <= i else v - 1 for v in range(k + 2)))
            s[(k, i)] = {_simplex_id(f): _simplex_id(ord_compose(f, sigma_i)) for f in maps[k]}
    return TruncatedSSet(N, levels, d, s, name or f"Delta^{n}")


def boundary(n: int, N: int) -> TruncatedSSet:
    return standard_simplex(n, N, lambda f: not f.is_surjective(), f"dDelta^{n}")


def horn(n: int, i: int, N: int) -> TruncatedSSet:
    """Lambda^n_i: simplices whose image together with i misses some vertex."""
    def keep(f):
        return len(set(f.values) | {i}) < n + 1
    return standard_simplex(n, N, keep, f"Lambda^{n}_{i}")


def inclusion_map(sub: TruncatedSSet, X: TruncatedSSet) -> SimplicialMap:
    return SimplicialMap(sub, X, [{x: x for x in sub.levels[k]} for k in range(sub.N + 1)])


def terminal_map(E: TruncatedSSet) -> SimplicialMap:
    P = point(E.N)
    return SimplicialMap(E, P, [{x: P.levels[k][0] for x in E.levels[k]} for k in range(E.N + 1)])


def identity_map(E: TruncatedSSet) -> SimplicialMap:
    return SimplicialMap(E, E, [{x: x for x in E.levels[k]} for k in range(E.N + 1)])


# ---- Eilenberg-Zilber decomposition -----------------------------------------

def _codegeneracy(n: int, i: int) -> OrdMap:
    """sigma^i: [n] -> [n-1] (cardinality n+1 to n), hitting i twice."""
    return OrdMap(n + 1, n, tuple(v if v <= i else v - 1 for v in range(n + 1)))


def ez_decompose(X: TruncatedSSet, n: int, x) -> tuple[OrdMap, int, object]:
    """(sigma, m, y): sigma: [n] ->> [m] surjective, y nondegenerate in X_m, x = sigma*(y)."""
    for i in range(n):
        z = X.face(n, i, x)
        if X.degen(n - 1, i, z) == x:
            sig, m, y = ez_decompose(X, n - 1, z)
            return ord_compose(sig, _codegeneracy(n, i)), m, y
    return ord_id(n + 1), n, x


def ez_recompose(X: TruncatedSSet, sigma: OrdMap, y):
    """sigma*(y) through degeneracies: sigma = sigma' . sigma^i for the least repeated i."""
    n = sigma.dom - 1
    m = sigma.cod - 1
    if n == m:
        return y
    i = next(k for k in range(n) if sigma.values[k] == sigma.values[k + 1])
    rest = OrdMap(n, m + 1, sigma.values[:i] + sigma.values[i + 1:])
    return X.degen(n - 1, i, ez_recompose(X, rest, y))


def ez_uniqueness(X: TruncatedSSet, max_level: int | None = None) -> Report:
    """Every simplex has exactly one (surjection, nondegenerate) presentation."""
    top = X.N if max_level is None else min(max_level, X.N)
    probs = []
    nondeg = [set(X.nondegenerate(m)) for m in range(top + 1)]
    count = 0
    for n in range(top + 1):
        for x in X.levels[n]:
            count += 1
            sig, m, y = ez_decompose(X, n, x)
            if ez_recompose(X, sig, y) != x:
                probs.append(f"round trip fails on {x}")
            hits = 0
            for mm in range(n + 1):
                for s in monotone_maps(n + 1, mm + 1):
                    if not s.is_surjective():
                        continue
                    for yy in nondeg[mm]:
                        if ez_recompose(X, s, yy) == x:
                            hits += 1
            if hits != 1:
                probs.append(f"{x} has {hits} presentations")
    return Report(not probs, probs, {"simplices": count})


# ---- lifting against horns ----------------------------------------------------

HORN_CLASSES = {
    "kan": lambda n, i: True,
    "inner": lambda n, i: 0 < i < n,
    "left": lambda n, i: i < n,
    "right": lambda n, i: i > 0,
}


@dataclass
class LiftingReport:
    klass: str
    max_dim: int
    instances: int = 0
    failures: list = field(default_factory=list)
    per_horn: dict = field(default_factory=dict)  # "n,i" -> (instances, failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fails(self, n: int, i: int) -> bool:
        return self.per_horn.get(f"{n},{i}", (0, 0))[1] > 0


def _horn_tuples(E: TruncatedSSet, n: int, i: int):
    """Compatible families (y_k)_(k != i) of (n-1)-simplices: d_j y_k = d_(k-1) y_j for j < k."""
    ks = [k for k in range(n + 1) if k != i]
    cand = E.levels[n - 1]
    chosen: dict = {}

    def rec(pos):
        if pos == len(ks):
            yield dict(chosen)
            return
        k = ks[pos]
        for y in cand:
            ok = True
            if n >= 2:
                for j in ks[:pos]:
                    if E.face(n - 1, j, y) != E.face(n - 1, k - 1, chosen[j]):
                        ok = False
                        break
            if ok:
                chosen[k] = y
                yield from rec(pos + 1)
                del chosen[k]

    yield from rec(0)


def horn_lifting_check(p: SimplicialMap, klass: str = "kan", max_dim: int = 2, cap: int = 5) -> LiftingReport:
    """Right lifting of p against Lambda^n_i -> Delta^n for 1 <= n <= max_dim and allowed i."""
    if klass not in HORN_CLASSES:
        raise ValueError(f"unknown horn class {klass!r}")
    E, B = p.source, p.target
    if E.N < max_dim or B.N < max_dim:
        raise ValueError("source and target must be truncated at or above max_dim")
    allowed = HORN_CLASSES[klass]
    rep = LiftingReport(klass, max_dim)
    for n in range(1, max_dim + 1):
        for i in range(n + 1):
            if not allowed(n, i):
                continue
            inst = fail = 0
            for ys in _horn_tuples(E, n, i):
                for b in B.levels[n]:
                    if any(B.face(n, k, b) != p(n - 1, y) for k, y in ys.items()):
                        continue
                    inst += 1
                    filled = any(all(E.face(n, k, e) == y for k, y in ys.items()) and p(n, e) == b
                                 for e in E.levels[n])
                    if not filled:
                        fail += 1
                        if len(rep.failures) < cap:
                            rep.failures.append({"n": n, "i": i, "horn": {str(k): y for k, y in sorted(ys.items())},
                                                 "base": b})
            rep.per_horn[f"{n},{i}"] = (inst, fail)
            rep.instances += inst
    return rep


__all__ = ["TruncatedSSet", "load_sset", "simplicial_identities", "SimplicialMap", "nerve", "point",
           "standard_simplex", "boundary", "horn", "inclusion_map", "terminal_map", "identity_map",
           "ez_decompose", "ez_recompose", "ez_uniqueness", "HORN_CLASSES", "LiftingReport", "horn_lifting_check"]
