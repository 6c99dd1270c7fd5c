"""The cobar construction: [k] -> T^(k+1), with maps built from eta and mu.

A monotone map f from cardinality p to cardinality q acts as
phi(f): T^p => T^q, the horizontal composite over the fibers of f of
mu^(k): T^k => T (k = fiber size; mu^(0) = eta, mu^(1) = id).  The first
fiber is the outermost factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fincat.ordinals import OrdMap, monotone_maps, ord_compose
from ..util import FinMap, check_budget, compose
from .monad import TableMonad, ensure_budget_power


def mult_power_map(M: TableMonad, Y, k: int) -> FinMap:
    """mu^(k)_Y: T^k(Y) -> T(Y) as a finite map (k=0 is eta, k=1 the identity)."""
    Y = tuple(Y)
    cache = M.__dict__.setdefault("_mult_power_cache", {})
    key = (Y, k)
    hit = cache.get(key)
    if hit is None:
        if k == 0:
            hit = M.unit(Y)
        elif k == 1:
            hit = FinMap.identity(M.obj(Y))
        elif k == 2:
            hit = M.mult(Y)
        else:
            hit = compose(M.mult(Y), M.fmap(mult_power_map(M, Y, k - 1)))
        cache[key] = hit
    return hit


def cobar_map(M: TableMonad, f: OrdMap, X) -> FinMap:
    """phi(f)_X: T^p(X) -> T^q(X) as a finite map, memoized per monad."""
    X = tuple(range(X)) if isinstance(X, int) else tuple(X)
    cache = M.__dict__.setdefault("_cobar_cache", {})
    key = (f, X)
    hit = cache.get(key)
    if hit is not None:
        return hit
    top = max(f.dom, f.cod)
    ensure_budget_power(M, len(X), top, f"T^{top}({len(X)}) for a cobar map")
    p, q = f.dom, f.cod
    if q == 0:
        hit = FinMap.identity(X)
    else:
        k0 = sum(1 for v in f.values if v == 0)
        rest = OrdMap(p - k0, q - 1, tuple(v - 1 for v in f.values[k0:]))
        inner = cobar_map(M, rest, X)
        # interchange law: pick the order whose middle object is smallest
        if k0 == 0:
            hit = compose(M.unit(inner.cod), inner)
        else:
            hit = compose(M.fmap(inner), mult_power_map(M, inner.dom, k0))
    cache[key] = hit
    return hit


def cobar_apply(M: TableMonad, f: OrdMap, X, t):
    """phi(f)_X applied to one element t of T^p(X)."""
    return cobar_map(M, f, X)(t)


def coface(n: int, i: int) -> OrdMap:
    """delta^i: [n-1] -> [n], skipping i (cardinality n to n+1)."""
    return OrdMap(n, n + 1, tuple(v if v < i else v + 1 for v in range(n)))


def codegeneracy(n: int, j: int) -> OrdMap:
    """sigma^j: [n+1] -> [n], hitting j twice (cardinality n+2 to n+1)."""
    return OrdMap(n + 2, n + 1, tuple(v if v <= j else v - 1 for v in range(n + 2)))


@dataclass
class CobarTable:
    monad: str
    X: tuple
    levels: int
    objects: dict = field(default_factory=dict)  # level k -> T^(k+1)(X)
    generators: dict = field(default_factory=dict)  # label -> FinMap
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def cobar(M: TableMonad, levels: int, X, cap: int = 5) -> CobarTable:
    """Tabulate the cobar object on X for [-1]..[levels] and verify functoriality.

    Functoriality is checked on every composable pair of monotone maps between
    cardinalities 0..levels+1, elementwise.
    """
    X = tuple(range(X)) if isinstance(X, int) else tuple(X)
    top = levels + 1
    ensure_budget_power(M, len(X), top, f"T^{top}({len(X)}) for the cobar table")
    table = CobarTable(M.name, X, levels)
    for k in range(-1, levels + 1):
        table.objects[k] = M.power(X, k + 1)
    for n in range(0, top):
        for i in range(n + 1):
            table.generators[f"d{i}:{n}>{n + 1}"] = cobar_map(M, coface(n, i), X)
    for n in range(0, top - 1):
        for j in range(n + 1):
            table.generators[f"s{j}:{n + 2}>{n + 1}"] = cobar_map(M, codegeneracy(n, j), X)
    maps = {}
    for a in range(top + 1):
        for b in range(top + 1):
            for f in monotone_maps(a, b):
                maps[f] = cobar_map(M, f, X)
    check_budget(len(maps) ** 2, "composable pairs in the cobar table")
    for f, Ff in maps.items():
        for g, Fg in maps.items():
            if g.dom != f.cod:
                continue
            lhs = maps[ord_compose(g, f)]
            rhs = compose(Fg, Ff)
            table.checked += 1
            if lhs != rhs:
                bad = next(t for t in Ff.dom if lhs(t) != rhs(t))
                if len(table.violations) < cap:
                    table.violations.append(f"phi({g.label()} . {f.label()}) differs at {bad!r}")
    return table
