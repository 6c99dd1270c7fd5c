"""The walking action: max-preserving maps acting on an algebra through the cobar object.

For an algebra (x, a), a max-preserving g from cardinality k to l, written
g = f * amax(n), acts as psi(g) = phi(f)_x . T^p(a^n): T^(k-1)(x) -> T^(l-1)(x),
where p = dom f, a^0 = id and a^(n+1) = a . T(a^n).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fincat.ordinals import max_canonical_form, monotone_maps, ord_compose, ord_id
from ..util import FinMap, ResourceLimitError, compose
from .algebras import AlgebraStructure
from .cobar import cobar_map
from .monad import TableMonad, ensure_budget_power


class LevelOverflow(ValueError):
    pass


def action_power(M: TableMonad, alg: AlgebraStructure, n: int) -> FinMap:
    """a^n: T^n(x) -> x."""
    x, a = alg.carrier, alg.structure
    out = FinMap.identity(x)
    for _ in range(n):
        out = compose(a, M.fmap(out))
    return out


def walking_action(M: TableMonad, alg: AlgebraStructure, g, max_level: int | None = None) -> FinMap:
    """psi(g) for a max-preserving OrdMap g, or for a pair (f, n) meaning f * amax(n)."""
    if isinstance(g, tuple):
        f, n = g
    else:
        f, n = max_canonical_form(g)
    p = f.dom
    top = max(p + n, f.cod)
    if max_level is not None and top > max_level:
        raise LevelOverflow(f"psi needs T^{top}, above the level bound {max_level}")
    x = alg.carrier
    ensure_budget_power(M, len(x), top, f"T^{top}({len(x)}) for the walking action")
    lifted = M.power_map(action_power(M, alg, n), p)
    return compose(cobar_map(M, f, x), lifted)


@dataclass
class WalkingReport:
    monad: str
    carrier_size: int
    max_card: int
    pairs: int = 0
    identities: int = 0
    violations: list = field(default_factory=list)
    skipped: list = field(default_factory=list)  # (label, reason) beyond the guard

    @property
    def complete(self) -> bool:
        return not self.skipped

    @property
    def ok(self) -> bool:
        return self.complete and not self.violations

    @property
    def status(self) -> str:
        if self.violations:
            return "fail"
        return "pass" if self.complete else "resource"


def walking_functoriality(M: TableMonad, alg: AlgebraStructure, max_card: int = 4, cap: int = 5) -> WalkingReport:
    """psi(id) = id and psi(g2 . g1) = psi(g2) . psi(g1) on max-preserving maps
    between cardinalities 1..max_card; pairs beyond the resource guard are listed."""
    rep = WalkingReport(M.name, len(alg.carrier), max_card)
    cards = range(1, max_card + 1)
    maps: dict = {}
    failed: dict = {}
    for k in cards:
        for l in cards:
            for g in monotone_maps(k, l):
                if not g.is_max_preserving():
                    continue
                try:
                    maps[g] = walking_action(M, alg, g)
                except ResourceLimitError as exc:
                    failed[g] = str(exc)
    for k in cards:
        g = ord_id(k)
        if g in maps:
            rep.identities += 1
            if maps[g] != FinMap.identity(maps[g].dom):
                rep.violations.append(f"psi(id_{k}) is not the identity")
    every = list(maps) + list(failed)
    for g1 in every:
        for g2 in every:
            if g2.dom != g1.cod:
                continue
            h = ord_compose(g2, g1)
            if g1 in failed or g2 in failed or h in failed:
                rep.skipped.append((f"{g2.label()} . {g1.label()}", failed.get(g1) or failed.get(g2) or failed[h]))
                continue
            rep.pairs += 1
            if maps[h] != compose(maps[g2], maps[g1]):
                if len(rep.violations) < cap:
                    rep.violations.append(f"psi({g2.label()} . {g1.label()}) != psi({g2.label()}) . psi({g1.label()})")
    return rep


def chain_lattice_algebra(M: TableMonad, n: int) -> AlgebraStructure:
    """The n-element chain 0 < 1 < ... < n-1 as a powerset algebra: a(S) = max(S), a(empty) = 0."""
    x = tuple(range(n))
    TX = M.obj(x)
    return AlgebraStructure(x, FinMap(TX, x, tuple(max(S) if S else 0 for S in TX)))


__all__ = ["walking_action", "walking_functoriality", "action_power", "chain_lattice_algebra",
           "WalkingReport", "LevelOverflow"]
