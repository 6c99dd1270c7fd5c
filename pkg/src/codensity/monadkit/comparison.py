"""Comparisons between a monad, its Fakir completion and codensity monads."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..util import FinMap, FunctionalCSP, ResourceLimitError, check_budget, skeleton
from .algebras import algebra_search
from .fakir import FakirFunctor
from .laws import window_maps
from .monad import TableMonad


@dataclass
class LadderRung:
    bound: int
    D: list
    size: int | None = None
    matches_fakir: bool | None = None
    note: str = ""


@dataclass
class FakirCodensityReport:
    monad: str
    c: int
    fakir_size: int = 0
    rungs: list = field(default_factory=list)
    stabilized_at: int | None = None
    stable_matches: bool = False
    resource: str = ""

    @property
    def ok(self) -> bool:
        return not self.resource and self.stabilized_at is not None and self.stable_matches

    def summary(self) -> dict:
        return {"monad": self.monad, "c": self.c, "fakir_size": self.fakir_size,
                "rungs": [{"n": r.bound, "D": r.D, "size": r.size, "matches": r.matches_fakir, "note": r.note}
                          for r in self.rungs],
                "stabilized_at": self.stabilized_at, "stable_matches": self.stable_matches,
                "resource": self.resource}


def algebra_sizes(M: TableMonad, bound: int) -> list[int]:
    return [n for n in range(bound + 1) if algebra_search(M, n, limit=1)]


def fakir_vs_codensity(M: TableMonad, c: int, ladder) -> FakirCodensityReport:
    """Compare T_{A(M) restricted to sizes <= n}(c) with M-hat(c) along the ladder.

    A rung matches when the two sides have a bijection compatible with the
    units out of c.  The stabilization rung is the first from which every
    later rung has the same size and match status.
    """
    from ..fincat.concrete import FinSetCategory
    from ..kan.codensity import codensity_value, unit_compatible_bijections
    X = skeleton(c)
    rep = FakirCodensityReport(M.name, c)
    F = FakirFunctor(M)
    hat = F.obj(X)
    rep.fakir_size = len(hat)
    hat_unit = FinMap(X, hat, tuple(M.unit_elem(X, x) for x in X))
    amb = FinSetCategory()
    cache: dict = {}
    for n in sorted(set(ladder)):
        try:
            D = algebra_sizes(M, n)
            val = codensity_value(amb, D, c, cache)
        except ResourceLimitError as exc:
            rep.rungs.append(LadderRung(n, [], note=str(exc)))
            rep.resource = str(exc)
            break
        match = bool(unit_compatible_bijections(val.unit(), hat_unit, limit=1))
        rep.rungs.append(LadderRung(n, D, len(val), match))
    if rep.resource:
        return rep
    last = rep.rungs[-1]
    k = len(rep.rungs) - 1
    while k > 0 and (rep.rungs[k - 1].size, rep.rungs[k - 1].matches_fakir) == (last.size, last.matches_fakir):
        k -= 1
    rep.stabilized_at = rep.rungs[k].bound
    rep.stable_matches = bool(last.matches_fakir)
    return rep


@dataclass
class IdentityMorphismReport:
    monad: str
    window: list
    natural: int = 0  # natural transformations Id => M on the window
    morphisms: list = field(default_factory=list)  # the ones satisfying both axioms
    is_unit: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return len(self.morphisms) == 1 and all(self.is_unit)


def monad_morphisms_from_identity(M: TableMonad, window=range(0, 4)) -> IdentityMorphismReport:
    """Every natural lambda: Id => M on the window that is a monad morphism.

    Axioms: lambda . eta_Id = eta_M, i.e. lambda = eta; and
    mu . M(lambda) . lambda = lambda (the identity monad's multiplication is id).
    """
    sizes = sorted(set(window))
    rep = IdentityMorphismReport(M.name, sizes)
    variables, index, domains = [], {}, []
    for n in sizes:
        TX = M.obj(skeleton(n))
        for x in range(n):
            index[(n, x)] = len(variables)
            variables.append((n, x))
            domains.append(TX)
    csp = FunctionalCSP(domains)
    for h in window_maps(sizes):
        Th = M.fmap(h)
        n, m = len(h.dom), len(h.cod)
        for x in h.dom:
            csp.add_edge(index[(n, x)], index[(m, h(x))], Th)
    check_budget(csp.candidate_bound(), "candidate transformations Id => M")
    for sol in csp.solutions():
        rep.natural += 1
        lam = {n: FinMap(skeleton(n), M.obj(skeleton(n)), tuple(sol[index[(n, x)]] for x in range(n)))
               for n in sizes}
        ok = True
        for n in sizes:
            X = skeleton(n)
            eta = M.unit(X)
            for x in X:
                if lam[n](x) != eta(x):
                    ok = False
                # M(lambda_X)(lambda_X(x)) lies in M^2(X)
                if M.mult_elem(X, M.apply(lam[n], lam[n](x))) != lam[n](x):
                    ok = False
        if ok:
            rep.morphisms.append(lam)
            rep.is_unit.append(all(lam[n] == M.unit(skeleton(n)) for n in sizes))
    return rep
