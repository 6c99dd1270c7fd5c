"""Codensity monads of full subcategories, computed as ends of naturality families.

An element of T_D(c) is a family phi assigning to every d in D and every
f: c -> d a point phi_d(f) of d, natural in d.  Families are stored as value
tuples aligned with the variable list [(d, f) for d in D for f in Hom(c, d)].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..fincat.concrete import ConcreteCategory, FinSetCategory
from ..monadkit.monad import CoaugmentedFunctor, TableMonad
from ..util import FinMap, FunctionalCSP, check_budget, compose, skeleton


def _as_object(ambient: ConcreteCategory, x):
    if isinstance(ambient, FinSetCategory) and isinstance(x, int):
        return skeleton(x)
    return x


class CodensityShape:
    """The variable index of the end computing T_D(c)."""

    def __init__(self, ambient: ConcreteCategory, D, c):
        self.ambient = ambient
        self.D = tuple(_as_object(ambient, d) for d in D)
        self.c = _as_object(ambient, c)
        self.homs = [ambient.hom(self.c, d) for d in self.D]
        self.variables = [(i, m) for i, ms in enumerate(self.homs) for m in ms]
        self.index = {v: k for k, v in enumerate(self.variables)}

    def __len__(self):
        return len(self.variables)

    def csp(self, hom_cache: dict | None = None) -> FunctionalCSP:
        A = self.ambient
        csp = FunctionalCSP([A.underlying(self.D[i]) for i, _ in self.variables])
        hom_cache = {} if hom_cache is None else hom_cache
        for i, d in enumerate(self.D):
            for j, d2 in enumerate(self.D):
                key = (d, d2)
                if key not in hom_cache:
                    hom_cache[key] = A.hom(d, d2)
                for g in hom_cache[key]:
                    gr = A.realize(g)
                    if i == j and gr == FinMap.identity(A.underlying(d)):
                        continue
                    for f in self.homs[i]:
                        csp.add_edge(self.index[(i, f)], self.index[(j, A.compose(g, f))], gr)
        return csp

    def evaluation(self, x) -> tuple:
        """The family f |-> f(x) of an element x of c."""
        A = self.ambient
        return tuple(A.realize(m)(x) for _, m in self.variables)


@dataclass
class CodensityValue:
    shape: CodensityShape
    elements: list = field(default_factory=list)
    candidate_bound: int = 0

    @property
    def ambient(self):
        return self.shape.ambient

    @property
    def D(self):
        return self.shape.D

    @property
    def c(self):
        return self.shape.c

    def __len__(self):
        return len(self.elements)

    def component(self, family: tuple, i: int, m):
        return family[self.shape.index[(i, m)]]

    def unit(self) -> FinMap:
        A = self.shape.ambient
        X = A.underlying(self.c)
        return FinMap(X, tuple(self.elements), tuple(self.shape.evaluation(x) for x in X))

    def is_natural(self, family: tuple) -> bool:
        """Independent re-check of every naturality equation."""
        A = self.shape.ambient
        for i, d in enumerate(self.D):
            for j, d2 in enumerate(self.D):
                for g in A.hom(d, d2):
                    gr = A.realize(g)
                    for f in self.shape.homs[i]:
                        if gr(family[self.shape.index[(i, f)]]) != family[self.shape.index[(j, A.compose(g, f))]]:
                            return False
        return True


def codensity_value(ambient: ConcreteCategory, D, c, hom_cache: dict | None = None) -> CodensityValue:
    """All naturality families for T_D(c), in lexicographic order."""
    shape = CodensityShape(ambient, D, c)
    csp = shape.csp(hom_cache)
    bound = csp.candidate_bound()
    check_budget(bound, f"candidate families for T_D(c), |D|={len(shape.D)}")
    elements = list(csp.solutions())
    return CodensityValue(shape, elements, bound)


class CodensityMonad(TableMonad):
    """T_D on finite sets, with unit by evaluation and mu(Phi)_d(f) = Phi_d(ev_f)."""

    def __init__(self, D, window=None):
        super().__init__()
        self.ambient = FinSetCategory()
        self.D = tuple(_as_object(self.ambient, d) for d in D)
        self.window = list(window) if window is not None else None
        self.name = "codensity[" + ",".join(str(len(d)) for d in self.D) + "]"
        self._shapes: dict = {}
        self._hom_cache: dict = {}

    def shape(self, X) -> CodensityShape:
        X = tuple(X)
        sh = self._shapes.get(X)
        if sh is None:
            sh = CodensityShape(self.ambient, self.D, X)
            self._shapes[X] = sh
        return sh

    def _obj(self, X):
        sh = self.shape(X)
        csp = sh.csp(self._hom_cache)
        check_budget(csp.candidate_bound(), f"candidate families for {self.name}({len(X)})")
        return csp.solutions()

    def _apply(self, h: FinMap, phi):
        sx, sy = self.shape(h.dom), self.shape(h.cod)
        return tuple(phi[sx.index[(i, compose(f, h))]] for i, f in sy.variables)

    def _unit(self, X, x):
        return self.shape(X).evaluation(x)

    def _mult(self, X, Phi):
        X = tuple(X)
        TX = self.obj(X)
        sx, stx = self.shape(X), self.shape(TX)
        out = []
        for pos, (i, f) in enumerate(sx.variables):
            ev = FinMap(TX, self.D[i], tuple(phi[pos] for phi in TX))
            out.append(Phi[stx.index[(i, ev)]])
        return tuple(out)


def codensity_monad(D, window=None) -> CodensityMonad:
    return CodensityMonad(D, window)


def d_preserving_check(F: CoaugmentedFunctor, D) -> bool:
    return all(F.unit(d).is_bijective() for d in D)


def terminality_count(F: CoaugmentedFunctor, T: CoaugmentedFunctor, window, maps=None,
                      return_solutions: bool = False):
    """Number of natural lambda: F => T on the window with lambda . eta_F = eta_T."""
    from ..monadkit.laws import window_maps
    sizes = sorted(set(window))
    maps = window_maps(sizes) if maps is None else maps
    variables, index, domains = [], {}, []
    for n in sizes:
        X = skeleton(n)
        TX = T.obj(X)
        for e in F.obj(X):
            index[(n, e)] = len(variables)
            variables.append((n, e))
            domains.append(TX)
    csp = FunctionalCSP(domains)
    for h in maps:
        Th = T.fmap(h)
        n, m = len(h.dom), len(h.cod)
        for e in F.obj(h.dom):
            csp.add_edge(index[(n, e)], index[(m, F.apply(h, e))], Th)
    for n in sizes:
        X = skeleton(n)
        eF, eT = F.unit(X), T.unit(X)
        for x in X:
            csp.fix(index[(n, eF(x))], eT(x))
    check_budget(csp.candidate_bound(), "candidate transformations F => T")
    sols = list(csp.solutions())
    if return_solutions:
        return len(sols), [dict(zip(variables, s)) for s in sols]
    return len(sols)


def retract_witness(ambient: ConcreteCategory, x, D):
    """(d, i, r) with r . i = id_x, searching D in order, or None."""
    x = _as_object(ambient, x)
    idx = ambient.realize(ambient.identity(x))
    for d in D:
        d = _as_object(ambient, d)
        back = ambient.hom(d, x)
        for i in ambient.hom(x, d):
            for r in back:
                if ambient.realize(ambient.compose(r, i)) == idx:
                    return d, i, r
    return None


def retract_closure(ambient: ConcreteCategory, D, window) -> list:
    """Window objects that are retracts of some object of D."""
    return [x for x in window if retract_witness(ambient, x, D) is not None]


def restriction_map(big: CodensityValue, small: CodensityValue) -> FinMap:
    """The comparison T_{D'}(c) -> T_D(c) for D contained in D', forgetting components."""
    pos = {d: k for k, d in enumerate(big.D)}
    picks = [big.shape.index[(pos[small.D[i]], m)] for i, m in small.shape.variables]
    return FinMap(tuple(big.elements), tuple(small.elements),
                  tuple(tuple(phi[p] for p in picks) for phi in big.elements))


def unit_compatible_bijections(left: FinMap, right: FinMap, limit: int | None = None) -> list[FinMap]:
    """Bijections b: cod(left) -> cod(right) with b . left = right (units out of the same set)."""
    A, B = left.cod, right.cod
    if len(A) != len(B):
        return []
    forced: dict = {}
    for x in left.dom:
        a, b = left(x), right(x)
        if forced.setdefault(a, b) != b:
            return []
    if len(set(forced.values())) != len(forced):
        return []
    free_a = [a for a in A if a not in forced]
    free_b = [b for b in B if b not in set(forced.values())]
    check_budget(_factorial(len(free_a)), "candidate bijections")
    out = []
    for perm in itertools.permutations(free_b):
        table = dict(forced)
        table.update(zip(free_a, perm))
        out.append(FinMap(A, B, tuple(table[a] for a in A)))
        if limit is not None and len(out) >= limit:
            break
    return out


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out
