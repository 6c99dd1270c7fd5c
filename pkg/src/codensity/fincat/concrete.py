"""Concrete categories: objects with finite underlying sets, morphisms realized as functions."""

from __future__ import annotations

import itertools
from typing import Hashable, Sequence

from ..util import FinMap, all_maps, check_budget, compose, finset, skeleton
from .category import FinCategory, Report


class ConcreteCategory:
    """Interface used by the codensity engine.

    Objects are arbitrary hashables; ``hom`` enumerates morphisms, ``realize``
    turns a morphism into a FinMap between underlying sets.
    """

    name = "concrete"

    def underlying(self, x) -> tuple:
        raise NotImplementedError

    def hom(self, x, y) -> list:
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def realize(self, m) -> FinMap:
        raise NotImplementedError

    def check_functorial(self, objects: Sequence) -> Report:
        problems = []
        for x in objects:
            if self.realize(self.identity(x)) != FinMap.identity(self.underlying(x)):
                problems.append(f"identity of {x!r} not realized as identity")
        for x, y, z in itertools.product(objects, repeat=3):
            for f in self.hom(x, y):
                for g in self.hom(y, z):
                    if self.realize(self.compose(g, f)) != compose(self.realize(g), self.realize(f)):
                        problems.append(f"composite {g!r}.{f!r} not realized correctly")
        return Report(not problems, problems)


class FinSetCategory(ConcreteCategory):
    """Finite sets and all functions.  An int n stands for {0..n-1}; a tuple is a set."""

    name = "FinSet"

    def underlying(self, x) -> tuple:
        if isinstance(x, int):
            return skeleton(x)
        return tuple(x)

    def hom(self, x, y) -> list:
        return list(all_maps(self.underlying(x), self.underlying(y)))

    def compose(self, g: FinMap, f: FinMap) -> FinMap:
        return compose(g, f)

    def identity(self, x) -> FinMap:
        return FinMap.identity(self.underlying(x))

    def realize(self, m: FinMap) -> FinMap:
        return m


class FinVectF2(ConcreteCategory):
    """Finite-dimensional F2-vector spaces F2^k; morphisms are linear maps as FinMaps."""

    name = "FinVect(F2)"

    def underlying(self, k: int) -> tuple:
        return tuple(itertools.product((0, 1), repeat=k))

    def hom(self, k: int, l: int) -> list:
        check_budget(2 ** (k * l), f"linear maps F2^{k} -> F2^{l}")
        vecs = self.underlying(k)
        out = []
        for cols in itertools.product(self.underlying(l), repeat=k):
            vals = tuple(tuple(sum(v[i] * cols[i][r] for i in range(k)) % 2 for r in range(l)) for v in vecs)
            out.append(FinMap(vecs, self.underlying(l), vals))
        return sorted(set(out), key=FinMap.sort_key)

    def compose(self, g: FinMap, f: FinMap) -> FinMap:
        return compose(g, f)

    def identity(self, k: int) -> FinMap:
        return FinMap.identity(self.underlying(k))

    def realize(self, m: FinMap) -> FinMap:
        return m


class TableConcreteCategory(ConcreteCategory):
    """A FinCategory with declared underlying sets and realizations."""

    def __init__(self, base: FinCategory, underlying: dict, realize: dict, faithful: bool = True):
        self.base = base
        self._underlying = {x: finset(v) if not isinstance(v, tuple) else v for x, v in underlying.items()}
        self._realize = {}
        for m, table in realize.items():
            s, t = base.src(m), base.tgt(m)
            dom = self._underlying[s]
            if isinstance(table, dict):
                vals = tuple(table[_key(e, table)] for e in dom)
            else:
                vals = tuple(table)
            self._realize[m] = FinMap(dom, self._underlying[t], vals)
        self.faithful = faithful
        self.name = base.name or "table"

    def underlying(self, x) -> tuple:
        return self._underlying[x]

    def hom(self, x, y) -> list:
        return self.base.hom(x, y)

    def compose(self, g, f):
        return self.base.compose(g, f)

    def identity(self, x):
        return self.base.id(x)

    def realize(self, m) -> FinMap:
        return self._realize[m]

    def validate(self) -> Report:
        rep = self.check_functorial(self.base.objects)
        problems = list(rep.problems)
        for m in self.base.morphism_ids:
            if not self._realize[m].well_typed():
                problems.append(f"realization of {m} leaves its codomain")
        if self.faithful:
            seen = {}
            for m, s, t in self.base.morphisms:
                key = (s, t, self._realize[m].values)
                if key in seen:
                    problems.append(f"{m} and {seen[key]} realize equally but category declared faithful")
                seen[key] = m
        return Report(not problems, problems)


def _key(e: Hashable, table: dict):
    if e in table:
        return e
    return str(e)


def finset_window_category(sizes: Sequence[int]) -> FinCategory:
    """FinSet restricted to skeletal sets of the given sizes, as a FinCategory."""
    objects = [f"{n}" for n in sizes]
    morphisms, maps = [], {}
    for n in sizes:
        for m in sizes:
            for f in all_maps(skeleton(n), skeleton(m)):
                name = f"{n}>{m}:" + ",".join(map(str, f.values))
                morphisms.append((name, f"{n}", f"{m}"))
                maps[name] = f
    back = {(len(f.dom), len(f.cod), f.values): k for k, f in maps.items()}
    identity = {f"{n}": f"{n}>{n}:" + ",".join(map(str, range(n))) for n in sizes}

    def comp(g, f):
        h = compose(maps[g], maps[f])
        return back[(len(h.dom), len(h.cod), h.values)]

    return FinCategory.build(objects, morphisms, comp, identity, f"FinSet{list(sizes)}")
