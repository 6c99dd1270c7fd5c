"""Finite categories given by explicit composition tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..util import jname


class CategoryError(ValueError):
    pass


@dataclass
class Report:
    ok: bool
    problems: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


class FinCategory:
    """Objects, morphisms (id, src, tgt), identities and a composition table.

    ``compose_table[(g, f)]`` is g∘f, defined when tgt(f) == src(g).
    Identifiers are strings; enumeration order is lexicographic.
    """

    def __init__(self, objects: Iterable[str], morphisms: Iterable[tuple[str, str, str]],
                 identity: dict[str, str], compose_table: dict[tuple[str, str], str],
                 name: str = ""):
        self.objects = tuple(sorted(objects))
        self.morphisms = tuple(sorted(morphisms))
        self.identity = dict(identity)
        self.compose_table = dict(compose_table)
        self.name = name
        self._ends = {m: (s, t) for m, s, t in self.morphisms}
        self._hom: dict[tuple[str, str], list[str]] = {}
        for m, s, t in self.morphisms:
            self._hom.setdefault((s, t), []).append(m)
        self._from = None
        self._to = None

    def __repr__(self):
        return f"FinCategory({self.name or '?'}: {len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    @property
    def morphism_ids(self) -> tuple[str, ...]:
        return tuple(m for m, _, _ in self.morphisms)

    def src(self, m: str) -> str:
        return self._ends[m][0]

    def tgt(self, m: str) -> str:
        return self._ends[m][1]

    def hom(self, x: str, y: str) -> list[str]:
        return self._hom.get((x, y), [])

    def id(self, x: str) -> str:
        return self.identity[x]

    def compose(self, g: str, f: str) -> str:
        """g∘f."""
        try:
            return self.compose_table[(g, f)]
        except KeyError:
            raise CategoryError(f"{g} and {f} are not composable") from None

    def composable_pairs(self):
        for f in self.morphism_ids:
            for g in self.morphisms_from(self.tgt(f)):
                yield g, f

    def morphisms_from(self, x: str) -> list[str]:
        if self._from is None:
            self._from, self._to = {}, {}
            for m, s, t in self.morphisms:
                self._from.setdefault(s, []).append(m)
                self._to.setdefault(t, []).append(m)
        return self._from.get(x, [])

    def morphisms_to(self, y: str) -> list[str]:
        self.morphisms_from(y)
        return self._to.get(y, [])

    def is_iso(self, m: str) -> bool:
        s, t = self._ends[m]
        return any(self.compose(g, m) == self.id(s) and self.compose(m, g) == self.id(t)
                   for g in self.hom(t, s))

    # ---- constructions -------------------------------------------------

    @staticmethod
    def build(objects, morphisms, compose_fn: Callable[[str, str], str], identity: dict,
              name: str = "") -> "FinCategory":
        by_src: dict[str, list[str]] = {}
        for m, s, _ in morphisms:
            by_src.setdefault(s, []).append(m)
        table = {}
        for f, _, tf in morphisms:
            for g in by_src.get(tf, ()):
                table[(g, f)] = compose_fn(g, f)
        return FinCategory(objects, morphisms, identity, table, name)

    @staticmethod
    def from_poset(elements: Sequence[str], leq: Callable[[str, str], bool], name: str = "") -> "FinCategory":
        elements = list(elements)
        morphisms = [(f"{a}<={b}", a, b) for a in elements for b in elements if leq(a, b)]
        ends = {m: (s, t) for m, s, t in morphisms}
        identity = {a: f"{a}<={a}" for a in elements}
        return FinCategory.build(elements, morphisms,
                                 lambda g, f: f"{ends[f][0]}<={ends[g][1]}", identity, name)

    @staticmethod
    def chain(elements: Sequence[str], name: str = "") -> "FinCategory":
        pos = {e: i for i, e in enumerate(elements)}
        return FinCategory.from_poset(elements, lambda a, b: pos[a] <= pos[b], name)

    @staticmethod
    def from_group(elements: Sequence, mult: Callable, unit, obj: str = "*", name: str = "") -> "FinCategory":
        ids = {g: f"g{g}" for g in elements}
        back = {v: k for k, v in ids.items()}
        morphisms = [(ids[g], obj, obj) for g in elements]
        return FinCategory.build([obj], morphisms, lambda g, f: ids[mult(back[g], back[f])],
                                 {obj: ids[unit]}, name)

    @staticmethod
    def discrete(objects: Sequence[str], name: str = "") -> "FinCategory":
        return FinCategory.from_poset(objects, lambda a, b: a == b, name)

    @staticmethod
    def terminal(name: str = "1") -> "FinCategory":
        return FinCategory.discrete(["*"], name)

    @staticmethod
    def empty() -> "FinCategory":
        return FinCategory([], [], {}, {}, "0")

    def opposite(self) -> "FinCategory":
        morphisms = [(m, t, s) for m, s, t in self.morphisms]
        table = {(f, g): h for (g, f), h in self.compose_table.items()}
        return FinCategory(self.objects, morphisms, self.identity, table, f"{self.name}^op")

    def full_subcategory(self, objs: Iterable[str]) -> "FinCategory":
        keep = set(objs)
        missing = keep - set(self.objects)
        if missing:
            raise CategoryError(f"unknown objects {sorted(missing)}")
        morphisms = [(m, s, t) for m, s, t in self.morphisms if s in keep and t in keep]
        ids = {m for m, _, _ in morphisms}
        table = {k: v for k, v in self.compose_table.items() if k[0] in ids and k[1] in ids}
        return FinCategory(keep, morphisms, {x: self.identity[x] for x in keep}, table,
                           f"{self.name}|{','.join(sorted(keep))}")

    def product(self, other: "FinCategory") -> "FinCategory":
        objects = [jname(a, b) for a in self.objects for b in other.objects]
        morphisms = [(jname(f, g), jname(sf, sg), jname(tf, tg))
                     for f, sf, tf in self.morphisms for g, sg, tg in other.morphisms]
        identity = {jname(a, b): jname(self.id(a), other.id(b)) for a in self.objects for b in other.objects}
        table = {}
        for (g1, f1), h1 in self.compose_table.items():
            for (g2, f2), h2 in other.compose_table.items():
                table[(jname(g1, g2), jname(f1, f2))] = jname(h1, h2)
        return FinCategory(objects, morphisms, identity, table, f"{self.name}x{other.name}")

    # ---- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "objects": list(self.objects),
            "morphisms": [{"id": m, "src": s, "tgt": t} for m, s, t in self.morphisms],
            "identity": {x: self.identity[x] for x in self.objects},
            "compose": sorted([g, f, h] for (g, f), h in self.compose_table.items()),
        }

    @staticmethod
    def from_dict(d: dict) -> "FinCategory":
        morphisms = [(m["id"], m["src"], m["tgt"]) for m in d["morphisms"]]
        identity = d.get("identity")
        table = {(g, f): h for g, f, h in d["compose"]}
        if identity is None:
            identity = {}
            for x in d["objects"]:
                for m, s, t in morphisms:
                    if s == x and t == x and all(
                            table.get((m, f)) == f for f, _, tf in morphisms if tf == x) and all(
                            table.get((g, m)) == g for g, sg, _ in morphisms if sg == x):
                        identity[x] = m
                        break
        return FinCategory(d["objects"], morphisms, identity, table, d.get("name", ""))


def validate_category(c: FinCategory) -> Report:
    problems = []
    ids = set(c.morphism_ids)
    if len(ids) != len(c.morphisms):
        problems.append("duplicate morphism identifiers")
    objs = set(c.objects)
    for m, s, t in c.morphisms:
        if s not in objs or t not in objs:
            problems.append(f"morphism {m} has unknown endpoint")
    for x in c.objects:
        i = c.identity.get(x)
        if i is None or i not in ids or c.src(i) != x or c.tgt(i) != x:
            problems.append(f"identity of {x} missing or ill-typed")
    if problems:
        return Report(False, problems)
    for (g, f), h in c.compose_table.items():
        if g not in ids or f not in ids or h not in ids:
            problems.append(f"compose entry ({g}, {f}) mentions unknown morphism")
        elif c.src(g) != c.tgt(f):
            problems.append(f"compose entry ({g}, {f}) on non-composable pair")
        elif (c.src(h), c.tgt(h)) != (c.src(f), c.tgt(g)):
            problems.append(f"compose ({g}, {f}) = {h} has wrong endpoints")
    for f in c.morphism_ids:
        for g in c.morphisms_from(c.tgt(f)):
            if (g, f) not in c.compose_table:
                problems.append(f"missing composite ({g}, {f})")
    if problems:
        return Report(False, problems)
    for f in c.morphism_ids:
        s, t = c.src(f), c.tgt(f)
        if c.compose(f, c.id(s)) != f or c.compose(c.id(t), f) != f:
            problems.append(f"identity law fails at {f}")
    for g, f in c.composable_pairs():
        gf = c.compose(g, f)
        for h in c.morphisms_from(c.tgt(g)):
            if c.compose(h, gf) != c.compose(c.compose(h, g), f):
                problems.append(f"associativity fails at ({h}, {g}, {f})")
    return Report(not problems, problems)


class FinFunctor:
    def __init__(self, domain: FinCategory, codomain: FinCategory, obj_map: dict, mor_map: dict,
                 name: str = ""):
        self.domain = domain
        self.codomain = codomain
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        self.name = name

    def __call__(self, m: str) -> str:
        return self.mor_map[m]

    def on_obj(self, x: str) -> str:
        return self.obj_map[x]

    def validate(self) -> Report:
        C, D = self.domain, self.codomain
        problems = []
        for x in C.objects:
            if self.obj_map.get(x) not in D.objects:
                problems.append(f"object {x} not sent to an object")
        for m in C.morphism_ids:
            fm = self.mor_map.get(m)
            if fm is None or fm not in D._ends:
                problems.append(f"morphism {m} not sent to a morphism")
                continue
            if (D.src(fm), D.tgt(fm)) != (self.obj_map.get(C.src(m)), self.obj_map.get(C.tgt(m))):
                problems.append(f"endpoints of {m} not preserved")
        if problems:
            return Report(False, problems)
        for x in C.objects:
            if self.mor_map[C.id(x)] != D.id(self.obj_map[x]):
                problems.append(f"identity of {x} not preserved")
        for g, f in C.composable_pairs():
            if self.mor_map[C.compose(g, f)] != D.compose(self.mor_map[g], self.mor_map[f]):
                problems.append(f"composite ({g}, {f}) not preserved")
        return Report(not problems, problems)

    def then(self, other: "FinFunctor") -> "FinFunctor":
        return FinFunctor(self.domain, other.codomain,
                          {x: other.obj_map[y] for x, y in self.obj_map.items()},
                          {m: other.mor_map[n] for m, n in self.mor_map.items()})

    @staticmethod
    def identity(C: FinCategory) -> "FinFunctor":
        return FinFunctor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphism_ids}, "id")

    @staticmethod
    def inclusion(sub: FinCategory, C: FinCategory) -> "FinFunctor":
        return FinFunctor(sub, C, {x: x for x in sub.objects}, {m: m for m in sub.morphism_ids}, "incl")

    def is_isomorphism(self) -> bool:
        objs = list(self.obj_map.values())
        mors = list(self.mor_map.values())
        return (len(set(objs)) == len(objs) == len(self.codomain.objects)
                and len(set(mors)) == len(mors) == len(self.codomain.morphisms))


class NatTransf:
    def __init__(self, source: FinFunctor, target: FinFunctor, components: dict):
        self.source = source
        self.target = target
        self.components = dict(components)

    def __getitem__(self, x):
        return self.components[x]

    def validate(self) -> Report:
        F, G = self.source, self.target
        C, D = F.domain, F.codomain
        problems = []
        if G.domain.objects != C.objects or G.codomain.objects != D.objects:
            problems.append("source and target functors differ in shape")
            return Report(False, problems)
        for x in C.objects:
            a = self.components.get(x)
            if a is None or a not in D._ends or (D.src(a), D.tgt(a)) != (F.on_obj(x), G.on_obj(x)):
                problems.append(f"component at {x} ill-typed")
        if problems:
            return Report(False, problems)
        for m in C.morphism_ids:
            s, t = C.src(m), C.tgt(m)
            if D.compose(G(m), self.components[s]) != D.compose(self.components[t], F(m)):
                problems.append(f"naturality square fails at {m}")
        return Report(not problems, problems)
