"""Derived finite categories and universal-property searches."""

from __future__ import annotations

import itertools
import json

from ..util import jname
from .category import CategoryError, FinCategory, FinFunctor, Report


def comma_under(C: FinCategory, D, c: str) -> tuple[FinCategory, FinFunctor]:
    """The category D_{c/} of arrows c -> d with d in D, and its projection to C."""
    if c not in C.objects:
        raise CategoryError(f"object {c} not in category")
    D = sorted(set(D))
    objects = [u for d in D for u in C.hom(c, d)]
    morphisms, ends = [], {}
    for u in objects:
        for u2 in objects:
            for g in C.hom(C.tgt(u), C.tgt(u2)):
                if C.compose(g, u) == u2:
                    name = jname(u, g)
                    morphisms.append((name, u, u2))
                    ends[name] = (u, g)
    identity = {u: jname(u, C.id(C.tgt(u))) for u in objects}

    def comp(h2, h1):
        u, g1 = ends[h1]
        _, g2 = ends[h2]
        return jname(u, C.compose(g2, g1))

    comma = FinCategory.build(objects, morphisms, comp, identity, f"{C.name}_{c}/")
    proj = FinFunctor(comma, C, {u: C.tgt(u) for u in objects},
                      {m: ends[m][1] for m in ends}, "proj")
    return comma, proj


def twisted_arrow(C: FinCategory) -> tuple[FinCategory, FinFunctor, FinFunctor]:
    """Tw(C) with projections p to C and q to C^op.

    A morphism alpha -> alpha' is a pair (g0, g1) with alpha = g1 . alpha' . g0.
    """
    objects = list(C.morphism_ids)
    morphisms, parts = [], {}
    for a in objects:
        sa, ta = C.src(a), C.tgt(a)
        for a2 in objects:
            sa2, ta2 = C.src(a2), C.tgt(a2)
            for g0 in C.hom(sa, sa2):
                mid = C.compose(a2, g0)
                for g1 in C.hom(ta2, ta):
                    if C.compose(g1, mid) == a:
                        name = jname(a, a2, g0, g1)
                        morphisms.append((name, a, a2))
                        parts[name] = (a, a2, g0, g1)
    identity = {a: jname(a, a, C.id(C.src(a)), C.id(C.tgt(a))) for a in objects}

    def comp(h2, h1):
        a, _, g0, g1 = parts[h1]
        _, a3, d0, d1 = parts[h2]
        return jname(a, a3, C.compose(d0, g0), C.compose(g1, d1))

    tw = FinCategory.build(objects, morphisms, comp, identity, f"Tw({C.name})")
    p = FinFunctor(tw, C, {a: C.src(a) for a in objects}, {m: v[2] for m, v in parts.items()}, "p")
    q = FinFunctor(tw, C.opposite(), {a: C.tgt(a) for a in objects},
                   {m: v[3] for m, v in parts.items()}, "q")
    return tw, p, q


def slice_over(C: FinCategory, c: str) -> FinCategory:
    """C_{/c}: arrows into c, with morphisms g: alpha -> alpha' where alpha' . g = alpha."""
    objects = list(C.morphisms_to(c))
    morphisms, parts = [], {}
    for a in objects:
        for a2 in objects:
            for g in C.hom(C.src(a), C.src(a2)):
                if C.compose(a2, g) == a:
                    name = jname(a, a2, g)
                    morphisms.append((name, a, a2))
                    parts[name] = (a, a2, g)
    identity = {a: jname(a, a, C.id(C.src(a))) for a in objects}

    def comp(h2, h1):
        a, _, g = parts[h1]
        _, a3, g2 = parts[h2]
        return jname(a, a3, C.compose(g2, g))

    return FinCategory.build(objects, morphisms, comp, identity, f"{C.name}/{c}")


def over_fiber(C: FinCategory, c: str, tw=None) -> tuple[FinCategory, FinFunctor]:
    """C_{|c}: the fiber of q: Tw(C) -> C^op over c, with the comparison from C_{/c}.

    The fiber keeps the morphisms of Tw(C) whose second component is id_c.
    """
    if c not in C.objects:
        raise CategoryError(f"object {c} not in category")
    tw, _, q = tw if tw is not None else twisted_arrow(C)
    keep_obj = [a for a in tw.objects if C.tgt(a) == c]
    idc = C.id(c)
    keep_mor = [(m, s, t) for m, s, t in tw.morphisms
                if s in keep_obj and t in keep_obj and q(m) == idc]
    ids = {m for m, _, _ in keep_mor}
    table = {k: v for k, v in tw.compose_table.items() if k[0] in ids and k[1] in ids}
    fiber = FinCategory(keep_obj, keep_mor, {a: tw.id(a) for a in keep_obj}, table, f"{C.name}|{c}")
    sl = slice_over(C, c)
    mor_map = {}
    for m, a, a2 in sl.morphisms:
        g = json.loads(m)[2]
        mor_map[m] = jname(a, a2, g, idc)
    comparison = FinFunctor(sl, fiber, {a: a for a in sl.objects}, mor_map, "compare")
    return fiber, comparison


def initial_object(C: FinCategory):
    for x in C.objects:
        if all(len(C.hom(x, y)) == 1 for y in C.objects):
            return x
    return None


def terminal_object(C: FinCategory):
    for x in C.objects:
        if all(len(C.hom(y, x)) == 1 for y in C.objects):
            return x
    return None


def connected_components(C: FinCategory) -> list[list[str]]:
    parent = {x: x for x in C.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, s, t in C.morphisms:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    groups: dict[str, list[str]] = {}
    for x in C.objects:
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def comma_functor_over(F: FinFunctor, d: str) -> FinCategory:
    """(F | d): objects (j, u: F(j) -> d); morphisms m: j -> j' with u' . F(m) = u."""
    J, K = F.domain, F.codomain
    objects, ends = [], {}
    for j in J.objects:
        for u in K.hom(F.on_obj(j), d):
            name = jname(j, u)
            objects.append(name)
            ends[name] = (j, u)
    morphisms, parts = [], {}
    for o1 in objects:
        j1, u1 = ends[o1]
        for o2 in objects:
            j2, u2 = ends[o2]
            for m in J.hom(j1, j2):
                if K.compose(u2, F(m)) == u1:
                    name = jname(o1, o2, m)
                    morphisms.append((name, o1, o2))
                    parts[name] = (o1, o2, m)
    identity = {o: jname(o, o, J.id(ends[o][0])) for o in objects}

    def comp(h2, h1):
        o1, _, m1 = parts[h1]
        _, o3, m2 = parts[h2]
        return jname(o1, o3, J.compose(m2, m1))

    return FinCategory.build(objects, morphisms, comp, identity, f"({F.name}|{d})")


def is_initial_functor(F: FinFunctor) -> Report:
    """1-categorical initiality: every comma (F | d) is nonempty and connected."""
    rows, problems = [], []
    for d in F.codomain.objects:
        comma = comma_functor_over(F, d)
        comps = connected_components(comma)
        rows.append({"object": d, "comma_objects": len(comma.objects), "components": len(comps)})
        if len(comps) != 1:
            problems.append(f"comma over {d} has {len(comps)} components")
    return Report(not problems, problems, {"rows": rows, "verdict": "1-initial" if not problems else "not initial"})


def _cones(diagram: FinFunctor, apex: str):
    J, C = diagram.domain, diagram.codomain
    objs = J.objects
    choices = [C.hom(apex, diagram.on_obj(j)) for j in objs]
    for combo in itertools.product(*choices):
        legs = dict(zip(objs, combo))
        if all(C.compose(diagram(m), legs[J.src(m)]) == legs[J.tgt(m)] for m in J.morphism_ids):
            yield legs


def limit_in_finite_category(diagram: FinFunctor):
    """Exhaustive search for a limiting cone; returns (apex, legs) or None."""
    J, C = diagram.domain, diagram.codomain
    all_cones = [(x, legs) for x in C.objects for legs in _cones(diagram, x)]
    for x, legs in all_cones:
        if is_limit_cone(diagram, x, legs, all_cones):
            return x, legs
    return None


def is_limit_cone(diagram: FinFunctor, x: str, legs: dict, all_cones=None) -> bool:
    J, C = diagram.domain, diagram.codomain
    if all_cones is None:
        all_cones = [(y, lg) for y in C.objects for lg in _cones(diagram, y)]
    for y, other in all_cones:
        mediators = [h for h in C.hom(y, x)
                     if all(C.compose(legs[j], h) == other[j] for j in J.objects)]
        if len(mediators) != 1:
            return False
    return True
