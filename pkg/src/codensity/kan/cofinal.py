"""Witness checking for the sufficient condition for left cofinality.

Data: F: C -> D, endofunctors Phi of C and Psi of D, an object c0, and
transformations Const(c0) => Phi <= Id (sigma, xi) and Const(F c0) => Psi <= Id
(tau, zeta).  Phi and Psi may be defined on full subcategories C' of C and D'
of D only (windowed data); the squares are then checked where defined.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fincat.category import FinCategory, FinFunctor, Report
from ..fincat.constructions import is_initial_functor
from ..fincat.ordinals import OrdMap, delta, obj_card, obj_name
from ..util import FinMap, all_maps, compose


class WitnessError(ValueError):
    pass


@dataclass
class CofinalityWitness:
    F: FinFunctor
    Phi: FinFunctor
    Psi: FinFunctor
    c0: str
    sigma: dict  # c in dom(Phi) -> morphism c0 -> Phi(c)
    xi: dict  # c -> morphism c -> Phi(c)
    tau: dict  # d in dom(Psi) -> morphism F(c0) -> Psi(d)
    zeta: dict  # d -> morphism d -> Psi(d)
    notes: list = field(default_factory=list)


def cofinality_witness_check(w: CofinalityWitness) -> Report:
    F, Phi, Psi = w.F, w.Phi, w.Psi
    C, D = F.domain, F.codomain
    Cp, Dp = Phi.domain, Psi.domain
    problems = []
    if Phi.codomain.objects != C.objects or Psi.codomain.objects != D.objects:
        raise WitnessError("Phi and Psi must land in the domain and codomain of F")
    if not set(Cp.objects) <= set(C.objects) or not set(Dp.objects) <= set(D.objects):
        raise WitnessError("Phi and Psi must be defined on full subcategories")
    for c in Cp.objects:
        if F.on_obj(c) not in Dp.objects:
            raise WitnessError(f"F({c}) lies outside the domain of Psi")
    for name, fun in (("F", F), ("Phi", Phi), ("Psi", Psi)):
        rep = fun.validate()
        problems += [f"{name}: {p}" for p in rep.problems]
    # (1) F . Phi = Psi . F on the common domain
    for c in Cp.objects:
        if F.on_obj(Phi.on_obj(c)) != Psi.on_obj(F.on_obj(c)):
            problems.append(f"square F.Phi = Psi.F fails on object {c}")
    for m in Cp.morphism_ids:
        if F(Phi(m)) != Psi(F(m)):
            problems.append(f"square F.Phi = Psi.F fails on morphism {m}")
    d0 = F.on_obj(w.c0)
    # (2) transformations are natural and compatible with F
    for label, comps, src_const, fun, cat, dom in (
            ("sigma", w.sigma, w.c0, Phi, C, Cp), ("xi", w.xi, None, Phi, C, Cp),
            ("tau", w.tau, d0, Psi, D, Dp), ("zeta", w.zeta, None, Psi, D, Dp)):
        for x in dom.objects:
            a = comps.get(x)
            want_src = src_const if src_const is not None else x
            if a is None or (cat.src(a), cat.tgt(a)) != (want_src, fun.on_obj(x)):
                problems.append(f"{label} component at {x} ill-typed")
        if any(p.startswith(label) for p in problems):
            continue
        for m in dom.morphism_ids:
            s, t = dom.src(m), dom.tgt(m)
            lhs = cat.compose(fun(m), comps[s])
            rhs = comps[t] if src_const is not None else cat.compose(comps[t], m)
            if lhs != rhs:
                problems.append(f"{label} not natural at {m}")
    for c in Cp.objects:
        if w.sigma.get(c) and w.tau.get(F.on_obj(c)) and F(w.sigma[c]) != w.tau[F.on_obj(c)]:
            problems.append(f"F(sigma_{c}) != tau_F({c})")
        if w.xi.get(c) and w.zeta.get(F.on_obj(c)) and F(w.xi[c]) != w.zeta[F.on_obj(c)]:
            problems.append(f"F(xi_{c}) != zeta_F({c})")
    # (3) every zeta_d is left invertible
    for d in Dp.objects:
        z = w.zeta.get(d)
        if z is None:
            continue
        if not any(D.compose(r, z) == D.id(d) for r in D.hom(D.tgt(z), d)):
            problems.append(f"zeta at {d} is not left invertible")
    conclusion = is_initial_functor(F)
    data = {"hypotheses": not problems, "conclusion": conclusion.data, "notes": w.notes,
            "windowed": Cp.objects != C.objects or Dp.objects != D.objects}
    if problems:
        return Report(False, problems, data)
    if not conclusion.ok:
        return Report(False, ["hypotheses hold but F is not 1-initial: " + "; ".join(conclusion.problems)], data)
    return Report(True, [], data)


def identity_witness(C: FinCategory) -> CofinalityWitness:
    """Trivial data on a category with an initial object c0."""
    from ..fincat.constructions import initial_object
    c0 = initial_object(C)
    if c0 is None:
        raise WitnessError("identity witness needs an initial object")
    I = FinFunctor.identity(C)
    sigma = {c: C.hom(c0, c)[0] for c in C.objects}
    xi = {c: C.id(c) for c in C.objects}
    return CofinalityWitness(I, I, I, c0, sigma, xi, dict(sigma), dict(xi))


def bk_sketch_witness(M, c, levels: int = 3) -> CofinalityWitness:
    """The ordinary-category sketch data for a monad M on finite sets.

    C = Delta on [0]..[levels-1]; D = the full subcategory of the under-category
    of c on the objects eta^[n]: c -> M^(n+1)(c); F([n]) = eta^[n].
    Phi = [0] * - and Psi = M, defined on one level less.
    """
    from ..monadkit.cobar import cobar_map
    cX = tuple(range(c)) if isinstance(c, int) else tuple(c)
    sets = {k: M.power(cX, k) for k in range(1, levels + 1)}
    etas = {k: FinMap.from_fn(cX, sets[k], lambda x, k=k: _eta_power(M, cX, k, x)) for k in sets}

    def dname(k):
        return f"M^{k}"

    morphisms, maps, back = [], {}, {}
    for k in sets:
        for l in sets:
            for f in all_maps(sets[k], sets[l]):
                if all(f(etas[k](x)) == etas[l](x) for x in cX):
                    name = f"{k}>{l}:" + ",".join(str(sets[l].index(v)) for v in f.values)
                    morphisms.append((name, dname(k), dname(l)))
                    maps[name] = f
                    back[(k, l, f.values)] = name

    def name_of(k, l, f: FinMap) -> str:
        return back[(k, l, f.values)]

    identity = {dname(k): name_of(k, k, FinMap.identity(sets[k])) for k in sets}
    kind = {name: (int(name.split(">")[0]), int(name.split(">")[1].split(":")[0])) for name in maps}

    def comp(g, f):
        return name_of(kind[f][0], kind[g][1], compose(maps[g], maps[f]))

    D = FinCategory.build([dname(k) for k in sets], morphisms, comp, identity, f"R_c/[{M.name}]")
    C = delta(levels - 1)
    F_mor = {}
    for m in C.morphism_ids:
        g = OrdMap.parse(m)
        F_mor[m] = name_of(g.dom, g.cod, cobar_map(M, g, cX))
    F = FinFunctor(C, D, {obj_name(k): dname(k) for k in sets}, F_mor, "F")
    Cp = delta(levels - 2)
    Dp = D.full_subcategory([dname(k) for k in range(1, levels)])
    Phi = FinFunctor(Cp, C, {o: obj_name(obj_card(o) + 1) for o in Cp.objects},
                     {m: _join_point(OrdMap.parse(m)).label() for m in Cp.morphism_ids}, "[0]*-")
    Psi_mor = {}
    for m in Dp.morphism_ids:
        k, l = kind[m]
        Psi_mor[m] = name_of(k + 1, l + 1, M.fmap(maps[m]))
    Psi = FinFunctor(Dp, D, {dname(k): dname(k + 1) for k in range(1, levels)}, Psi_mor, "M")
    c0 = obj_name(1)
    sigma, xi = {}, {}
    for o in Cp.objects:
        n = obj_card(o)
        sigma[o] = OrdMap(1, n + 1, (0,)).label()
        xi[o] = OrdMap(n, n + 1, tuple(range(1, n + 1))).label()
    tau, zeta = {}, {}
    for k in range(1, levels):
        x = sets[k]
        # tau at eta^[k-1]: M(c) -> M(x) is M(alpha) with alpha = eta^[k-1]
        tau[dname(k)] = name_of(1, k + 1, M.fmap(etas[k]))
        zeta[dname(k)] = name_of(k, k + 1, M.unit(x))
    notes = [f"c = {cX!r}", f"levels {levels}: Phi on Delta[0..{levels - 2}], Psi on M^1..M^{levels - 1}"]
    return CofinalityWitness(F, Phi, Psi, c0, sigma, xi, tau, zeta, notes)


def _eta_power(M, cX, k, x):
    v = x
    X = cX
    for _ in range(k):
        v = M.unit_elem(X, v)
        X = M.obj(X)
    return v


def _join_point(f: OrdMap) -> OrdMap:
    """id_[0] * f."""
    return OrdMap(f.dom + 1, f.cod + 1, (0,) + tuple(v + 1 for v in f.values))


__all__ = ["CofinalityWitness", "WitnessError", "cofinality_witness_check", "identity_witness",
           "bk_sketch_witness"]
