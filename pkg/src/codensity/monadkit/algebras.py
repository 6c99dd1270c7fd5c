"""Algebra structures, retracts of free objects, and split cobar resolutions."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fincat.ordinals import OrdMap, max_canonical_form, monotone_maps, ord_compose
from ..util import FinMap, ResourceLimitError, check_budget, compose, guard_limit, skeleton
from .cobar import cobar_map, codegeneracy, coface
from .monad import TableMonad, ensure_budget_power


@dataclass(frozen=True)
class AlgebraStructure:
    carrier: tuple
    structure: FinMap  # T(carrier) -> carrier


class _NeedAll(Exception):
    pass


class _Tracer:
    """Identity map on T(x) that records which points an application reads."""

    def __init__(self, elems):
        self.dom = self.cod = elems
        self.seen: set = set()

    def __call__(self, e):
        self.seen.add(e)
        return e

    @property
    def values(self):
        raise _NeedAll


class _View:
    """The partial structure map during search, read as a function."""

    def __init__(self, elems, carrier, index, assign):
        self.dom, self.cod = elems, carrier
        self._index, self._assign = index, assign

    def __call__(self, e):
        v = self._assign[self._index[e]]
        if v is _UNSET:
            raise KeyError(e)
        return v

    @property
    def values(self):
        return tuple(self._assign)


_UNSET = object()


def check_algebra(M: TableMonad, a: FinMap) -> list[str]:
    """Violations of a . eta = id and a . mu = a . T(a), checked elementwise."""
    x = a.cod
    out = []
    for e in x:
        if a(M.unit_elem(x, e)) != e:
            out.append(f"a . eta moves {e!r}")
    TX = M.obj(x)
    ensure_budget_power(M, len(x), 2, f"T^2({len(x)}) for the algebra axioms")
    for tt in M.obj(TX):
        if a(M.mult_elem(x, tt)) != a(M.apply(a, tt)):
            out.append(f"a . mu != a . T(a) at {tt!r}")
    return out


def algebra_search(M: TableMonad, x, limit: int | None = None) -> list[AlgebraStructure]:
    """Every a: T(x) -> x satisfying the unit and associativity axioms, in canonical order.

    Backtracking over the values of a on T(x) with propagation: once the points
    read by T(a)(tt) are assigned, the axiom at tt becomes an equation between
    a(mu(tt)) and a(T(a)(tt)), which either checks or forces a value.
    """
    x = skeleton(x) if isinstance(x, int) else tuple(x)
    cache = M.__dict__.setdefault("_algebra_cache", {})
    full = cache.get((x, None))
    if full is not None:
        return full if limit is None else full[:limit]
    hit = cache.get((x, limit))
    if hit is None:
        hit = _algebra_search(M, x, limit)
        cache[(x, limit)] = hit
    return list(hit)


def _algebra_search(M: TableMonad, x: tuple, limit: int | None) -> list[AlgebraStructure]:
    ensure_budget_power(M, len(x), 2, f"T^2({len(x)}) for algebra search")
    elems = M.obj(x)
    n = len(elems)
    index = {e: i for i, e in enumerate(elems)}
    TT = M.obj(elems)
    constraints = []  # (deps, mu index, tt)
    for tt in TT:
        tr = _Tracer(elems)
        try:
            M.apply(tr, tt)
            deps = frozenset(index[e] for e in tr.seen)
        except _NeedAll:
            deps = frozenset(range(n))
        constraints.append((tuple(sorted(deps)), index[M.mult_elem(x, tt)], tt))
    watchers: list[list[int]] = [[] for _ in range(n)]
    remaining = []
    for ci, (deps, _, _) in enumerate(constraints):
        remaining.append(len(deps))
        for d in deps:
            watchers[d].append(ci)
    assign = [_UNSET] * n
    eqw: list[list[int]] = [[] for _ in range(n)]
    trail: list[tuple] = []
    view = _View(elems, x, index, assign)
    node_limit = guard_limit()
    nodes = 0

    def set_value(i, v, queue) -> bool:
        cur = assign[i]
        if cur is not _UNSET:
            return cur == v
        assign[i] = v
        trail.append(("a", i))
        queue.append(i)
        return True

    def equate(i, j, queue) -> bool:
        if i == j:
            return True
        vi, vj = assign[i], assign[j]
        if vi is not _UNSET and vj is not _UNSET:
            return vi == vj
        if vi is not _UNSET:
            return set_value(j, vi, queue)
        if vj is not _UNSET:
            return set_value(i, vj, queue)
        eqw[i].append(j)
        eqw[j].append(i)
        trail.append(("e", i, j))
        return True

    def fire(ci, queue) -> bool:
        _, m, tt = constraints[ci]
        u = index[M.apply(view, tt)]
        return equate(m, u, queue)

    def propagate(queue) -> bool:
        while queue:
            i = queue.pop()
            for j in eqw[i]:
                if not equate(i, j, queue):
                    return False
            for ci in watchers[i]:
                remaining[ci] -= 1
                trail.append(("c", ci))
                if remaining[ci] == 0 and not fire(ci, queue):
                    return False
        return True

    def undo(mark):
        while len(trail) > mark:
            rec = trail.pop()
            if rec[0] == "a":
                assign[rec[1]] = _UNSET
            elif rec[0] == "c":
                remaining[rec[1]] += 1
            else:
                eqw[rec[1]].pop()
                eqw[rec[2]].pop()

    queue: list[int] = []
    for e in x:
        if not set_value(index[M.unit_elem(x, e)], e, queue):
            return []
    for ci, (deps, _, _) in enumerate(constraints):
        if not deps and not fire(ci, queue):
            return []
    if not propagate(queue):
        return []
    found: list[AlgebraStructure] = []

    def rec(pos):
        nonlocal nodes
        while pos < n and assign[pos] is not _UNSET:
            pos += 1
        if pos == n:
            found.append(AlgebraStructure(x, FinMap(elems, x, tuple(assign))))
            return
        for v in x:
            nodes += 1
            if nodes > node_limit:
                raise ResourceLimitError(f"algebra search exceeded {node_limit} nodes")
            mark = len(trail)
            q: list[int] = []
            if set_value(pos, v, q) and propagate(q):
                rec(pos + 1)
            undo(mark)
            if limit is not None and len(found) >= limit:
                return

    rec(0)
    return found


def free_algebra(M: TableMonad, c) -> AlgebraStructure:
    c = skeleton(c) if isinstance(c, int) else tuple(c)
    return AlgebraStructure(M.obj(c), M.mult(c))


# ---- retracts of free objects ------------------------------------------

@dataclass
class RetractWitness:
    x: tuple
    c: tuple
    section: FinMap  # x -> T(c)
    retraction: FinMap  # T(c) -> x
    unit_retraction: FinMap | None = None  # r: T(x) -> x with r . eta_x = id
    verified: bool = False


def _retract_pair(x, Y):
    """Some (s, r) with s: x -> Y, r: Y -> x, r . s = id, or None."""
    if x == Y:
        return FinMap.identity(x), FinMap.identity(x)
    if len(Y) < len(x) or (not x and Y):
        return None
    s = FinMap(x, Y, Y[:len(x)])
    r = FinMap(Y, x, tuple(x[i] if i < len(x) else x[0] for i in range(len(Y))))
    return s, r


def retract_membership(M: TableMonad, x, window) -> RetractWitness | None:
    """A presentation of x as a retract of some T(c), c in the window.

    When found, also builds r = rho . mu_c . T(iota): T(x) -> x and checks
    r . eta_x = id_x.
    """
    x = skeleton(x) if isinstance(x, int) else tuple(x)
    for c in window:
        c = skeleton(c) if isinstance(c, int) else tuple(c)
        Tc = M.obj(c)
        pair = _retract_pair(x, Tc)
        if pair is None:
            continue
        s, r = pair
        if compose(r, s) != FinMap.identity(x):
            continue
        w = RetractWitness(x, c, s, r)
        w.unit_retraction = lemma_retraction(M, w)
        eta = M.unit(x)
        w.verified = compose(w.unit_retraction, eta) == FinMap.identity(x)
        return w
    return None


def lemma_retraction(M: TableMonad, w: RetractWitness) -> FinMap:
    """rho . mu_c . T(iota) for a retract x of T(c)."""
    Tx = M.obj(w.x)
    c = w.c

    def r(t):
        return w.retraction(M.mult_elem(c, M.apply(w.section, t)))

    return FinMap.from_fn(Tx, w.x, r)


def image_sizes(M: TableMonad, window) -> set[int]:
    return {M.size(c) for c in window}


# ---- right splittings of the cobar resolution ---------------------------

def extras_from_algebra(M: TableMonad, a: FinMap, t: int) -> list[FinMap]:
    """s^n = T^n(a) for 0 <= n <= t."""
    return [M.power_map(a, n) for n in range(t + 1)]


def splitting_violations(M: TableMonad, c, extras: list[FinMap], cap: int = 5) -> list[str]:
    """Generator identities for extra degeneracies s^L: T^(L+1)(c) -> T^L(c).

    s^L . d^L = id;  s^L . d^i = d^i . s^(L-1) (i < L);
    c^i . s^L = s^(L-1) . c^i (i < L-1);  s^(L-1) . s^L = s^(L-1) . c^(L-1).
    Here d^i is the coface of the cobar object skipping i, c^j the codegeneracy.
    """
    c = tuple(c)
    out: list[str] = []

    def d(L, i):  # T^L c -> T^(L+1) c
        return cobar_map(M, coface(L, i), c)

    def cd(L, j):  # T^(L+2) c -> T^(L+1) c
        return cobar_map(M, codegeneracy(L, j), c)

    for L, s in enumerate(extras):
        if compose(s, d(L, L)) != FinMap.identity(M.power(c, L)):
            out.append(f"s^{L} . d^{L} != id")
        for i in range(L):
            if compose(s, d(L, i)) != compose(d(L - 1, i), extras[L - 1]):
                out.append(f"s^{L} . d^{i} != d^{i} . s^{L - 1}")
        for i in range(L - 1):
            if compose(cd(L - 2, i), s) != compose(extras[L - 1], cd(L - 1, i)):
                out.append(f"c^{i} . s^{L} != s^{L - 1} . c^{i}")
        if L >= 1 and compose(extras[L - 1], s) != compose(extras[L - 1], cd(L - 1, L - 1)):
            out.append(f"s^{L - 1} . s^{L} != s^{L - 1} . c^{L - 1}")
        if len(out) >= cap:
            break
    return out[:cap]


def _level_domains(M, c, L, extras):
    """Per-element candidate values for s^L given lower levels, or None if empty."""
    src, tgt = M.power(c, L + 1), M.power(c, L)
    fixed: dict = {}

    def force(z, v):
        if fixed.setdefault(z, v) != v:
            raise _Conflict

    try:
        dL = cobar_map(M, coface(L, L), c)
        for y in tgt:
            force(dL(y), y)
        for i in range(L):
            di, di_low = cobar_map(M, coface(L, i), c), cobar_map(M, coface(L - 1, i), c)
            for y in tgt:
                force(di(y), di_low(extras[L - 1](y)))
    except _Conflict:
        return None
    filters = []
    if L >= 1:
        prev = extras[L - 1]
        top = cobar_map(M, codegeneracy(L - 1, L - 1), c)
        filters.append(lambda z, w: prev(w) == prev(top(z)))
        for i in range(L - 1):
            ci_hi, ci_lo = cobar_map(M, codegeneracy(L - 1, i), c), cobar_map(M, codegeneracy(L - 2, i), c)
            filters.append(lambda z, w, a=ci_hi, b=ci_lo: b(w) == prev(a(z)))
    doms = []
    for z in src:
        cands = [fixed[z]] if z in fixed else list(tgt)
        cands = [w for w in cands if all(f(z, w) for f in filters)]
        if not cands:
            return None
        doms.append(cands)
    return src, tgt, doms


class _Conflict(Exception):
    pass


@dataclass
class SplittingResult:
    c: tuple
    depth: int
    extras: list | None
    source: str = ""  # "algebra" or "search"
    verified: bool = False
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.extras is not None


def split_resolution_search(M: TableMonad, c, t: int = 2, try_algebras: bool = True) -> SplittingResult:
    """Extra degeneracies s^0..s^t for the cobar resolution of c.

    Candidates T^n(a) from algebra structures are tried first; otherwise
    levels are searched in order, each level's admissible values being
    independent per element once the lower levels are fixed.
    """
    c = skeleton(c) if isinstance(c, int) else tuple(c)
    ensure_budget_power(M, len(c), t + 1, f"T^{t + 1}({len(c)}) for the splitting search")
    res = SplittingResult(c, t, None)
    if try_algebras:
        for alg in algebra_search(M, c, limit=1):
            extras = extras_from_algebra(M, alg.structure, t)
            if not splitting_violations(M, c, extras):
                res.extras, res.source = extras, "algebra"
                res.verified = verify_splitting(M, c, extras) == []
                return res
    node_limit = guard_limit()

    def search(L, extras):
        if L > t:
            return extras
        got = _level_domains(M, c, L, extras)
        if got is None:
            return None
        src, tgt, doms = got
        check_budget(len(doms), "splitting level size")
        # values of s^L are independent; enumerate choices lexicographically
        choice = [0] * len(doms)
        while True:
            res.nodes += 1
            if res.nodes > node_limit:
                raise ResourceLimitError(f"splitting search exceeded {node_limit} nodes")
            s = FinMap(src, tgt, tuple(d[k] for d, k in zip(doms, choice)))
            out = search(L + 1, extras + [s])
            if out is not None:
                return out
            if L == t:
                return None
            k = len(choice) - 1
            while k >= 0 and choice[k] + 1 >= len(doms[k]):
                choice[k] = 0
                k -= 1
            if k < 0:
                return None
            choice[k] += 1

    extras = search(0, [])
    if extras is not None:
        res.extras, res.source = extras, "search"
        res.verified = verify_splitting(M, c, extras) == []
    return res


def max_action_map(M: TableMonad, c, extras: list[FinMap], g: OrdMap) -> FinMap:
    """Y(g) for a max-preserving g, through g = f * amax(n):
    Y(g) = phi(f)_c . s^p . s^(p+1) . ... . s^(p+n-1), p = dom f.

    With extras s^L = T^L(a) this is phi(f)_c . T^p(a^n).
    """
    f, n = max_canonical_form(g)
    p = f.dom
    out = FinMap.identity(M.power(c, p + n))
    for L in range(p + n - 1, p - 1, -1):
        out = compose(extras[L], out)
    return compose(cobar_map(M, f, c), out)


def verify_splitting(M: TableMonad, c, extras: list[FinMap], cap: int = 5) -> list[str]:
    """Functoriality of Y on max-preserving maps between cardinalities 1..t+2."""
    c = tuple(c)
    t = len(extras) - 1
    cards = range(1, t + 3)
    maps = {}
    for a in cards:
        for b in cards:
            for g in monotone_maps(a, b):
                if g.is_max_preserving():
                    maps[g] = max_action_map(M, c, extras, g)
    out = []
    for g1, Y1 in maps.items():
        for g2, Y2 in maps.items():
            if g2.dom == g1.cod and maps[ord_compose(g2, g1)] != compose(Y2, Y1):
                out.append(f"Y({g2.label()} . {g1.label()}) != Y({g2.label()}) . Y({g1.label()})")
                if len(out) >= cap:
                    return out
    return out


# ---- the subcategory chain ----------------------------------------------

@dataclass
class ChainReport:
    monad: str
    window: list
    depth: int
    I: list = field(default_factory=list)
    A: list = field(default_factory=list)
    S: list = field(default_factory=list)
    R: list = field(default_factory=list)
    unresolved: dict = field(default_factory=dict)  # size -> reason
    violations: list = field(default_factory=list)
    lemma_failures: list = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.unresolved

    @property
    def ok(self) -> bool:
        return self.complete and not self.violations and not self.lemma_failures

    @property
    def status(self) -> str:
        if self.violations or self.lemma_failures:
            return "fail"
        return "pass" if self.complete else "resource"

    def summary(self) -> dict:
        return {"monad": self.monad, "window": self.window, "depth": self.depth,
                "I": self.I, "A": self.A, "S": self.S, "R": self.R,
                "unresolved": {str(k): v for k, v in self.unresolved.items()},
                "violations": self.violations, "lemma_failures": self.lemma_failures,
                "status": self.status}


def isar_chain_check(M: TableMonad, window, t: int = 2) -> ChainReport:
    """I, A, S_t and R on a window of sizes, and the inclusions between them."""
    sizes = sorted(set(window))
    rep = ChainReport(M.name, sizes, t)
    img = set()
    for c in sizes:
        try:
            img.add(M.size(c))
        except ResourceLimitError:
            pass
    rep.I = [n for n in sizes if n in img]
    for n in sizes:
        w = retract_membership(M, n, sizes)
        if w is not None:
            rep.R.append(n)
            if not w.verified:
                rep.lemma_failures.append(n)
        try:
            if algebra_search(M, n, limit=1):
                rep.A.append(n)
        except ResourceLimitError as exc:
            rep.unresolved[n] = f"A: {exc}"
        try:
            if split_resolution_search(M, n, t).found:
                rep.S.append(n)
        except ResourceLimitError as exc:
            rep.unresolved.setdefault(n, f"S: {exc}")
    for small, big, a, b in ((rep.I, rep.A, "I", "A"), (rep.A, rep.S, "A", "S"), (rep.S, rep.R, "S", "R")):
        for n in small:
            if n not in big and n not in rep.unresolved:
                rep.violations.append(f"size {n} in {a} but not in {b}")
    return rep
