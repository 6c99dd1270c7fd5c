"""Free simplicial monoids given by graded bases, and their skeletal filtrations.

Elements at level n are words (tuples of generator ids) in the level-n basis,
together with generators of an optional base presentation.  Faces of a
generator are words one level down; degeneracies of generators are generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from ..fincat.category import Report
from ..fincat.ordinals import OrdMap, monotone_maps
from ..util import check_budget
from .ndelta import Chain, enumerate_ndelta_plus, f_kn, join_decompose_chain, join_word

HORN_INDEX_RANGES = {
    "kan": lambda i, n: 0 <= i <= n,
    "left": lambda i, n: 0 <= i < n,
    "right": lambda i, n: 0 < i <= n,
    "inner": lambda i, n: 0 < i < n,
}


@dataclass
class FreeMonoidPresentation:
    N: int
    basis: dict  # level -> list of generator ids
    faces: dict  # (gen, i) -> word one level down
    degens: dict  # (gen, i) -> gen one level up (levels < N)
    base: "FreeMonoidPresentation | None" = None
    horn: dict | None = None  # nondegenerate gen -> horn index
    realize: object = None  # optional word -> element, for freeness checks on a window
    window: dict = field(default_factory=dict)
    name: str = "presentation"

    def __post_init__(self):
        self._level = {g: n for n, gs in self.basis.items() for g in gs}
        self._base_level = {}
        if self.base is not None:
            self._base_level = {g: n for n, gs in self.base.basis.items() for g in gs}
            clash = set(self._level) & set(self._base_level)
            if clash:
                raise ValueError(f"generator ids shared with the base: {sorted(clash)[:3]}")

    # word-level structure
    def level_of(self, g) -> int:
        return self._level[g] if g in self._level else self._base_level[g]

    def is_base(self, g) -> bool:
        return g in self._base_level

    def gen_face(self, g, i) -> tuple:
        return self.base.faces[(g, i)] if self.is_base(g) else self.faces[(g, i)]

    def gen_degen(self, g, i):
        return self.base.degens[(g, i)] if self.is_base(g) else self.degens[(g, i)]

    def face(self, word, i) -> tuple:
        return tuple(itertools.chain.from_iterable(self.gen_face(g, i) for g in word))

    def degen(self, word, i) -> tuple:
        return tuple(self.gen_degen(g, i) for g in word)

    def alphabet(self, n: int) -> list:
        base = list(self.base.basis.get(n, [])) if self.base is not None else []
        return base + list(self.basis.get(n, []))

    # Eilenberg-Zilber data of generators
    def nondegenerate(self, n: int) -> list:
        images = {self.degens[(g, i)] for g in self.basis.get(n - 1, []) for i in range(n)} if n > 0 else set()
        return [g for g in self.basis.get(n, []) if g not in images]

    def recompose(self, sigma: OrdMap, g):
        """sigma*(g) for a surjection sigma, through degeneracies at least repeated indices."""
        n, m = sigma.dom - 1, sigma.cod - 1
        if n == m:
            return g
        i = next(k for k in range(n) if sigma.values[k] == sigma.values[k + 1])
        rest = OrdMap(n, m + 1, sigma.values[:i] + sigma.values[i + 1:])
        return self.gen_degen(self.recompose(rest, g), i)

    def roots(self) -> dict:
        """gen -> (level of its nondegenerate root, the root), from the EZ presentations."""
        out = {}
        for m in range(self.N + 1):
            for y in self.nondegenerate(m):
                for n in range(m, self.N + 1):
                    for sig in surjections(n, m):
                        out.setdefault(self.recompose(sig, y), (m, y))
        return out


def surjections(n: int, m: int):
    """Monotone surjections [n] ->> [m]."""
    return [f for f in monotone_maps(n + 1, m + 1) if f.is_surjective()]


def validate_presentation(P: FreeMonoidPresentation, word_length: int = 2, cap: int = 5) -> Report:
    """Degeneracy closure, simplicial identities on generators, EZ consistency and,
    when ``realize`` is given, injectivity of words up to ``word_length``."""
    probs: list = []

    def note(msg):
        if len(probs) < cap:
            probs.append(msg)

    for n in range(P.N + 1):
        for g in P.basis.get(n, []):
            if n < P.N:
                for i in range(n + 1):
                    h = P.degens.get((g, i))
                    if h not in P._level or P._level[h] != n + 1:
                        note(f"s{i}({g}) is not a level-{n + 1} generator")
            if n > 0:
                for i in range(n + 1):
                    w = P.faces.get((g, i))
                    if w is None or any(P.level_of(x) != n - 1 for x in w):
                        note(f"d{i}({g}) is not a level-{n - 1} word")
    if probs:
        return Report(False, probs)
    # simplicial identities, applied to single generators
    for n in range(P.N + 1):
        for g in P.basis.get(n, []):
            w = (g,)
            for i in range(n + 1):
                for j in range(i + 1, n + 1):
                    if n >= 2 and P.face(P.face(w, j), i) != P.face(P.face(w, i), j - 1):
                        note(f"d{i}d{j} != d{j - 1}d{i} on {g}")
            if n + 1 <= P.N:
                for i in range(n + 2):
                    for j in range(n + 1):
                        lhs = P.face(P.degen(w, j), i)
                        if i < j:
                            rhs = P.degen(P.face(w, i), j - 1) if n >= 1 else None
                        elif i in (j, j + 1):
                            rhs = w
                        else:
                            rhs = P.degen(P.face(w, i - 1), j) if n >= 1 else None
                        if rhs is not None and lhs != rhs:
                            note(f"d{i}s{j} identity fails on {g}")
            if n + 2 <= P.N:
                for i in range(n + 1):
                    for j in range(i, n + 1):
                        if P.degen(P.degen(w, j), i) != P.degen(P.degen(w, i), j + 1):
                            note(f"s{i}s{j} identity fails on {g}")
    # EZ: (surjection, nondegenerate) -> generator is a bijection at every level
    seen: dict = {}
    for m in range(P.N + 1):
        for y in P.nondegenerate(m):
            for n in range(m, P.N + 1):
                for sig in surjections(n, m):
                    g = P.recompose(sig, y)
                    if g in seen:
                        note(f"{g} has two degeneracy presentations")
                    seen[g] = (sig, y)
    missing = [g for n in range(P.N + 1) for g in P.basis.get(n, []) if g not in seen]
    if missing:
        note(f"generators without a degeneracy presentation: {missing[:3]}")
    data = {"words_checked": 0}
    if P.realize is not None:
        for n in range(P.N + 1):
            alpha = P.alphabet(n)
            images: dict = {}
            for L in range(word_length + 1):
                check_budget(len(alpha) ** L, f"words of length {L} at level {n}")
                for w in itertools.product(alpha, repeat=L):
                    data["words_checked"] += 1
                    e = P.realize(w, n)
                    if e in images:
                        note(f"words {images[e]} and {w} denote the same element")
                    images[e] = w
    return Report(not probs, probs, data)


def horn_annotation_check(P: FreeMonoidPresentation, klass: str = "kan", cap: int = 5) -> Report:
    """H_n inside X_n, indices in the class range, and H_(n+1) + H_n = X_n via h -> d_i(h)(h).

    Level N cannot be completed inside the window, so the bijection is checked
    for levels n < N.
    """
    if P.horn is None:
        return Report(False, ["no horn annotation"])
    allowed = HORN_INDEX_RANGES[klass]
    probs: list = []
    H = {n: [g for g in P.nondegenerate(n) if g in P.horn] for n in range(P.N + 1)}
    stray = [g for g in P.horn if g not in {x for n in H for x in H[n]}]
    if stray:
        probs.append(f"horn generators that are not nondegenerate basis elements: {stray[:3]}")
    if H.get(0):
        probs.append("H_0 is not empty")
    sizes = {}
    for n in range(P.N):
        nd = P.nondegenerate(n)
        images = []
        for h in H[n + 1]:
            i = P.horn[h]
            if not allowed(i, n + 1):
                if len(probs) < cap:
                    probs.append(f"index {i} of {h} is outside the {klass} range")
                continue
            w = P.faces[(h, i)]
            if len(w) != 1 or w[0] not in nd or w[0] in P.horn:
                if len(probs) < cap:
                    probs.append(f"d{i}({h}) is not a nondegenerate generator outside H")
                continue
            images.append(w[0])
        if len(set(images)) != len(images) and len(probs) < cap:
            probs.append(f"level {n}: two horn generators share their missing face")
        if set(images) | set(H[n]) != set(nd) and len(probs) < cap:
            probs.append(f"level {n}: H_{n} and the faces of H_{n + 1} do not cover X_{n}")
        sizes[n] = {"X0": len(nd), "H": len(H[n]), "H_next": len(H[n + 1])}
    return Report(not probs, probs, {"levels": sizes, "class": klass})


@dataclass
class FiltrationStage:
    k: int
    new_nondegenerate: int
    generators: dict  # level -> count of stage generators
    new_by_level: dict  # level -> new generators found by enumeration
    predicted: dict  # level -> attachment count
    words: dict  # level -> count of words of length <= L in the stage


@dataclass
class FiltrationReport:
    name: str
    upto: int
    word_length: int
    stages: list = field(default_factory=list)
    stabilized_at: int | None = None
    problems: list = field(default_factory=list)
    anodyne: list = field(default_factory=list)  # per-stage dicts for the horn variant

    @property
    def ok(self) -> bool:
        return not self.problems


def _words_upto(g: int, L: int) -> int:
    return sum(g ** l for l in range(L + 1))


def free_map_filtration(P: FreeMonoidPresentation, upto: int | None = None, word_length: int = 2,
                        anodyne: bool = False, cap: int = 5) -> FiltrationReport:
    """The filtration A^(-1) = base, A^(k) generated by the base and degeneracies of X_j, j <= k.

    Each stage checks that the boundary of every new nondegenerate generator
    already lies in the previous stage, and that the new generators at level n
    number |X_k nondegenerate| * C(n, k), one copy of the nondegenerate part of
    Delta^k per attached generator.  Word counts per level follow.
    """
    top = P.N if upto is None else min(upto, P.N)
    rep = FiltrationReport(P.name, top, word_length)
    roots = P.roots()

    def stage_of(g):
        return -1 if P.is_base(g) else roots[g][0]

    def within(word, k):
        return all(stage_of(x) <= k for x in word)

    def count_stage(k):
        gens = {n: sum(1 for g in P.alphabet(n) if stage_of(g) <= k) for n in range(P.N + 1)}
        return gens

    prev = count_stage(-1)
    for k in range(top + 1):
        cur = count_stage(k)
        fresh = P.nondegenerate(k)
        for y in fresh:
            for i in range(k + 1 if k else 0):
                if not within(P.faces[(y, i)], k - 1) and len(rep.problems) < cap:
                    rep.problems.append(f"stage {k}: d{i}({y}) is not in the previous stage")
        new_by_level = {n: cur[n] - prev[n] for n in range(P.N + 1)}
        predicted = {n: len(fresh) * comb(n, k) for n in range(P.N + 1)}
        if new_by_level != predicted and len(rep.problems) < cap:
            rep.problems.append(f"stage {k}: new generators {new_by_level} differ from attachments {predicted}")
        words = {n: _words_upto(cur[n], word_length) for n in range(P.N + 1)}
        rep.stages.append(FiltrationStage(k, len(fresh), cur, new_by_level, predicted, words))
        prev = cur
    later = [s.k for s in rep.stages if s.new_nondegenerate]
    rep.stabilized_at = max(later) if later else -1
    # closure: every stage is a simplicial submonoid
    for g, (m, _) in roots.items():
        n = P.level_of(g)
        if n > 0:
            for i in range(n + 1):
                if not within(P.faces[(g, i)], m) and len(rep.problems) < cap:
                    rep.problems.append(f"faces of {g} leave stage {m}")
    if anodyne:
        _horn_stages(P, rep, roots, top, cap)
    return rep


def _horn_stages(P: FreeMonoidPresentation, rep: FiltrationReport, roots: dict, top: int, cap: int) -> None:
    """Intermediate stages: add H_k along horns, the missing faces being the new X_(k-1) generators.

    Stage k holds the base, H_j for j <= k, the faces d_i(h)(h) of those, and
    degeneracies of all of these.
    """
    if P.horn is None:
        rep.problems.append("anodyne filtration requested without a horn annotation")
        return
    members: set = set()
    for k in range(top + 1):
        Hk = [h for h in P.nondegenerate(k) if h in P.horn]
        missing = []
        for h in Hk:
            i = P.horn[h]
            for j in range(k + 1 if k else 0):
                w = P.faces[(h, j)]
                if j == i:
                    if len(w) != 1 or w[0] in members:
                        if len(rep.problems) < cap:
                            rep.problems.append(f"horn stage {k}: the missing face of {h} is already present")
                    else:
                        missing.append(w[0])
                elif not all(P.is_base(x) or roots[x][1] in members for x in w):
                    if len(rep.problems) < cap:
                        rep.problems.append(f"horn stage {k}: d{j}({h}) is not in the previous horn stage")
        members |= set(Hk) | set(missing)
        # the horn stages sit between consecutive skeleta
        below = {y for m in range(k) for y in P.nondegenerate(m)}
        upto_k = below | set(P.nondegenerate(k))
        rep.anodyne.append({"k": k, "H": len(Hk), "missing_faces": len(missing),
                            "inside_skeleton": members <= upto_k})
        if not members <= upto_k and len(rep.problems) < cap:
            rep.problems.append(f"horn stage {k} leaves the {k}-skeleton")
        if k >= 1:
            prev_skel = {y for m in range(k - 1) for y in P.nondegenerate(m)}
            if not prev_skel <= members and len(rep.problems) < cap:
                rep.problems.append(f"horn stage {k} does not contain the {k - 2}-skeleton")


# ---- concrete presentations --------------------------------------------------

def ndelta_plus_presentation(N: int, B: int) -> FreeMonoidPresentation:
    """Basis chains (ending at [0]) of N(Delta_+) with every cardinality <= B, levels <= N."""
    basis, faces, degens = {}, {}, {}
    for n in range(N + 1):
        chains = [c for c in enumerate_ndelta_plus(n, B) if c.is_basis()]
        basis[n] = [c.label() for c in chains]
        for c in chains:
            if n > 0:
                for i in range(n + 1):
                    faces[(c.label(), i)] = tuple(f.label() for f in join_decompose_chain(c.face(i)))
            if n < N:
                for i in range(n + 1):
                    degens[(c.label(), i)] = c.degen(i).label()
    lookup = {c.label(): c for n in range(N + 1) for c in enumerate_ndelta_plus(n, B) if c.is_basis()}
    horn = {c.label(): 0 for n in range(1, N + 1) for c in enumerate_ndelta_plus(n, B)
            if c.is_basis() and not c.is_degenerate() and c.cards[0] == 0}

    def realize(word, n):
        return join_word([lookup[g] for g in word], n)

    return FreeMonoidPresentation(N, basis, faces, degens, horn=horn, realize=realize,
                                  window={"levels": N, "B": B}, name=f"N(Delta_+) window N={N} B={B}")


def delta_inj_presentation(N: int) -> FreeMonoidPresentation:
    """The basis f_(k,n), 0 <= k <= n, of injective chains."""
    basis, faces, degens, lookup = {}, {}, {}, {}
    for n in range(N + 1):
        gens = [f_kn(k, n) for k in range(n + 1)]
        basis[n] = [g.label() for g in gens]
        for g in gens:
            lookup[g.label()] = g
            if n > 0:
                for i in range(n + 1):
                    faces[(g.label(), i)] = tuple(f.label() for f in join_decompose_chain(g.face(i)))
            if n < N:
                for i in range(n + 1):
                    degens[(g.label(), i)] = g.degen(i).label()

    def realize(word, n):
        return join_word([lookup[g] for g in word], n)

    return FreeMonoidPresentation(N, basis, faces, degens, realize=realize, window={"levels": N},
                                  name=f"N(Delta_+^inj) window N={N}")


def constant_presentation(gens, N: int) -> FreeMonoidPresentation:
    """The free monoid on level-0 generators, constant in the simplicial direction."""
    basis = {n: [f"{g}@{n}" for g in gens] for n in range(N + 1)}
    faces = {(f"{g}@{n}", i): (f"{g}@{n - 1}",) for g in gens for n in range(1, N + 1) for i in range(n + 1)}
    degens = {(f"{g}@{n}", i): f"{g}@{n + 1}" for g in gens for n in range(N) for i in range(n + 1)}

    def realize(word, n):
        return tuple(w.split("@")[0] for w in word)

    return FreeMonoidPresentation(N, basis, faces, degens, realize=realize, window={"levels": N},
                                  name=f"free on {list(gens)}")


def without_horn_generator(P: FreeMonoidPresentation, h=None) -> FreeMonoidPresentation:
    """A copy of P whose horn annotation drops one generator (the first in H_1 by default)."""
    horn = dict(P.horn or {})
    if h is None:
        h = next(g for g in P.basis.get(1, []) if g in horn)
    horn.pop(h)
    return FreeMonoidPresentation(P.N, P.basis, P.faces, P.degens, P.base, horn, P.realize, P.window,
                                  P.name + f" minus {h}")


__all__ = ["FreeMonoidPresentation", "validate_presentation", "horn_annotation_check", "free_map_filtration",
           "FiltrationReport", "FiltrationStage", "ndelta_plus_presentation", "delta_inj_presentation",
           "constant_presentation", "without_horn_generator", "surjections", "HORN_INDEX_RANGES", "Chain"]
