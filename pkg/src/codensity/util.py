"""Shared plumbing: canonical ordering, finite maps, the resource guard."""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Iterator, Sequence

DEFAULT_GUARD = 10**7


class ResourceLimitError(RuntimeError):
    """Raised when an enumeration would exceed the configured element budget."""


def guard_limit() -> int:
    raw = os.environ.get("CODENSITY_GUARD")
    if raw:
        return int(raw)
    return DEFAULT_GUARD


def check_budget(count: int, what: str, limit: int | None = None) -> None:
    limit = guard_limit() if limit is None else limit
    if count > limit:
        raise ResourceLimitError(f"{what}: {_fmt_big(count)} exceeds guard {limit}")


def _fmt_big(n: int) -> str:
    if n < 10**12:
        return str(n)
    return f"~2^{n.bit_length() - 1}"


def canon_key(v: Any):
    """Total order on the nested hashable values used as elements."""
    if v is None:
        return (0,)
    if isinstance(v, bool):
        return (1, int(v))
    if isinstance(v, int):
        return (2, v)
    if isinstance(v, str):
        return (3, v)
    if isinstance(v, tuple):
        return (4, len(v), tuple(canon_key(x) for x in v))
    if isinstance(v, frozenset):
        return (5, len(v), tuple(sorted(canon_key(x) for x in v)))
    if hasattr(v, "sort_key"):
        return (6, v.sort_key())
    return (9, repr(v))


def finset(items: Iterable[Hashable]) -> tuple:
    """Canonically sorted tuple of distinct elements."""
    return tuple(sorted(set(items), key=canon_key))


def skeleton(n: int) -> tuple:
    return tuple(range(n))


@dataclass(frozen=True)
class FinMap:
    """A function between finite sets, stored as a value table aligned with dom."""

    dom: tuple
    cod: tuple
    values: tuple

    def __post_init__(self):
        if len(self.dom) != len(self.values):
            raise ValueError("value table does not match the domain")

    @cached_property
    def _table(self) -> dict:
        return dict(zip(self.dom, self.values))

    def __call__(self, x):
        return self._table[x]

    def sort_key(self):
        return (canon_key(self.dom), canon_key(self.cod), canon_key(self.values))

    @staticmethod
    def from_fn(dom: Sequence, cod: Sequence, fn: Callable) -> "FinMap":
        return FinMap(tuple(dom), tuple(cod), tuple(fn(x) for x in dom))

    @staticmethod
    def identity(X: Sequence) -> "FinMap":
        X = tuple(X)
        return FinMap(X, X, X)

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return set(self.values) == set(self.cod)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective() and len(self.dom) == len(self.cod)

    def well_typed(self) -> bool:
        cod = set(self.cod)
        return all(v in cod for v in self.values)

    def __repr__(self):
        pairs = ", ".join(f"{x!r}->{y!r}" for x, y in zip(self.dom, self.values))
        return f"FinMap({{{pairs}}})"


def compose(g: FinMap, f: FinMap) -> FinMap:
    """g after f."""
    return FinMap(f.dom, g.cod, tuple(g(y) for y in f.values))


def all_maps(X: Sequence, Y: Sequence, guard: int | None = None) -> Iterator[FinMap]:
    X, Y = tuple(X), tuple(Y)
    check_budget(len(Y) ** len(X), f"maps {len(X)} -> {len(Y)}", guard)
    for vals in itertools.product(Y, repeat=len(X)):
        yield FinMap(X, Y, vals)


def jname(*parts) -> str:
    """Unambiguous identifier built from parts."""
    return json.dumps(list(parts), separators=(",", ":"))


def parse_window(text: str) -> list[int]:
    """'a..b' or 'a,b,c' -> list of ints."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty window {text!r}")
        return list(range(lo, hi + 1))
    return [int(t) for t in text.split(",") if t.strip()]


class FunctionalCSP:
    """Variables with finite domains linked by edges u -> v forcing v = h(u).

    Solutions are produced in lexicographic order of the variable list.
    Used for naturality families, where every constraint has this shape.
    """

    def __init__(self, domains: Sequence[Sequence], node_limit: int | None = None):
        self.domains = [tuple(d) for d in domains]
        self.out: list[list[tuple[int, Callable]]] = [[] for _ in self.domains]
        self.inc: list[list[tuple[int, Callable]]] = [[] for _ in self.domains]
        self.fixed: dict[int, Any] = {}
        self.node_limit = guard_limit() if node_limit is None else node_limit
        self.nodes = 0
        self.conflict = False

    def add_edge(self, u: int, v: int, h: Callable) -> None:
        self.out[u].append((v, h))
        self.inc[v].append((u, h))

    def fix(self, u: int, value) -> None:
        if u in self.fixed and self.fixed[u] != value:
            self.conflict = True
        self.fixed[u] = value

    def candidate_bound(self) -> int:
        """Upper bound on the number of solutions before any filtering.

        Each strongly connected component is determined by one of its values,
        and every component is determined by the source components upstream,
        so the product over source components bounds the solution count.
        """
        comp = strongly_connected(len(self.domains), [[v for v, _ in e] for e in self.out])
        has_in = set()
        for u, edges in enumerate(self.out):
            for v, _ in edges:
                if comp[u] != comp[v]:
                    has_in.add(comp[v])
        bound = 1
        seen = set()
        fixed_comps = {comp[u] for u in self.fixed}
        for u in range(len(self.domains)):
            cu = comp[u]
            if cu in seen or cu in has_in:
                continue
            seen.add(cu)
            if cu not in fixed_comps:
                bound *= len(self.domains[u])
        return bound

    def _propagate(self, assign: list, trail: list, start: list[int]) -> bool:
        queue = list(start)
        while queue:
            u = queue.pop()
            val = assign[u]
            for v, h in self.out[u]:
                w = h(val)
                cur = assign[v]
                if cur is _UNSET:
                    assign[v] = w
                    trail.append(v)
                    queue.append(v)
                elif cur != w:
                    return False
            # edges into u constrain sources only once they are assigned, handled from their side
            for s, h in self.inc[u]:
                if assign[s] is not _UNSET and h(assign[s]) != val:
                    return False
        return True

    def solutions(self, limit: int | None = None) -> Iterator[tuple]:
        n = len(self.domains)
        if self.conflict:
            return
        assign = [_UNSET] * n
        trail: list[int] = []
        for u, val in self.fixed.items():
            if assign[u] is _UNSET:
                assign[u] = val
                trail.append(u)
            elif assign[u] != val:
                return
        if not self._propagate(assign, trail, list(self.fixed)):
            return
        domset = [frozenset(d) for d in self.domains]
        if any(assign[u] is not _UNSET and assign[u] not in domset[u] for u in range(n)):
            return
        found = 0

        def rec(pos: int):
            nonlocal found
            while pos < n and assign[pos] is not _UNSET:
                pos += 1
            if pos == n:
                yield tuple(assign)
                found += 1
                return
            for val in self.domains[pos]:
                self.nodes += 1
                if self.nodes > self.node_limit:
                    raise ResourceLimitError(f"constraint search exceeded {self.node_limit} nodes")
                mark = len(trail)
                assign[pos] = val
                trail.append(pos)
                ok = self._propagate(assign, trail, [pos])
                if ok:
                    ok = all(assign[u] in domset[u] for u in trail[mark:])
                if ok:
                    yield from rec(pos + 1)
                    if limit is not None and found >= limit:
                        return
                while len(trail) > mark:
                    assign[trail.pop()] = _UNSET

        yield from rec(0)


def strongly_connected(n: int, adj: list[list[int]]) -> list[int]:
    """Component label per vertex (iterative Tarjan)."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            while i < len(adj[v]):
                w = adj[v][i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


class _Unset:
    def __repr__(self):
        return "UNSET"


_UNSET = _Unset()
