"""Monads given by explicit tables, and the JSON monad-definition format.

Document shape (all lists aligned with the declared element order):

    {"sets": {"X": [...], "TX": [...], ...},
     "T": {"X": "TX", ...},
     "functions": [{"dom": "X", "cod": "Y", "values": [...], "image": [...]}],
     "unit": {"X": [...]},
     "mult": {"X": [...]}}

``image`` is T(f) as a value list over T(dom); ``unit[X]`` lists eta_X over X;
``mult[X]`` lists mu_X over T(T(X)).  Alternatively ``{"builtin": {"name":
..., "params": {...}}}`` names a built-in monad.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..util import FinMap, all_maps, skeleton
from .monad import TableError, TableMonad


class ExplicitMonad(TableMonad):
    """A monad read off finite tables; anything not tabulated raises TableError."""

    def __init__(self, sets: dict, T: dict, functions: dict, unit: dict, mult: dict, name: str = "explicit"):
        super().__init__()
        self.name = name
        self.sets = {k: tuple(v) for k, v in sets.items()}
        self._by_elems = {v: k for k, v in self.sets.items()}
        self._pos = {k: {e: i for i, e in enumerate(v)} for k, v in self.sets.items()}
        self.T = dict(T)
        self.functions = functions  # (dom name, cod name, values) -> image tuple
        self.unit_table = unit  # name -> values
        self.mult_table = mult  # name -> values

    def _name(self, X) -> str:
        try:
            return self._by_elems[tuple(X)]
        except KeyError:
            raise TableError(f"set {X!r} is not tabulated") from None

    def _obj(self, X):
        n = self._name(X)
        if n not in self.T:
            raise TableError(f"T({n}) is not tabulated")
        return self.sets[self.T[n]]

    def obj(self, X) -> tuple:
        # keep the declared element order instead of re-sorting
        X = skeleton(X) if isinstance(X, int) else tuple(X)
        return self._obj(X)

    def _apply(self, f, t):
        key = (self._name(f.dom), self._name(f.cod), tuple(f.values))
        img = self.functions.get(key)
        if img is None:
            raise TableError(f"T of {key} is not tabulated")
        return img[self._pos[self.T[key[0]]][t]]

    def _unit(self, X, x):
        n = self._name(X)
        return self.unit_table[n][self._pos[n][x]]

    def _mult(self, X, tt):
        n = self._name(X)
        return self.mult_table[n][self._pos[self.T[self.T[n]]][tt]]

    # serialization
    def to_document(self) -> dict:
        enc = _Encoder()
        sets = {n: [enc.encode(e) for e in elems] for n, elems in self.sets.items()}
        funcs = []
        for (d, c, vals), img in sorted(self.functions.items(), key=lambda kv: (kv[0][0], kv[0][1], repr(kv[0][2]))):
            funcs.append({"dom": d, "cod": c, "values": [enc.encode(v) for v in vals],
                          "image": [enc.encode(v) for v in img]})
        return {"sets": sets, "T": dict(self.T), "functions": funcs,
                "unit": {n: [enc.encode(v) for v in vals] for n, vals in self.unit_table.items()},
                "mult": {n: [enc.encode(v) for v in vals] for n, vals in self.mult_table.items()},
                "name": self.name}

    @staticmethod
    def from_document(doc: dict) -> "ExplicitMonad":
        dec = _decode
        for key in ("sets", "T", "unit", "mult"):
            if key not in doc:
                raise ValueError(f"monad table document lacks {key!r}")
        sets = {n: tuple(dec(e) for e in elems) for n, elems in doc["sets"].items()}
        for n, tn in doc["T"].items():
            if n not in sets or tn not in sets:
                raise ValueError(f"T maps {n!r} to {tn!r}, which is not a declared set")
        functions = {}
        for f in doc.get("functions", []):
            functions[(f["dom"], f["cod"], tuple(dec(v) for v in f["values"]))] = tuple(dec(v) for v in f["image"])
        unit = {n: tuple(dec(v) for v in vals) for n, vals in doc["unit"].items()}
        mult = {n: tuple(dec(v) for v in vals) for n, vals in doc["mult"].items()}
        return ExplicitMonad(sets, doc["T"], functions, unit, mult, doc.get("name", "explicit"))


def tabulate(M: TableMonad, sizes, name: str | None = None) -> ExplicitMonad:
    """Tables of M sufficient for the exhaustive law checks on the window.

    Records T, T^2, T^3 of each window set, T of every window map and of the
    maps derived from them by the checks (T(h), eta, mu and their images).
    """
    sizes = sorted(set(sizes))
    sets, T, functions, unit, mult = {}, {}, {}, {}, {}
    names: dict = {}

    def reg(X, label):
        X = tuple(X)
        if X not in names:
            names[X] = label
            sets[label] = X
        return names[X]

    def reg_map(f: FinMap):
        key = (names[f.dom], names[f.cod], tuple(f.values))
        if key not in functions:
            functions[key] = tuple(M.fmap(f).values)

    for n in sizes:
        X = skeleton(n)
        levels = [X]
        for k in range(1, 4):
            levels.append(M.obj(levels[-1]))
        for k, L in enumerate(levels):
            reg(L, f"T{k}({n})" if k else str(n))
        for k in range(3):
            T[names[levels[k]]] = names[levels[k + 1]]
        for k in range(2):
            unit[names[levels[k]]] = tuple(M.unit(levels[k]).values)
            mult[names[levels[k]]] = tuple(M.mult(levels[k]).values)
        reg_map(M.unit(X))
        reg_map(M.mult(X))
        reg_map(M.unit(levels[1]))
    for n in sizes:
        for m in sizes:
            for h in all_maps(skeleton(n), skeleton(m)):
                reg_map(h)
                reg_map(M.fmap(h))
    return ExplicitMonad(sets, T, functions, unit, mult, name or f"tabulated({M.name})")


def load_monad(path) -> TableMonad:
    """Read a monad definition file: a built-in reference or explicit tables."""
    doc = json.loads(Path(path).read_text())
    return monad_from_document(doc)


def monad_from_document(doc: dict) -> TableMonad:
    if "builtin" in doc:
        from ..bkshadow.builtins import make_monad
        spec = doc["builtin"]
        return make_monad(spec["name"], spec.get("params"))
    return ExplicitMonad.from_document(doc)


def dump_monad(M: ExplicitMonad, path) -> None:
    Path(path).write_text(json.dumps(M.to_document(), indent=1, sort_keys=True) + "\n")


class _Encoder:
    def encode(self, v):
        if isinstance(v, frozenset):
            return {"set": sorted((self.encode(x) for x in v), key=json.dumps)}
        if isinstance(v, tuple):
            return {"tuple": [self.encode(x) for x in v]}
        return v


def _decode(v):
    if isinstance(v, dict):
        if "set" in v:
            return frozenset(_decode(x) for x in v["set"])
        if "tuple" in v:
            return tuple(_decode(x) for x in v["tuple"])
        raise ValueError(f"unknown element encoding {v!r}")
    if isinstance(v, list):
        return tuple(_decode(x) for x in v)
    return v
