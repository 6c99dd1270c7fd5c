"""Built-in monads on finite sets."""

from __future__ import annotations

import itertools

from ..monadkit.monad import TableMonad
from ..util import canon_key
from .ring import FiniteRing


class IdentityMonad(TableMonad):
    name = "identity"

    def _obj(self, X):
        return X

    def _apply(self, f, t):
        return f(t)

    def _unit(self, X, x):
        return x

    def _mult(self, X, tt):
        return tt

    def card(self, n):
        return n


class PowersetMonad(TableMonad):
    """Subsets as frozensets; the nonempty variant drops the empty set."""

    def __init__(self, nonempty: bool = False):
        super().__init__()
        self.nonempty = nonempty
        self.name = "nonempty_powerset" if nonempty else "powerset"

    def _obj(self, X):
        lo = 1 if self.nonempty else 0
        for k in range(lo, len(X) + 1):
            for sub in itertools.combinations(X, k):
                yield frozenset(sub)

    def _apply(self, f, t):
        return frozenset(f(x) for x in t)

    def _unit(self, X, x):
        return frozenset((x,))

    def _mult(self, X, tt):
        return frozenset().union(*tt)

    def card(self, n):
        if n > 4096:
            return 2 ** 4096
        return 2 ** n - (1 if self.nonempty else 0)


NOTHING = ("N",)


class MaybeMonad(TableMonad):
    """X + 1, with ('J', x) for x and ('N',) for the added point."""

    name = "maybe"

    def _obj(self, X):
        yield NOTHING
        for x in X:
            yield ("J", x)

    def _apply(self, f, t):
        return t if t == NOTHING else ("J", f(t[1]))

    def _unit(self, X, x):
        return ("J", x)

    def _mult(self, X, tt):
        return NOTHING if tt == NOTHING else tt[1]

    def card(self, n):
        return n + 1


class WriterMonad(TableMonad):
    """W x X for a finite monoid (W, op, e); elements are pairs (w, x)."""

    def __init__(self, elements, op, unit, label: str = ""):
        super().__init__()
        self.W = tuple(elements)
        self.op = op
        self.e = unit
        self.name = f"writer({label})" if label else "writer"

    @staticmethod
    def zmod(n: int) -> "WriterMonad":
        return WriterMonad(range(n), lambda a, b: (a + b) % n, 0, f"Z/{n}")

    @staticmethod
    def trivial() -> "WriterMonad":
        return WriterMonad((0,), lambda a, b: 0, 0, "1")

    def _obj(self, X):
        for w in self.W:
            for x in X:
                yield (w, x)

    def _apply(self, f, t):
        return (t[0], f(t[1]))

    def _unit(self, X, x):
        return (self.e, x)

    def _mult(self, X, tt):
        w1, (w2, x) = tt
        return (self.op(w1, w2), x)

    def card(self, n):
        return len(self.W) * n


class AffineSpanMonad(TableMonad):
    """R_a: combinations sum r_x x with coefficient sum 1, stored sparsely.

    An element is a tuple of (x, r) pairs sorted by x, with r a nonzero ring
    element index.
    """

    def __init__(self, ring: FiniteRing):
        super().__init__()
        self.R = ring
        self.name = f"affine({ring.name})"

    def _obj(self, X):
        R = self.R
        n = len(X)
        if n == 0:
            return
        for head in itertools.product(range(R.size), repeat=n - 1):
            s = R.sum(head)
            # last coefficient c with s + c = 1
            last = next(c for c in range(R.size) if R.add(s, c) == R.one)
            yield self.combine(zip(X, head + (last,)))

    def card(self, n):
        if n == 0:
            return 0
        if n > 4096:
            return 2 ** 4096
        return self.R.size ** (n - 1)

    def combine(self, terms) -> tuple:
        """Canonical sparse form of a list of (x, r) terms."""
        acc: dict = {}
        for x, r in terms:
            acc[x] = self.R.add(acc.get(x, self.R.zero), r)
        return tuple(sorted(((x, r) for x, r in acc.items() if r != self.R.zero),
                            key=lambda p: canon_key(p[0])))

    def _apply(self, f, t):
        return self.combine((f(x), r) for x, r in t)

    def _unit(self, X, x):
        return ((x, self.R.one),)

    def _mult(self, X, tt):
        R = self.R
        return self.combine((x, R.mul(r, s)) for inner, r in tt for x, s in inner)

    def coefficient_sum(self, t) -> int:
        return self.R.sum(r for _, r in t)


def builtin_monads() -> dict:
    """Catalog: name -> factory(params dict) -> TableMonad."""
    return {
        "identity": lambda p=None: IdentityMonad(),
        "powerset": lambda p=None: PowersetMonad(),
        "nonempty_powerset": lambda p=None: PowersetMonad(nonempty=True),
        "maybe": lambda p=None: MaybeMonad(),
        "writer": lambda p=None: (WriterMonad.trivial() if int((p or {}).get("n", 2)) == 1
                                  else WriterMonad.zmod(int((p or {}).get("n", 2)))),
        "affine": lambda p=None: AffineSpanMonad(FiniteRing.parse((p or {}).get("ring", "Z/2"))),
    }


def make_monad(name: str, params: dict | None = None) -> TableMonad:
    cat = builtin_monads()
    if name not in cat:
        raise KeyError(f"unknown built-in monad {name!r}; known: {', '.join(sorted(cat))}")
    return cat[name](params or {})


__all__ = ["IdentityMonad", "PowersetMonad", "MaybeMonad", "WriterMonad", "AffineSpanMonad", "builtin_monads",
           "make_monad"]
