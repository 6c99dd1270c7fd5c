"""Monads on finite sets, given elementwise and tabulated on demand."""

from __future__ import annotations

from ..util import FinMap, ResourceLimitError, canon_key, check_budget, guard_limit, skeleton


class TableError(KeyError):
    """A functor given by finite tables was asked for an entry it does not have."""


class CoaugmentedFunctor:
    """An endofunctor of finite sets with a unit eta: Id => F.

    Subclasses implement the elementwise hooks ``_obj``, ``_apply`` and
    ``_unit``.  Objects are tuples of hashable elements; F(X) is returned as
    a canonically sorted tuple and memoized.
    """

    name = "functor"

    def __init__(self):
        self._obj_cache: dict = {}
        self._fmap_cache: dict = {}
        self._unit_cache: dict = {}

    # hooks
    def _obj(self, X: tuple):
        raise NotImplementedError

    def _apply(self, f: FinMap, t):
        raise NotImplementedError

    def _unit(self, X: tuple, x):
        raise NotImplementedError

    def card(self, n: int) -> int | None:
        """|F(X)| for |X| = n when known in closed form (used by the guard)."""
        return None

    # public API
    def obj(self, X) -> tuple:
        X = skeleton(X) if isinstance(X, int) else tuple(X)
        hit = self._obj_cache.get(X)
        if hit is not None:
            return hit
        c = self.card(len(X))
        if c is not None:
            check_budget(c, f"|{self.name}(X)| for |X|={len(X)}")
        out = tuple(sorted(self._obj(X), key=canon_key))
        check_budget(len(out), f"|{self.name}(X)| for |X|={len(X)}")
        self._obj_cache[X] = out
        return out

    def size(self, n: int) -> int:
        c = self.card(n)
        return c if c is not None else len(self.obj(skeleton(n)))

    def apply(self, f: FinMap, t):
        return self._apply(f, t)

    def fmap(self, f: FinMap) -> FinMap:
        hit = self._fmap_cache.get(f)
        if hit is not None:
            return hit
        dom, cod = self.obj(f.dom), self.obj(f.cod)
        out = FinMap(dom, cod, tuple(self._apply(f, t) for t in dom))
        self._fmap_cache[f] = out
        return out

    def unit_elem(self, X, x):
        return self._unit(tuple(X), x)

    def unit(self, X) -> FinMap:
        X = skeleton(X) if isinstance(X, int) else tuple(X)
        hit = self._unit_cache.get(X)
        if hit is None:
            hit = FinMap(X, self.obj(X), tuple(self._unit(X, x) for x in X))
            self._unit_cache[X] = hit
        return hit

    def power(self, X, k: int) -> tuple:
        X = skeleton(X) if isinstance(X, int) else tuple(X)
        for _ in range(k):
            X = self.obj(X)
        return X

    def power_size(self, n: int, k: int) -> int | None:
        """|F^k(X)| for |X| = n, if every step has a closed form."""
        for _ in range(k):
            c = self.card(n)
            if c is None:
                return None
            n = c
            if n > 10**30:
                return n
        return n

    def power_map(self, f: FinMap, k: int) -> FinMap:
        for _ in range(k):
            f = self.fmap(f)
        return f

    def apply_power(self, f: FinMap, k: int, t):
        """F^k(f) applied to one element, materializing only F^(k-1)(f)."""
        if k == 0:
            return f(t)
        return self._apply(self.power_map(f, k - 1), t)

    def __repr__(self):
        return f"<{self.name}>"


class TableMonad(CoaugmentedFunctor):
    """A monad: adds the multiplication hook ``_mult(X, tt)`` for tt in T(T(X))."""

    name = "monad"

    def __init__(self):
        super().__init__()
        self._mult_cache: dict = {}

    def _mult(self, X: tuple, tt):
        raise NotImplementedError

    def mult_elem(self, X, tt):
        return self._mult(tuple(X), tt)

    def mult(self, X) -> FinMap:
        X = skeleton(X) if isinstance(X, int) else tuple(X)
        hit = self._mult_cache.get(X)
        if hit is None:
            TX = self.obj(X)
            TTX = self.obj(TX)
            hit = FinMap(TTX, TX, tuple(self._mult(X, tt) for tt in TTX))
            self._mult_cache[X] = hit
        return hit

    def mult_power(self, X, k: int, t):
        """mu^(k): T^k(X) -> T(X) on one element (k=0 is eta, k=1 the identity)."""
        X = tuple(X)
        if k == 0:
            return self._unit(X, t)
        if k == 1:
            return t
        inner = FinMap.from_fn(self.power(X, k - 1), self.obj(X), lambda u: self.mult_power(X, k - 1, u))
        return self._mult(X, self._apply(inner, t))


def ensure_budget_power(M: CoaugmentedFunctor, n: int, k: int, what: str) -> None:
    size = M.power_size(n, k)
    if size is not None:
        check_budget(size, what)


__all__ = ["CoaugmentedFunctor", "TableMonad", "TableError", "ResourceLimitError", "guard_limit", "ensure_budget_power"]
