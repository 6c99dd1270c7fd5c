"""The Fakir completion: the equalizer of T(eta) and eta_T, pointwise."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..util import FinMap, ResourceLimitError, skeleton
from .laws import window_maps
from .monad import CoaugmentedFunctor, TableMonad


class FakirFunctor(CoaugmentedFunctor):
    """M-hat(X) = {m in M(X) : M(eta_X)(m) = eta_M(X)(m)}, with M's action and unit."""

    def __init__(self, M: TableMonad):
        super().__init__()
        self.M = M
        self.name = f"fakir({M.name})"

    def _obj(self, X):
        M = self.M
        eta = M.unit(X)
        TX = M.obj(X)
        return [m for m in TX if M.apply(eta, m) == M.unit_elem(TX, m)]

    def _apply(self, f: FinMap, t):
        return self.M.apply(f, t)

    def _unit(self, X, x):
        return self.M.unit_elem(X, x)


def fakir(M: TableMonad) -> FakirFunctor:
    return FakirFunctor(M)


def fakir_oracle(M: TableMonad, X) -> tuple:
    """The same equalizer through the tabulated maps T(eta_X), eta_T(X): T(X) -> T^2(X)."""
    X = skeleton(X) if isinstance(X, int) else tuple(X)
    a = M.fmap(M.unit(X))
    b = M.unit(M.obj(X))
    return tuple(m for m, u, v in zip(a.dom, a.values, b.values) if u == v)


@dataclass
class FakirReport:
    monad: str
    window: list
    sizes: dict = field(default_factory=dict)  # n -> |M-hat(n)|
    unit_image_only: dict = field(default_factory=dict)  # n -> M-hat(n) == eta(n)
    problems: list = field(default_factory=list)
    resource: str = ""

    @property
    def ok(self) -> bool:
        return not self.problems and not self.resource


def fakir_report(M: TableMonad, window, cap: int = 5) -> FakirReport:
    """Subset invariance under every window map and unit factorization."""
    sizes = sorted(set(window))
    F = FakirFunctor(M)
    rep = FakirReport(M.name, sizes)
    try:
        for n in sizes:
            X = skeleton(n)
            sub = set(F.obj(X))
            rep.sizes[n] = len(sub)
            img = set(M.unit(X).values)
            rep.unit_image_only[n] = sub == img
            for x in X:
                if M.unit_elem(X, x) not in sub:
                    rep.problems.append(f"eta({x}) not in M-hat({n})")
        for h in window_maps(sizes):
            target = set(F.obj(h.cod))
            for m in F.obj(h.dom):
                if M.apply(h, m) not in target:
                    if len(rep.problems) < cap:
                        rep.problems.append(f"T({h.values}) leaves M-hat at {m!r}")
    except ResourceLimitError as exc:
        rep.resource = str(exc)
    return rep


def restriction_is_identity_like(M: TableMonad, X) -> bool:
    """M-hat(X) is exactly the eta-image and eta is injective."""
    X = skeleton(X) if isinstance(X, int) else tuple(X)
    eta = M.unit(X)
    return eta.is_injective() and set(FakirFunctor(M).obj(X)) == set(eta.values)


__all__ = ["FakirFunctor", "fakir", "fakir_oracle", "fakir_report", "FakirReport",
           "restriction_is_identity_like"]
