"""Finite commutative rings."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from ..fincat import Report


@dataclass(frozen=True)
class FiniteRing:
    elements: tuple
    add_table: tuple  # add_table[i][j] = index of elements[i] + elements[j]
    mul_table: tuple
    zero: int = 0
    one: int = 1
    name: str = ""

    @property
    def size(self) -> int:
        return len(self.elements)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def sum(self, xs) -> int:
        out = self.zero
        for x in xs:
            out = self.add_table[out][x]
        return out

    def validate(self) -> Report:
        R = range(self.size)
        problems = []
        for a, b in itertools.product(R, R):
            if self.add(a, b) != self.add(b, a):
                problems.append(f"addition not commutative at {a},{b}")
            if self.mul(a, b) != self.mul(b, a):
                problems.append(f"multiplication not commutative at {a},{b}")
        for a in R:
            if self.add(a, self.zero) != a or self.mul(a, self.one) != a:
                problems.append(f"unit law fails at {a}")
            if not any(self.add(a, b) == self.zero for b in R):
                problems.append(f"{a} has no additive inverse")
        for a, b, c in itertools.product(R, R, R):
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)):
                problems.append(f"addition not associative at {a},{b},{c}")
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                problems.append(f"multiplication not associative at {a},{b},{c}")
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                problems.append(f"distributivity fails at {a},{b},{c}")
        return Report(not problems, problems)

    @staticmethod
    def zmod(n: int) -> "FiniteRing":
        if n < 2:
            raise ValueError("Z/n needs n >= 2")
        add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
        return FiniteRing(tuple(range(n)), add, mul, 0, 1, f"Z/{n}")

    @staticmethod
    def from_tables(elements, add, mul, zero, one, name: str = "") -> "FiniteRing":
        idx = {e: i for i, e in enumerate(elements)}
        add_t = tuple(tuple(idx[add[a][b]] for b in elements) for a in elements)
        mul_t = tuple(tuple(idx[mul[a][b]] for b in elements) for a in elements)
        return FiniteRing(tuple(range(len(elements))), add_t, mul_t, idx[zero], idx[one], name)

    @staticmethod
    def parse(text: str) -> "FiniteRing":
        m = re.fullmatch(r"\s*Z/(\d+)\s*", text)
        if not m:
            raise ValueError(f"unknown ring {text!r}")
        return FiniteRing.zmod(int(m.group(1)))


__all__ = ["FiniteRing"]
