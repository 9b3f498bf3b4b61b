"""Free tropical semifield on r generators.

An element is an integer exponent vector of length r: multiplication adds
vectors, tropical addition takes componentwise minima, and the identity is
the zero vector.  The trivial (one-element) semifield is exactly the r = 0
case, so a single code path serves both coefficient-free and geometric-type
patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class TropicalElement:
    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @classmethod
    def identity(cls, rank: int) -> "TropicalElement":
        return cls((0,) * rank)

    @classmethod
    def generator(cls, rank: int, index: int) -> "TropicalElement":
        exps = [0] * rank
        exps[index] = 1
        return cls(tuple(exps))

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def _check(self, other: "TropicalElement") -> None:
        if len(self.exponents) != len(other.exponents):
            raise ValueError("tropical elements have different ranks")

    def __mul__(self, other: "TropicalElement") -> "TropicalElement":
        self._check(other)
        return TropicalElement(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def inverse(self) -> "TropicalElement":
        return TropicalElement(tuple(-a for a in self.exponents))

    def __pow__(self, k: int) -> "TropicalElement":
        return TropicalElement(tuple(a * k for a in self.exponents))

    def oplus(self, other: "TropicalElement") -> "TropicalElement":
        """Tropical addition: componentwise minimum of exponents."""
        self._check(other)
        return TropicalElement(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def one_oplus(self) -> "TropicalElement":
        """1 (+) self, i.e. componentwise min(0, e_i)."""
        return TropicalElement(tuple(min(0, a) for a in self.exponents))

    def split_pm(self) -> Tuple["TropicalElement", "TropicalElement"]:
        """Split as (plus, minus) with self = plus * minus^{-1}.

        plus = self / (1 (+) self) has exponents max(0, e_i); minus is
        1 / (1 (+) self) with exponents max(0, -e_i); plus (+) minus is the
        identity (the two parts have disjoint support).
        """
        h = self.one_oplus()
        plus = TropicalElement(tuple(a - b for a, b in zip(self.exponents, h.exponents)))
        minus = h.inverse()
        return plus, minus
