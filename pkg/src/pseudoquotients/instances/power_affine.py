"""Monomial maps ``x -> m * x**n`` acting on the positive integers.

The semigroup of all such maps (``m, n >= 1``) acts injectively on
``{1, 2, 3, ...}``: each map is strictly increasing.  Formal solutions of
``m * xi**n = x`` are n-th roots of positive rationals, so classes of this
instance are identified by a :class:`RootValue` -- ``(x/m, n)`` read as
the positive n-th root of ``x/m`` -- and two representatives are
equivalent exactly when their root values agree under the cross-power
rule ``q1**n2 == q2**n1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..core import DomainError, Instance, OreWitness, Pseudoquotient, UsageError

__all__ = ["PowerAffine", "PowerAffineMap", "RootValue"]


def _nth_root_exact(value: int, degree: int) -> int | None:
    """Exact integer ``degree``-th root of ``value >= 0``, or None."""
    if value < 0:
        return None
    if value in (0, 1) or degree == 1:
        return value
    lo, hi = 0, 1
    while hi**degree < value:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**degree < value:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**degree == value else None


@dataclass(frozen=True)
class PowerAffineMap:
    """The map ``x -> multiplier * x**exponent`` with both parameters >= 1.

    The parameters are recoverable from the action (evaluate at 1 and 2),
    so structural equality of maps coincides with equality of the denoted
    functions.
    """

    multiplier: int
    exponent: int

    def __post_init__(self):
        if not isinstance(self.multiplier, int) or not isinstance(self.exponent, int):
            raise DomainError("multiplier and exponent must be integers")
        if self.multiplier < 1:
            raise DomainError(f"multiplier must be >= 1, got {self.multiplier}")
        if self.exponent < 1:
            raise DomainError(f"exponent must be >= 1, got {self.exponent}")


@dataclass(frozen=True, eq=False)
class RootValue:
    """The positive ``index``-th root of a nonnegative rational ``radicand``.

    Equality follows the value, not the representation:
    ``RootValue(q1, n1) == RootValue(q2, n2)`` iff ``q1**n2 == q2**n1``,
    so ``RootValue(4, 2) == RootValue(2, 1)``.  :meth:`reduced` returns
    the unique representative of minimal index.
    """

    radicand: Fraction
    index: int

    def __post_init__(self):
        object.__setattr__(self, "radicand", Fraction(self.radicand))
        if self.index < 1:
            raise DomainError(f"root index must be >= 1, got {self.index}")
        if self.radicand < 0:
            raise DomainError("radicand must be nonnegative")

    def __eq__(self, other):
        if not isinstance(other, RootValue):
            return NotImplemented
        return self.radicand**other.index == other.radicand**self.index

    def __hash__(self):
        low = self.reduced()
        return hash((low.radicand, low.index))

    def reduced(self) -> RootValue:
        """Strip common powers: the equal root value of smallest index."""
        if self.index == 1:
            return self
        num, den = self.radicand.numerator, self.radicand.denominator
        for d in range(self.index, 1, -1):
            if self.index % d:
                continue
            root_num = _nth_root_exact(num, d)
            root_den = _nth_root_exact(den, d)
            if root_num is not None and root_den is not None:
                return RootValue(Fraction(root_num, root_den), self.index // d)
        return self


class PowerAffine(Instance):
    """The monomial-map instance on the positive integers."""

    name = "power-affine"

    def _check_element(self, f) -> PowerAffineMap:
        if not isinstance(f, PowerAffineMap):
            raise UsageError(f"expected a PowerAffineMap, got {type(f).__name__}")
        return f

    def _check_point(self, x) -> int:
        if not isinstance(x, int):
            raise UsageError(f"expected a positive integer point, got {type(x).__name__}")
        if x < 1:
            raise UsageError(f"point must be a positive integer, got {x}")
        return x

    def compose(self, f, g):
        self._check_element(f)
        self._check_element(g)
        # f(g(x)) = mf * (mg * x**ng)**nf = mf * mg**nf * x**(nf*ng)
        return PowerAffineMap(
            f.multiplier * g.multiplier**f.exponent, f.exponent * g.exponent
        )

    def apply(self, f, x):
        self._check_element(f)
        self._check_point(x)
        return f.multiplier * x**f.exponent

    def ore_complete(self, f, g):
        self._check_element(f)
        self._check_element(g)
        # (a^q, p) o (b, q) == (b^p, q) o (a, p) == (a^q b^p, p q)
        return OreWitness(
            PowerAffineMap(f.multiplier**g.exponent, f.exponent),
            PowerAffineMap(g.multiplier**f.exponent, g.exponent),
        )

    def canonical_value(self, p: Pseudoquotient) -> RootValue:
        f = self._check_element(p.denominator)
        x = self._check_point(p.numerator)
        return RootValue(Fraction(x, f.multiplier), f.exponent)

    @property
    def designated_element(self) -> PowerAffineMap:
        return PowerAffineMap(1, 1)

    def random_element(self, rng: random.Random) -> PowerAffineMap:
        return PowerAffineMap(rng.randint(1, 4), rng.randint(1, 3))

    def random_point(self, rng: random.Random) -> int:
        return rng.randint(1, 30)
