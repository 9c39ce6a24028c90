"""The shift/refine semigroup acting on rational step functions.

Points are finitely supported step functions on unit intervals starting
at 0: a coefficient tuple ``(c0, ..., cN)`` denotes the function with
value ``ck`` on ``[k, k+1)``.  Two generators act on them:

* ``t`` (shift): prepend one zero coefficient, i.e. translate right by 1;
* ``d`` (refine): send the value ``c`` on ``[k, k+1)`` to ``c/2`` on
  ``[2k, 2k+2)`` -- each coefficient becomes two halved copies.

They satisfy ``d o t == t^2 o d`` (a shifted function, once refined, is
shifted twice as far), so every word in them has the unique normal form
``t^m o d^n``, represented by :class:`DyadicStepMap`.  Normal forms
multiply by ``(m1, n1) o (m2, n2) = (m1 + 2**n1 * m2, n1 + n2)`` and the
uniqueness of the normal form gives right cancellation.

Formal solutions live on finer dyadic grids and may extend left of 0:
inverting ``t^m d^n`` on a function ``x`` yields
``xi(s) = 2**n * x(2**n * s + m)``, a step function on the grid of width
``2**-n`` starting at cell ``-m``.  :class:`DyadicStepValue` stores that
solution in a normalized form (trimmed, coarsest possible grid), which
makes class equality a structural comparison.  Both generators preserve
the integral and the L1 norm, so a class inherits both from any of its
numerators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..core import DomainError, Instance, OreWitness, Pseudoquotient, UsageError

__all__ = ["DyadicStepMap", "DyadicSteps", "DyadicStepValue", "StepFunction"]


@dataclass(frozen=True)
class StepFunction:
    """A finitely supported step function on ``[0, 1), [1, 2), ...``.

    Coefficients are exact rationals; trailing zeros are trimmed so the
    representation is unique.  The zero function has no coefficients.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    def integral(self) -> Fraction:
        return sum(self.coefficients, Fraction(0))

    def l1_norm(self) -> Fraction:
        return sum((abs(c) for c in self.coefficients), Fraction(0))


@dataclass(frozen=True)
class DyadicStepMap:
    """The normal form ``t^shift o d^halvings``; both exponents >= 0."""

    shift: int = 0
    halvings: int = 0

    def __post_init__(self):
        if not isinstance(self.shift, int) or self.shift < 0:
            raise DomainError(f"shift exponent must be a nonnegative integer, got {self.shift}")
        if not isinstance(self.halvings, int) or self.halvings < 0:
            raise DomainError(
                f"refine exponent must be a nonnegative integer, got {self.halvings}"
            )


@dataclass(frozen=True)
class DyadicStepValue:
    """A step function on the grid ``2**-scale * Z``, normalized.

    ``values[j]`` is the value on
    ``[(start + j) * 2**-scale, (start + j + 1) * 2**-scale)``.
    Normalization trims zeros at both ends and coarsens the grid while
    adjacent cells pair up, so equal functions have equal fields and the
    zero function is ``(scale=0, start=0, values=())``.
    """

    scale: int
    start: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.scale < 0:
            raise DomainError("scale must be nonnegative")
        scale, start = self.scale, self.start
        values = [Fraction(v) for v in self.values]
        while values and values[-1] == 0:
            values.pop()
        while values and values[0] == 0:
            values.pop(0)
            start += 1
        while (
            scale > 0
            and values
            and start % 2 == 0
            and len(values) % 2 == 0
            and all(values[i] == values[i + 1] for i in range(0, len(values), 2))
        ):
            values = values[::2]
            start //= 2
            scale -= 1
        if not values:
            scale, start = 0, 0
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "values", tuple(values))

    def integral(self) -> Fraction:
        cell = Fraction(1, 2**self.scale)
        return sum(self.values, Fraction(0)) * cell

    def l1_norm(self) -> Fraction:
        cell = Fraction(1, 2**self.scale)
        return sum((abs(v) for v in self.values), Fraction(0)) * cell


class DyadicSteps(Instance):
    """The shift/refine instance on rational step functions."""

    name = "dyadic-steps"

    def _check_element(self, f) -> DyadicStepMap:
        if not isinstance(f, DyadicStepMap):
            raise UsageError(f"expected a DyadicStepMap, got {type(f).__name__}")
        return f

    def _check_point(self, x) -> StepFunction:
        if not isinstance(x, StepFunction):
            raise UsageError(f"expected a StepFunction, got {type(x).__name__}")
        return x

    def compose(self, f, g):
        self._check_element(f)
        self._check_element(g)
        # moving d^n1 past t^m2 doubles the shift n1 times
        return DyadicStepMap(f.shift + 2**f.halvings * g.shift, f.halvings + g.halvings)

    def apply(self, f, x):
        self._check_element(f)
        self._check_point(x)
        blow = 2**f.halvings
        refined = tuple(c / blow for c in x.coefficients for _ in range(blow))
        return StepFunction((Fraction(0),) * f.shift + refined)

    def ore_complete(self, f, g):
        self._check_element(f)
        self._check_element(g)
        if f.halvings <= g.halvings:
            gap = g.halvings - f.halvings
            return OreWitness(
                DyadicStepMap(2**gap * f.shift, 0),
                DyadicStepMap(g.shift, gap),
            )
        gap = f.halvings - g.halvings
        lifted = 2**gap * g.shift
        # smallest witness: cancel the common shift part
        return OreWitness(
            DyadicStepMap(max(0, f.shift - lifted), gap),
            DyadicStepMap(max(0, lifted - f.shift), 0),
        )

    def canonical_value(self, p: Pseudoquotient) -> DyadicStepValue:
        """Invert the denominator: ``xi(s) = 2**n * x(2**n * s + m)``."""
        f = self._check_element(p.denominator)
        x = self._check_point(p.numerator)
        blow = 2**f.halvings
        return DyadicStepValue(
            scale=f.halvings,
            start=-f.shift,
            values=tuple(c * blow for c in x.coefficients),
        )

    def integral(self, value) -> Fraction:
        """Integral of a step function, a solution value, or a class."""
        if isinstance(value, Pseudoquotient):
            return self._check_point(value.numerator).integral()
        if isinstance(value, (StepFunction, DyadicStepValue)):
            return value.integral()
        raise UsageError(f"cannot integrate {type(value).__name__}")

    def l1_norm(self, value) -> Fraction:
        """L1 norm of a step function, a solution value, or a class."""
        if isinstance(value, Pseudoquotient):
            return self._check_point(value.numerator).l1_norm()
        if isinstance(value, (StepFunction, DyadicStepValue)):
            return value.l1_norm()
        raise UsageError(f"cannot take the norm of {type(value).__name__}")

    @property
    def designated_element(self) -> DyadicStepMap:
        return DyadicStepMap(0, 0)

    def random_element(self, rng: random.Random) -> DyadicStepMap:
        return DyadicStepMap(rng.randint(0, 3), rng.randint(0, 2))

    def random_point(self, rng: random.Random) -> StepFunction:
        pool = (
            Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0),
            Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3),
        )
        return StepFunction(tuple(rng.choice(pool) for _ in range(rng.randint(0, 3))))
