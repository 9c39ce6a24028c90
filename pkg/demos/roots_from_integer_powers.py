"""Square roots and beyond, built from integer monomial maps.

The maps x -> m*x^n (m, n >= 1) act injectively on the positive
integers.  Completing that action gives a space where every equation
m*xi^n = x has exactly one solution -- the positive n-th roots of
positive rationals -- without ever leaving exact arithmetic.
"""

from pseudoquotients import PowerAffine, PowerAffineMap, Pseudoquotient, frac_inverse

inst = PowerAffine()

# The equation 3*xi^2 = 12 has no positive-integer solution at first
# sight, but its class in the completion is perfectly concrete.
triple = PowerAffineMap(3, 2)          # x -> 3 x^2
solution = inst.solve(triple, 12)      # the formal class 12 / (3 x^2)
value = inst.canonical_value(solution)
print("solve 3*xi^2 = 12          ->", value, "=", value.reduced())

# Applying the map to its own solution recovers the embedded 12.
image = inst.extend_apply(triple, solution)
print("apply the map back         ->", inst.canonical_value(image).reduced())
print("equals embed(12)?          ->", inst.pq_equivalent(image, inst.embed(12)))

# Different representatives, one class: 12/(3 x^2) is sqrt(4) = 2.
two = Pseudoquotient(2, PowerAffineMap(1, 1))
print("12/(3x^2) ~ 2/(x)?         ->", inst.pq_equivalent(solution, two))

# Each map extends to a bijection; composing one with another map's
# inverse gives "multiply by a rational power" on the completion.
halve = frac_inverse(inst.frac_from_element(PowerAffineMap(2, 1)))
five_halves = inst.frac_apply(halve, inst.embed(5))
print("(x -> 2x)^-1 at embed(5)   ->", inst.canonical_value(five_halves).reduced())

# Common left multiples are what make all of this coherent: any two
# maps admit f', g' with f' o g == g' o f, in closed form here.
f, g = PowerAffineMap(2, 3), PowerAffineMap(5, 2)
witness = inst.ore_complete(f, g)
print("witness for", (f.multiplier, f.exponent), "and", (g.multiplier, g.exponent), "->",
      (witness.f_prime.multiplier, witness.f_prime.exponent),
      (witness.g_prime.multiplier, witness.g_prime.exponent))
print("f' o g == g' o f           ->", inst.compose(witness.f_prime, g) == inst.compose(witness.g_prime, f))
