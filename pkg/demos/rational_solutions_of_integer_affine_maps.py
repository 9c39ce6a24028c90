"""The rational plane, reconstructed from integer affine maps.

Maps x -> Mx + b with integer entries and det M != 0 act injectively on
the integer lattice.  Their completion is the rational vector space:
every class has a unique exact solution M^-1 (x - b) in Q^n, and the
extended group is the full rational affine group -- reached here while
computing only with integers (adjugates and determinants, no division).
"""

from pseudoquotients import AffineLattice, AffineLatticeMap, frac_inverse

inst = AffineLattice(2)

shear = AffineLatticeMap(((1, 1), (0, 1)), (0, 0))
stretch = AffineLatticeMap(((2, 0), (0, 3)), (1, -1))

# 'solve' names the class of solutions of stretch(xi) = (4, 4);
# the canonical value is the exact rational vector.
solution = inst.solve(stretch, (4, 4))
print("solve (2x+1, 3y-1) = (4,4) ->", inst.canonical_value(solution))

# Common left multiples come from the closed form with adjugates;
# every entry of both witnesses is an integer, by construction.
witness = inst.ore_complete(shear, stretch)
print("f' =", witness.f_prime)
print("g' =", witness.g_prime)
print("f' o g == g' o f?          ->",
      inst.compose(witness.f_prime, stretch) == inst.compose(witness.g_prime, shear))

# The extension of a map and its fraction inverse undo each other.
p = inst.embed((5, -2))
forward = inst.extend_apply(shear, p)
back = inst.extend_inverse_apply(shear, forward)
print("shear then unshear (5,-2)  ->", inst.canonical_value(back))

# Group fractions reach genuinely rational maps: halving both axes.
halve = frac_inverse(inst.frac_from_element(AffineLatticeMap(((2, 0), (0, 2)), (0, 0))))
print("halve embed(5,-2)          ->", inst.canonical_value(inst.frac_apply(halve, p)))

# Equivalence is decidable with a single witness: these two pairs both
# name the point (2, 1), and the canonical values agree.
left = inst.solve(AffineLatticeMap(((2, 0), (0, 1)), (1, 0)), (5, 1))
right = inst.solve(AffineLatticeMap(((3, 0), (0, 2)), (0, -1)), (6, 1))
print("canonical(left)            ->", inst.canonical_value(left))
print("canonical(right)           ->", inst.canonical_value(right))
print("equivalent?                ->", inst.pq_equivalent(left, right))
