"""Acceptance suite: the full contract, at scale, with zero tolerance.

Every check is exact (integers and rationals, no floats), so every
criterion is pass/fail with no numeric slack.  Run

    pytest tests/test_acceptance.py -v -s

to see one line per criterion.  Total runtime is well under a minute.
"""

import json
import random
from fractions import Fraction
from pathlib import Path

from pseudoquotients import (
    AffineLattice,
    DyadicStepMap,
    DyadicSteps,
    GroupFraction,
    PowerAffine,
    Pseudoquotient,
    StepFunction,
    Tower,
    TowerPoint,
    default_tower_config,
    frac_inverse,
    preset,
    search_ore_witness,
    verify,
)
from pseudoquotients.cli import main as cli_main

FIXTURE = str(Path(__file__).resolve().parent.parent / "fixtures" / "cancellation_fail.json")

INSTANCES = {
    "power-affine": PowerAffine(),
    "affine-lattice": AffineLattice(2),
    "dyadic-steps": DyadicSteps(),
    "tower": Tower(),
}


def finish(criterion, failures, checks, text):
    status = "PASS" if failures == 0 else "FAIL"
    print(f"\ncriterion {criterion}: {status} [{checks - failures}/{checks} checks] {text}")
    assert failures == 0, f"criterion {criterion}: {failures} of {checks} checks failed"


def test_criterion_1_equivalence_relation():
    failures = checks = 0
    for name, inst in INSTANCES.items():
        rng = random.Random(f"c1:{name}")
        for _ in range(1000):
            p = inst.random_pseudoquotient(rng)
            q = inst.pq_left_multiply(p, inst.random_element(rng))
            r = inst.pq_left_multiply(q, inst.random_element(rng))
            unrelated = inst.random_pseudoquotient(rng)
            results = (
                inst.pq_equivalent(p, p),                       # reflexivity
                inst.pq_equivalent(p, q) and inst.pq_equivalent(q, p),
                inst.pq_equivalent(p, unrelated) == inst.pq_equivalent(unrelated, p),
                inst.pq_equivalent(q, r) and inst.pq_equivalent(p, r),  # transitivity
            )
            checks += len(results)
            failures += sum(not ok for ok in results)
    finish(1, failures, checks, "reflexive/symmetric/transitive on 1000 cases per instance")


def test_criterion_2_lemma_suite():
    failures = checks = 0
    for name, inst in INSTANCES.items():
        rng = random.Random(f"c2:{name}")
        for _ in range(500):
            x = inst.random_point(rng)
            f, g, h = (inst.random_element(rng) for _ in range(3))
            results = []

            # common-point representatives agree: (f x)/f ~ (g x)/g
            pf = Pseudoquotient(inst.apply(f, x), f)
            pg = Pseudoquotient(inst.apply(g, x), g)
            results.append(inst.pq_equivalent(pf, pg))

            # if (f x)/f ~ y/g then y = g x (tried for a matching and a fresh y)
            for y in (inst.apply(g, x), inst.apply(g, inst.random_point(rng))):
                if inst.pq_equivalent(pf, Pseudoquotient(y, g)):
                    results.append(y == inst.apply(g, x))

            # the embedding is injective
            x2 = inst.random_point(rng)
            results.append(
                inst.pq_equivalent(inst.embed(x), inst.embed(x2)) == (x == x2)
            )

            # equivalence survives rescaling one side
            p = inst.random_pseudoquotient(rng)
            q = inst.pq_left_multiply(p, g)
            results.append(inst.pq_equivalent(p, inst.pq_left_multiply(q, h)))
            results.append(inst.pq_equivalent(p, inst.pq_left_multiply(p, g)))

            # witness independence: a lifted witness decides identically
            q2 = inst.random_pseudoquotient(rng)
            w = inst.ore_complete(p.denominator, q2.denominator)
            lifted_f = inst.compose(h, w.f_prime)
            lifted_g = inst.compose(h, w.g_prime)
            results.append(
                inst.compose(lifted_f, q2.denominator) == inst.compose(lifted_g, p.denominator)
            )
            first = inst.apply(w.f_prime, q2.numerator) == inst.apply(w.g_prime, p.numerator)
            second = inst.apply(lifted_f, q2.numerator) == inst.apply(lifted_g, p.numerator)
            results.append(first == second)

            # extension is well defined across witnesses
            out = inst.extend_apply(g, p)
            w = inst.ore_complete(p.denominator, g)
            lifted = Pseudoquotient(
                inst.apply(inst.compose(h, w.g_prime), p.numerator),
                inst.compose(h, w.f_prime),
            )
            results.append(inst.pq_equivalent(out, lifted))

            checks += len(results)
            failures += sum(not ok for ok in results)
    finish(2, failures, checks, "lemma properties, 500 exact trials per instance")


def test_criterion_3_extension_and_bijectivity():
    failures = checks = 0
    for name, inst in INSTANCES.items():
        rng = random.Random(f"c3:{name}")
        for _ in range(500):
            x = inst.random_point(rng)
            g = inst.random_element(rng)
            p = inst.random_pseudoquotient(rng)
            results = (
                inst.pq_equivalent(
                    inst.extend_apply(g, inst.embed(x)), inst.embed(inst.apply(g, x))
                ),
                inst.pq_equivalent(inst.extend_inverse_apply(g, inst.extend_apply(g, p)), p),
                inst.pq_equivalent(inst.extend_apply(g, inst.extend_inverse_apply(g, p)), p),
            )
            checks += len(results)
            failures += sum(not ok for ok in results)
    finish(3, failures, checks, "extension property and both inverse roundtrips, 500 per instance")


def test_criterion_4_group_suite():
    failures = checks = 0
    for name, inst in INSTANCES.items():
        rng = random.Random(f"c4:{name}")
        for _ in range(200):
            f1, f2, f3 = (inst.random_fraction(rng) for _ in range(3))
            identity = inst.frac_identity()
            results = [
                inst.frac_equal(
                    inst.frac_compose(f1, inst.frac_compose(f2, f3)),
                    inst.frac_compose(inst.frac_compose(f1, f2), f3),
                ),
                inst.frac_equal(inst.frac_compose(identity, f1), f1),
                inst.frac_equal(inst.frac_compose(f1, identity), f1),
                inst.frac_equal(inst.frac_compose(f1, frac_inverse(f1)), identity),
                inst.frac_equal(inst.frac_compose(frac_inverse(f1), f1), identity),
            ]

            # frac_equal agrees with pointwise action agreement on 100 samples
            if rng.random() < 0.5:
                padding = inst.random_element(rng)
                other = inst.frac_compose(GroupFraction(padding, padding), f1)
            else:
                other = inst.random_fraction(rng)
            claimed = inst.frac_equal(f1, other)
            agree = True
            for _ in range(100):
                p = inst.random_pseudoquotient(rng)
                if not inst.pq_equivalent(inst.frac_apply(f1, p), inst.frac_apply(other, p)):
                    agree = False
                    break
            results.append(claimed == agree)

            checks += len(results)
            failures += sum(not ok for ok in results)
    finish(4, failures, checks, "group laws and frac_equal vs action sampling, 200 per instance")


def test_criterion_5_ore_witness_validity():
    failures = checks = 0
    for name, inst in INSTANCES.items():
        rng = random.Random(f"c5:{name}")
        for _ in range(1000):
            f, g = inst.random_element(rng), inst.random_element(rng)
            checks += 1
            if not inst.witness_valid(f, g, inst.ore_complete(f, g)):
                failures += 1

    # affine witnesses: integral entries equal to the rational closed form
    rng = random.Random("c5:affine-exact")
    for _ in range(1000):
        dim = rng.randint(1, 3)
        inst = AffineLattice(dim)
        f, g = inst.random_element(rng), inst.random_element(rng)
        w = inst.ore_complete(f, g)
        m1 = _det_oracle(f.matrix)
        m2 = _det_oracle(g.matrix)
        inv1 = _inverse_oracle(f.matrix)
        inv2 = _inverse_oracle(g.matrix)
        expected_f = (
            tuple(tuple(m1 * m2 * e for e in row) for row in inv2),
            tuple(sum(m1 * m2 * inv1[i][j] * f.offset[j] for j in range(dim)) for i in range(dim)),
        )
        expected_g = (
            tuple(tuple(m1 * m2 * e for e in row) for row in inv1),
            tuple(sum(m1 * m2 * inv2[i][j] * g.offset[j] for j in range(dim)) for i in range(dim)),
        )
        integral = all(
            isinstance(e, int) for part in (w.f_prime, w.g_prime) for row in part.matrix for e in row
        ) and all(isinstance(e, int) for part in (w.f_prime, w.g_prime) for e in part.offset)
        checks += 1
        if not (
            integral
            and (w.f_prime.matrix, w.f_prime.offset) == expected_f
            and (w.g_prime.matrix, w.g_prime.offset) == expected_g
            and inst.witness_valid(f, g, w)
        ):
            failures += 1
    finish(5, failures, checks, "1000 exact witnesses per instance; affine entries integral per formula")


def _det_oracle(matrix):
    n = len(matrix)
    a = [[Fraction(e) for e in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return det


def _inverse_oracle(matrix):
    n = len(matrix)
    a = [
        [Fraction(e) for e in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for k in range(n):
        pivot = next(i for i in range(k, n) if a[i][k] != 0)
        a[k], a[pivot] = a[pivot], a[k]
        scale = a[k][k]
        a[k] = [e / scale for e in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                factor = a[i][k]
                a[i] = [e - factor * p for e, p in zip(a[i], a[k])]
    return tuple(tuple(row[n:]) for row in a)


def test_criterion_6_canonical_identification():
    failures = checks = 0
    for name in ("power-affine", "affine-lattice"):
        inst = INSTANCES[name]
        rng = random.Random(f"c6:{name}")
        for _ in range(1000):
            if rng.random() < 0.5:
                p = inst.random_pseudoquotient(rng)
                q = inst.pq_left_multiply(p, inst.random_element(rng))
            else:
                p = inst.random_pseudoquotient(rng)
                q = inst.random_pseudoquotient(rng)
            checks += 1
            if inst.pq_equivalent(p, q) != (inst.canonical_value(p) == inst.canonical_value(q)):
                failures += 1
    finish(6, failures, checks, "canonical equality iff equivalence, 1000 pairs per instance")


def test_criterion_7_dyadic_rewriting_soundness():
    dy = INSTANCES["dyadic-steps"]
    rng = random.Random("c7")
    pool = [dy.random_point(rng) for _ in range(100)]

    def letters_of(element):
        return "t" * element.shift + "d" * element.halvings

    def letter_apply(word, coeffs):
        for letter in reversed(word):
            if letter == "t":
                coeffs = [Fraction(0)] + coeffs
            else:
                coeffs = [half for c in coeffs for half in (c / 2, c / 2)]
        return StepFunction(coeffs)

    failures = checks = 0
    for _ in range(500):
        f = DyadicStepMap(rng.randint(0, 2), rng.randint(0, 2))
        g = DyadicStepMap(rng.randint(0, 2), rng.randint(0, 2))
        composite = dy.compose(f, g)
        word = letters_of(f) + letters_of(g)
        for x in pool:
            checks += 1
            if dy.apply(composite, x) != letter_apply(word, list(x.coefficients)):
                failures += 1

    # integral and L1-norm of a class equal those of its numerator, exactly
    for _ in range(500):
        p = dy.random_pseudoquotient(rng)
        value = dy.canonical_value(p)
        checks += 2
        if dy.integral(p) != value.integral() or dy.integral(p) != p.numerator.integral():
            failures += 1
        if dy.l1_norm(p) != value.l1_norm() or dy.l1_norm(p) != p.numerator.l1_norm():
            failures += 1
    finish(7, failures, checks, "normal forms match letter application; integral/norm invariant")


def test_criterion_8_verifier(capsys):
    failures = checks = 0

    # the defining relation is rediscovered by bounded search at depth <= 3
    pres = preset("dyadic-steps", 3)
    found = search_ore_witness(pres, ("d",), ("t",))
    checks += 1
    if found != (("d",), ("t", "t")):
        failures += 1

    report = verify(preset("dyadic-steps", 4))
    checks += 3
    if not report.injectivity.ok:
        failures += 1
    if not report.cancellation.ok:
        failures += 1
    if not report.validated:
        failures += 1

    # the shipped failing fixture: validated counterexample, exit code 3
    exit_code = cli_main(["verify", "--config", FIXTURE])
    out = capsys.readouterr().out
    payload = json.loads(out)
    checks += 3
    if exit_code != 3:
        failures += 1
    if payload["cancellation"]["status"] != "fail":
        failures += 1
    if payload["validated"] is not True:
        failures += 1
    finish(8, failures, checks, "relation found at depth<=3; preset passes at 4; fixture exits 3")


def test_criterion_9_tower():
    failures = checks = 0
    config = default_tower_config()
    rng = random.Random("c9")
    for level in range(1, 7):
        for _ in range(50):
            pt = TowerPoint(level, rng.randint(-50, 50))
            up = config.ascend(pt)
            inner = config.squeeze(pt)
            checks += 1
            if (
                up.level != level + 1
                or inner.level != level
                or config.ascend(inner) != config.squeeze(up)
            ):
                failures += 1

    tw = INSTANCES["tower"]
    for _ in range(500):
        f, g = tw.random_element(rng), tw.random_element(rng)
        x = tw.random_point(rng)
        checks += 1
        if tw.apply(tw.compose(f, g), x) != tw.apply(f, tw.apply(g, x)):
            failures += 1
    finish(9, failures, checks, "squares commute at levels 1..6; normal forms act pointwise")
