"""Spot-checking the hypotheses the calculus rests on.

Everything upstream assumed three things about the acting semigroup:
injectivity, common left multiples, and right cancellation.  The
verifier checks them extensionally for words up to a length bound on a
finite sample set -- refutations are hard, passes are "up to the bound".
"""

import json

from pseudoquotients import preset, presentation_from_config, search_ore_witness, verify

# The shift/refine semigroup: bounded search rediscovers its defining
# relation as the first common-multiple witness for the pair (d, t).
pres = preset("dyadic-steps", 3)
found = search_ore_witness(pres, ("d",), ("t",))
print("witness for (d, t):", found, " -- i.e. d o t == t^2 o d")

report = verify(preset("dyadic-steps", 4))
print("dyadic preset: injectivity",
      "pass" if report.injectivity.ok else "FAIL",
      "/ cancellation", "pass" if report.cancellation.ok else "FAIL",
      "(depth", report.depth_used, ")")

# A presentation that really does break right cancellation: doubling
# lands on even numbers, where the identity and the odd-shifter agree.
collapse = presentation_from_config({
    "domain": "int",
    "generators": [
        {"name": "dbl", "mul": 2, "add": 0},
        {"name": "idn", "mul": 1, "add": 0},
        {"name": "osh", "even": {"mul": 1, "add": 0}, "odd": {"mul": 1, "add": 2}},
    ],
    "samples": [-3, -2, -1, 0, 1, 2, 3],
    "max_depth": 2,
})
report = verify(collapse)
print("\ncollapsing presentation:")
print(json.dumps(report.to_json()["cancellation"], indent=2))
print("re-validated:", report.validated)

# The tower preset is honest about a structural fact: squeezes on
# floors an ascent has passed are invisible to points, so extensional
# cancellation fails there even though the element calculus (which
# works with normal forms) is right cancellative.  The (F, P2) pair
# also shows a witness can need a generator (P3) outside any finite
# generating set -- "not found within depth" is a result, not an error.
report = verify(preset("tower"))
print("\ntower preset cancellation:",
      json.dumps(report.to_json()["cancellation"]))
for entry in report.to_json()["ore"]:
    print("tower ore", entry)
