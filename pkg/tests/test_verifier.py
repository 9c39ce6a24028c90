"""Bounded verifier: deterministic search results, presets, and the failing fixture."""

import json
from pathlib import Path

import pytest

from pseudoquotients import (
    DomainError,
    DyadicStepMap,
    DyadicSteps,
    Presentation,
    UsageError,
    preset,
    presentation_from_config,
    search_ore_witness,
    verify,
    verify_injectivity,
    verify_right_cancellation,
)

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "cancellation_fail.json"


def int_presentation(gens, samples, depth):
    return Presentation(tuple(gens), tuple(samples), depth)


def test_dyadic_preset_finds_the_defining_relation():
    pres = preset("dyadic-steps", 3)
    found = search_ore_witness(pres, ("d",), ("t",))
    assert found == (("d",), ("t", "t"))
    # the witness words, read as normal forms, are exactly "refine" and "shift twice"
    dy = DyadicSteps()
    w1 = DyadicStepMap(0, 1)
    w2 = DyadicStepMap(2, 0)
    assert dy.compose(w1, DyadicStepMap(1, 0)) == dy.compose(w2, DyadicStepMap(0, 1))


def test_dyadic_preset_passes_at_depth_four():
    report = verify(preset("dyadic-steps", 4))
    assert report.injectivity.ok
    assert report.cancellation.ok
    assert report.validated
    assert not report.has_counterexample


def test_search_same_word_on_both_sides():
    pres = preset("dyadic-steps", 2)
    found = search_ore_witness(pres, ("d",), ("d",))
    assert found == (("d",), ("d",))


def test_search_commuting_generators_found_at_depth_one():
    gens = [("inc", lambda x: x + 1), ("jmp", lambda x: x + 5)]
    pres = int_presentation(gens, range(-3, 4), 2)
    assert search_ore_witness(pres, ("inc",), ("jmp",)) == (("inc",), ("jmp",))


def test_search_not_found_within_depth_then_found():
    gens = [("inc", lambda x: x + 1), ("dbl", lambda x: 2 * x)]
    shallow = int_presentation(gens, range(-4, 5), 1)
    assert search_ore_witness(shallow, ("inc",), ("dbl",)) is None
    deeper = int_presentation(gens, range(-4, 5), 2)
    # (inc inc) o dbl == dbl o inc == 2x + 2
    assert search_ore_witness(deeper, ("inc",), ("dbl",)) == (("inc", "inc"), ("dbl",))


def test_injectivity_flags_constant_generator():
    gens = [("zero", lambda x: 0)]
    result = verify_injectivity(int_presentation(gens, (1, 2), 2))
    assert not result.ok
    assert result.word == ("zero",)
    assert {result.left, result.right} == {1, 2}


def test_injectivity_failure_renders_in_report():
    config = {
        "domain": "int",
        "generators": [{"name": "zero", "mul": 0, "add": 0}],
        "samples": [1, 2],
        "max_depth": 2,
    }
    report = verify(presentation_from_config(config))
    assert report.has_counterexample and report.validated
    payload = report.to_json()
    assert payload["injectivity"]["status"] == "fail"
    assert payload["injectivity"]["word"] == ["zero"]
    assert {payload["injectivity"]["left"], payload["injectivity"]["right"]} == {"1", "2"}
    json.dumps(payload)  # fully serializable


def test_injectivity_needs_two_samples():
    gens = [("inc", lambda x: x + 1)]
    with pytest.raises(UsageError):
        verify_injectivity(int_presentation(gens, (1,), 2))


def test_injectivity_catches_collapse_off_samples():
    # every generator is injective on the samples themselves; only the
    # two-letter word sh-then-ab merges them, via the images -2 and 2
    gens = [("sh", lambda x: x - 3), ("ab", abs)]
    shallow = verify_injectivity(int_presentation(gens, (1, 5), 1))
    assert shallow.ok
    result = verify_injectivity(int_presentation(gens, (1, 5), 2))
    assert not result.ok
    assert result.word == ("ab", "sh")
    assert {result.left, result.right} == {1, 5}


def test_cancellation_passes_for_single_generator():
    gens = [("inc", lambda x: x + 1)]
    result = verify_right_cancellation(int_presentation(gens, range(5), 3))
    assert result.ok


def test_fixture_yields_validated_counterexample():
    config = json.loads(FIXTURE.read_text())
    report = verify(presentation_from_config(config))
    assert report.injectivity.ok
    assert not report.cancellation.ok
    assert (report.cancellation.f1, report.cancellation.f2, report.cancellation.g) == (
        ("idn",),
        ("osh",),
        ("dbl",),
    )
    assert report.validated
    assert report.has_counterexample
    # independent re-check of the reported triple
    gens = {"dbl": lambda x: 2 * x, "idn": lambda x: x, "osh": lambda x: x if x % 2 == 0 else x + 2}
    samples = config["samples"]
    assert [gens["idn"](gens["dbl"](s)) for s in samples] == [
        gens["osh"](gens["dbl"](s)) for s in samples
    ]
    assert [gens["idn"](s) for s in samples] != [gens["osh"](s) for s in samples]


def test_reports_are_deterministic():
    first = verify(preset("dyadic-steps", 3)).to_json()
    second = verify(preset("dyadic-steps", 3)).to_json()
    assert first == second
    third = verify(presentation_from_config(json.loads(FIXTURE.read_text()))).to_json()
    fourth = verify(presentation_from_config(json.loads(FIXTURE.read_text()))).to_json()
    assert third == fourth


@pytest.mark.parametrize("name", ["power-affine", "affine-lattice", "affine-lattice-2d"])
def test_instance_presets_pass(name):
    report = verify(preset(name))
    assert report.injectivity.ok
    assert report.cancellation.ok
    assert all(entry.found for entry in report.ore)
    assert report.validated


def test_affine_preset_witness_matches_closed_form():
    # search over words {a: x+1, b: 2x} reproduces the instance witness for (a, b)
    pres = preset("affine-lattice")
    assert search_ore_witness(pres, ("a",), ("b",)) == (("a", "a"), ("b",))


def test_tower_preset_is_honest_about_the_point_action():
    # On points, squeezes sitting below the ascent power are invisible:
    # P1 P2 and P2 agree on every image of F, so extensional cancellation
    # fails even though normal-form cancellation holds.  The verifier
    # must report that truthfully, with a validated counterexample.
    report = verify(preset("tower"))
    assert report.injectivity.ok
    assert not report.cancellation.ok
    assert report.validated
    by_pair = {(entry.f, entry.g): entry for entry in report.ore}
    assert by_pair[(("F",), ("P1",))].found  # the commuting square, as a witness
    assert by_pair[(("P1",), ("P2",))].found
    # (F, P2) needs the generator P3, which no finite generating set contains
    assert not by_pair[(("F",), ("P2",))].found


def test_custom_tower_rules_config():
    config = {
        "preset": "tower",
        "tower": {"ascend_add": 2, "squeeze_mul": 3},
        "max_depth": 2,
    }
    report = verify(presentation_from_config(config))
    assert report.injectivity.ok


def test_bad_tower_rules_rejected():
    config = {
        "preset": "tower",
        "tower": {"ascend_add": 1, "squeeze_mul": 2, "squeeze_level_coeff": 5},
    }
    with pytest.raises(DomainError):
        presentation_from_config(config)


def test_config_validation_errors():
    with pytest.raises(DomainError):
        presentation_from_config({"domain": "int"})
    with pytest.raises(DomainError):
        presentation_from_config({"domain": "int", "generators": [{"mul": 2}], "samples": [1]})
    with pytest.raises(DomainError):
        presentation_from_config({"preset": "no-such-thing"})
    with pytest.raises(DomainError):
        presentation_from_config(
            {"domain": "int", "generators": [{"name": "g", "even": {"mul": 2}}], "samples": [1, 2]}
        )


def test_report_json_shape():
    report = verify(preset("dyadic-steps", 3)).to_json()
    assert report["bounded"] is True
    assert report["depth_used"] == 3
    assert set(report) == {
        "presentation",
        "depth_used",
        "bounded",
        "samples",
        "injectivity",
        "ore",
        "cancellation",
        "validated",
    }
