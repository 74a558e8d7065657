"""
Verification suite tests
"""

import pytest

from config.settings import ForgeConfig
from controllers.verify_controller import (
    STATEMENTS,
    SUITES,
    VerifyInstance,
    resolve_suites,
    run_suites,
    suite_names,
)
from utils.errors import ExhaustiveCapError

ALL_SUITES = [
    "axioms",
    "bruhat-subword",
    "coset-representatives",
    "reduced-words",
    "demazure-containment",
    "extremal-demazure",
    "ideal-demazure",
    "principal-demazure",
    "extremal-lattice",
    "extremal-connected",
    "path-property",
    "ideal-union",
    "ideal-containment",
    "ideal-classification",
    "ideal-intersection",
    "cross-check",
    "atom-strings",
    "atom-partition",
    "demazure-classification",
    "character-criterion",
]

# Every structure statement the suites stand for, by the names verify accepts
STATEMENT_NAMES = [
    "thm:ideal",
    "thm:atom-positive",
    "thm:demazure",
    "theoremA",
    "theoremB",
    "theoremC",
    "atoms",
    "prop4.4",
    "prop5.3",
    "prop5.6",
    "prop6.2",
    "prop7.3",
    "lem3.4",
    "lem3.5",
    "lem4.3",
    "lem4.5",
    "lem5.2",
    "lem5.4",
    "lem6.3",
    "remark4.2",
]


def _by_name(results):
    return {r.name: r for r in results}


def test_registry():
    assert suite_names() == ALL_SUITES
    exhaustive = {name for name, (_, _, flag) in SUITES.items() if flag}
    assert exhaustive == {"ideal-classification", "demazure-classification", "character-criterion"}


def test_all_suites_pass_on_sl3(b21):
    results = _by_name(run_suites(b21))
    for name, result in results.items():
        assert result.passed, (name, result.failures)
        assert not result.skipped
    assert results["ideal-classification"].summary == (
        "8 ideal subsets = 8 sets B_I (8 nonempty lower ideals)"
    )
    assert results["demazure-classification"].summary == "6 Demazure subsets = 6 cosets of W"
    assert results["atom-partition"].summary == "atom sizes 1,1,1,2,2,1 sum to 8"
    assert results["axioms"].summary == "8 elements, 6 extremal"


def test_all_suites_pass_at_singular_weight(b1):
    results = _by_name(run_suites(b1))
    assert all(r.passed for r in results.values())
    assert results["ideal-classification"].summary == (
        "3 ideal subsets = 3 sets B_I (8 nonempty lower ideals)"
    )
    assert results["demazure-classification"].summary == "3 Demazure subsets = 3 cosets of W"


@pytest.mark.parametrize("fixture", ["b2_vector", "b2_spin"])
def test_all_suites_pass_on_loaded_b2(request, fixture):
    graph = request.getfixturevalue(fixture)
    results = run_suites(graph)
    failed = [(r.name, r.failures) for r in results if not r.passed]
    assert failed == []


def test_selected_suites(b21):
    results = run_suites(b21, ["axioms", "path-property"])
    assert [r.name for r in results] == ["axioms", "path-property"]
    with pytest.raises(KeyError):
        run_suites(b21, ["no-such-suite"])


def test_exhaustive_cap(b21, monkeypatch):
    monkeypatch.setattr(ForgeConfig, "EXHAUSTIVE_CAP", 4)
    results = _by_name(run_suites(b21))
    skipped = {name for name, r in results.items() if r.skipped}
    assert skipped == {"ideal-classification", "demazure-classification", "character-criterion"}
    assert all(r.passed for r in results.values())
    assert results["cross-check"].checked == 255

    with pytest.raises(ExhaustiveCapError):
        run_suites(b21, ["ideal-classification"])
    forced = run_suites(b21, ["ideal-classification"], force=True)
    assert forced[0].passed and not forced[0].skipped


def test_sampling_is_seeded(b210, monkeypatch):
    monkeypatch.setattr(ForgeConfig, "RANDOM_SAMPLES", 50)
    first = [s.members for s in VerifyInstance(b210).sampled_subsets()]
    second = [s.members for s in VerifyInstance(b210).sampled_subsets()]
    assert len(first) == 50
    assert first == second


def test_result_document(b21):
    doc = run_suites(b21, ["axioms"])[0].to_dict()
    assert set(doc) == {"name", "passed", "skipped", "checked", "summary", "failures"}
    assert doc["failures"] == []


def test_every_statement_has_a_suite():
    for name in STATEMENT_NAMES:
        resolved = resolve_suites([name])
        assert resolved, name
        assert all(s in SUITES for s in resolved), name
    assert set(STATEMENTS) >= set(STATEMENT_NAMES)


def test_statement_names_run_their_suites(b21):
    results = run_suites(b21, ["theoremC"])
    assert [r.name for r in results] == ["ideal-classification"]
    assert results[0].passed
    results = run_suites(b21, ["atoms", "atom-partition", "thm:ideal"])
    assert [r.name for r in results] == ["atom-strings", "atom-partition", "ideal-classification"]
    with pytest.raises(KeyError):
        resolve_suites(["theoremZ"])


def test_atom_suites_bounded_by_w(b21):
    results = _by_name(run_suites(b21, ["atoms"], top=[2, 1]))
    assert results["atom-strings"].passed
    assert results["atom-strings"].summary == "4 atoms"
    assert results["atom-partition"].passed
    assert results["atom-partition"].summary == "atom sizes 1,1,1,2 sum to 5"


def test_sample_reaches_both_sides_of_the_ideal_condition(b210):
    records = VerifyInstance(b210).sample
    extremal = [r for r in records if r.extremal]
    assert any(r.ideal_global for r in extremal)
    assert any(not r.ideal_global for r in extremal)
    assert all(r.ideal_local == r.ideal_global for r in records)
