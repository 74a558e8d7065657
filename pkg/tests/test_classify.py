"""
Classification tests
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.classify import (
    classify_subset,
    is_demazure,
    is_demazure_by_character,
    is_extremal,
    is_ideal_global,
    is_ideal_local,
    is_principal,
    recover_ideal,
)
from models.crystal import CrystalGraph
from models.demazure import demazure_crystal, ideal_subset
from utils.errors import CharacterMismatchError, NotExtremalError, NotIdealError

from conftest import B, F1B, F2B, F2F1B, F2F2F1B


def test_extremal(b21, x1, x2):
    assert is_extremal(x1)
    assert is_extremal(x2)
    verdict = is_extremal(b21.subset([F1B]))
    assert not verdict
    assert verdict.witness == {"i": 1, "string": [B, F1B], "intersection": [F1B]}
    assert not is_extremal(b21.subset([]))


def test_ideal_local(b21, x1, x2):
    assert is_ideal_local(x1)
    verdict = is_ideal_local(x2)
    assert not verdict
    assert verdict.witness == {
        "condition": "ideal",
        "x": B,
        "y": F2F2F1B,
        "path": [1, 2],
        "escape": F2B,
    }
    for w in b21.weyl.elements():
        assert is_ideal_local(demazure_crystal(b21, w))


def test_ideal_global(b21, x1, x2):
    assert is_ideal_global(x1)
    assert not is_ideal_global(x2)
    assert is_ideal_global(b21.whole())


def test_recover_ideal(b21, x1, x2):
    weyl = b21.weyl
    assert recover_ideal(x1).generators == (weyl.element([1]), weyl.element([2]))
    assert recover_ideal(b21.subset([B])).generators == (weyl.identity,)
    assert recover_ideal(b21.whole()).generators == (weyl.longest_element(),)
    with pytest.raises(NotIdealError):
        recover_ideal(x2)


def test_recovered_ideal_rebuilds_subset(b1):
    for w in b1.weyl.elements():
        subset = demazure_crystal(b1, w)
        assert ideal_subset(b1, recover_ideal(subset)).members == subset.members


def test_principal(b21, x1, x2):
    weyl = b21.weyl
    assert not is_principal(x1)
    assert is_principal(x1).witness["maximal"] == [[1], [2]]
    verdict = is_principal(x2)
    assert verdict and verdict.w == weyl.element([2, 1])
    assert is_principal(b21.subset([B])).w == weyl.identity
    with pytest.raises(NotExtremalError):
        is_principal(b21.subset([F1B]))


def test_demazure(b21, x1, x2):
    weyl = b21.weyl
    assert not is_demazure(x1)
    assert not is_demazure(x2)
    verdict = is_demazure(demazure_crystal(b21, weyl.element([2, 1])))
    assert verdict and verdict.w == weyl.element([2, 1])


def test_demazure_by_character(b21, x2):
    weyl = b21.weyl
    assert is_demazure_by_character(demazure_crystal(b21, weyl.element([1])), weyl.element([1]))
    with pytest.raises(CharacterMismatchError):
        is_demazure_by_character(x2, weyl.element([2, 1]))


def test_demazure_by_character_on_relabeled_copy(b21):
    doc = b21.to_dict()
    names = {b: f"t{k}" for k, b in enumerate(b21.elements)}
    for el in doc["elements"]:
        el["id"] = names[el["id"]]
    for edge in doc["edges"]:
        edge["src"], edge["dst"] = names[edge["src"]], names[edge["dst"]]
    copy = CrystalGraph.from_dict(doc)

    w = copy.weyl.element([2, 1])
    members = [names[b] for b in demazure_crystal(b21, b21.weyl.element([2, 1])).members]
    assert is_demazure_by_character(copy.subset(members), w)


def test_classification_reports(b21, x1, x2):
    report = classify_subset(x1)
    assert report["ideal"] and not report["principal"] and not report["demazure"]
    assert report["ideal_generators"] == [[1], [2]]
    assert report["witness"]["condition"] == "principal"

    report = classify_subset(x2)
    assert report["principal"] and not report["ideal"] and not report["demazure"]
    assert report["w"] == [2, 1]
    assert report["witness"]["escape"] == F2B

    report = classify_subset(b21.whole())
    assert report["demazure"] and report["w"] == [1, 2, 1]
    assert "witness" not in report


def test_singular_weight_classification(b1):
    found = []
    elements = b1.elements
    for mask in range(1, 1 << len(elements)):
        subset = b1.subset([b for k, b in enumerate(elements) if mask >> k & 1])
        if is_ideal_local(subset):
            found.append(subset)
            assert is_demazure(subset)
    assert len(found) == 3


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_local_and_global_agree_on_sl4(b210, data):
    tops = data.draw(st.lists(st.sampled_from(b210.weyl.elements()), min_size=1, max_size=3))
    members = set().union(*(demazure_crystal(b210, w).members for w in tops))
    toggled = data.draw(st.none() | st.sampled_from(b210.elements))
    if toggled is not None:
        members ^= {toggled}
    subset = b210.subset(members)
    assert is_ideal_local(subset).holds == is_ideal_global(subset).holds


def test_sl3_counterexample_inside_sl4(b210):
    subset = b210.subset([B, F1B, F2F1B, F2F2F1B])
    assert is_extremal(subset)
    assert is_principal(subset)
    verdict = is_ideal_local(subset)
    assert not verdict
    assert verdict.witness["escape"] == F2B
    assert not is_ideal_global(subset)


def test_local_and_global_agree_on_sl4_ideals(b210):
    weyl = b210.weyl
    for w in weyl.elements():
        subset = demazure_crystal(b210, w)
        assert is_ideal_local(subset) and is_ideal_global(subset)
        smaller = b210.subset(subset.members - {b210.extremal_of(w)})
        if len(smaller):
            assert is_ideal_local(smaller).holds == is_ideal_global(smaller).holds
