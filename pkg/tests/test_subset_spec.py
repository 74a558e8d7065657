"""
Subset specification language tests
"""

import pytest

from models.demazure import AtomSubset, DemazureSubset, IdealSubset
from utils.subset_spec import parse_subset_spec, resolve_subset
from utils.errors import SubsetSpecError

from conftest import B, F1B, F2B, F2F2F1B, LOWEST


def test_parse_items():
    items = parse_subset_spec("hw; f1 @hw; f2 f1 @hw")
    assert items == [("path", ()), ("path", ("1",)), ("path", ("2", "1"))]
    assert parse_subset_spec("demazure [2,1]") == [("demazure", (2, 1))]
    assert parse_subset_spec("ideal [[1],[2]]") == [("ideal", [(1,), (2,)])]
    assert parse_subset_spec("demazure []") == [("demazure", ())]


def test_resolve_paths(b21, x1):
    subset = resolve_subset(b21, "hw; f1 @hw; f2 @hw")
    assert subset.members == x1.members
    assert subset.provenance() == {"kind": "explicit", "source": "hw; f1 @hw; f2 @hw"}
    assert resolve_subset(b21, "f2 f2 f1 @hw").members == {F2F2F1B}


def test_resolve_typed_items(b21):
    subset = resolve_subset(b21, "demazure [2,1]")
    assert isinstance(subset, DemazureSubset)
    assert len(subset) == 5
    subset = resolve_subset(b21, "ideal [[1],[2]]")
    assert isinstance(subset, IdealSubset)
    assert subset.members == {B, F1B, F2B}
    assert not isinstance(subset, AtomSubset)


def test_resolve_raw_and_all(b21):
    assert resolve_subset(b21, f'"{LOWEST}"').members == {LOWEST}
    assert len(resolve_subset(b21, "all")) == 8
    with pytest.raises(SubsetSpecError):
        resolve_subset(b21, '"[[9]]"')


def test_path_off_the_crystal(b21):
    with pytest.raises(SubsetSpecError) as info:
        resolve_subset(b21, "f1 f1 @hw")
    assert info.value.step == "f1 f1 @hw"


def test_syntax_errors(b21):
    for text in ["", "hw;;", "f1", "demazure 2,1", "ideal []", "@hw"]:
        with pytest.raises(SubsetSpecError):
            resolve_subset(b21, text)
