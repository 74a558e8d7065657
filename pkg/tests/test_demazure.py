"""
Demazure crystal, ideal subset and atom tests
"""

from itertools import product

import pytest

from models.demazure import (
    atomic_decomposition,
    demazure_atom,
    demazure_closure,
    demazure_contains,
    demazure_crystal,
    ideal_intersection,
    ideal_subset,
)
from utils.errors import EmptyIdealError

from conftest import B, F1B, F2B, LOWEST


def test_demazure_examples(b21):
    weyl = b21.weyl
    assert demazure_crystal(b21, weyl.identity).members == {B}
    assert demazure_crystal(b21, weyl.element([1])).members == {B, F1B}
    assert len(demazure_crystal(b21, weyl.element([1, 2]))) == 5
    assert len(demazure_crystal(b21, weyl.element([2, 1]))) == 5
    assert demazure_crystal(b21, weyl.longest_element()).members == set(b21.elements)


def test_demazure_provenance(b1):
    weyl = b1.weyl
    subset = demazure_crystal(b1, weyl.element([2, 1, 2]))
    assert subset.w == weyl.element([2, 1])
    assert subset.to_dict()["provenance"] == {
        "kind": "demazure",
        "w": [2, 1],
        "requested": [1, 2, 1],
    }


def test_reduced_word_independence(b21, b210):
    for graph in (b21, b210):
        weyl = graph.weyl
        for w in weyl.elements():
            sets = {demazure_closure(graph, rex) for rex in weyl.all_reduced_words(w)}
            assert len(sets) == 1


def test_containment_matches_sets(b21, b1):
    for graph in (b21, b1):
        weyl = graph.weyl
        for u, w in product(weyl.elements(), repeat=2):
            literal = demazure_crystal(graph, u).members <= demazure_crystal(graph, w).members
            assert literal == demazure_contains(graph, u, w)


def test_containment_examples(b21, b1):
    weyl = b21.weyl
    assert demazure_contains(b1, b1.weyl.element([2]), b1.weyl.identity)
    assert not demazure_contains(b21, weyl.element([1, 2]), weyl.element([2, 1]))
    assert demazure_contains(b21, weyl.identity, weyl.element([2, 1]))


def test_ideal_subset_examples(b21, x1):
    weyl = b21.weyl
    generated = ideal_subset(b21, weyl.lower_ideal_close([weyl.element([1]), weyl.element([2])]))
    assert generated.members == x1.members
    assert generated.to_dict()["provenance"] == {"kind": "ideal", "generators": [[1], [2]]}
    principal = ideal_subset(b21, weyl.principal_ideal(weyl.element([2, 1])))
    assert principal.members == demazure_crystal(b21, weyl.element([2, 1])).members
    everything = ideal_subset(b21, weyl.lower_ideal_close(weyl.elements()))
    assert everything.members == set(b21.elements)


def test_empty_ideal(b21):
    with pytest.raises(EmptyIdealError):
        ideal_subset(b21, b21.weyl.lower_ideal_close([]))


def test_atom_sizes(b21):
    weyl = b21.weyl
    words = [[], [1], [2], [1, 2], [2, 1], [1, 2, 1]]
    sizes = [len(demazure_atom(b21, weyl.element(word))) for word in words]
    assert sizes == [1, 1, 1, 2, 2, 1]
    assert demazure_atom(b21, weyl.longest_element()).members == {LOWEST}


def test_atom_at_singular_weight(b1):
    weyl = b1.weyl
    assert demazure_atom(b1, weyl.element([2])).members == demazure_atom(b1, weyl.identity).members


def test_atomic_decomposition(b21):
    weyl = b21.weyl
    atoms = atomic_decomposition(b21, weyl.principal_ideal(weyl.identity))
    assert [a.members for a in atoms] == [{B}]

    atoms = atomic_decomposition(b21, weyl.lower_ideal_close([weyl.element([1]), weyl.element([2])]))
    assert [a.members for a in atoms] == [{B}, {F1B}, {F2B}]

    atoms = atomic_decomposition(b21, weyl.principal_ideal(weyl.longest_element()))
    assert len(atoms) == 6
    assert sum(len(a) for a in atoms) == 8


def test_atoms_partition_ideal_subsets(b21, b210):
    cases = [(b21, ideal) for ideal in b21.weyl.all_lower_ideals()]
    cases += [(b210, b210.weyl.principal_ideal(w)) for w in b210.weyl.elements()]
    for graph, ideal in cases:
        atoms = atomic_decomposition(graph, ideal)
        union = set().union(*(a.members for a in atoms))
        assert union == ideal_subset(graph, ideal).members
        assert sum(len(a) for a in atoms) == len(union)


def test_ideal_intersection_examples(b21, x1):
    weyl = b21.weyl
    a = weyl.principal_ideal(weyl.element([1, 2]))
    b = weyl.principal_ideal(weyl.element([2, 1]))
    assert ideal_intersection(b21, a, b).members == x1.members
    assert ideal_intersection(b21, a, a).members == ideal_subset(b21, a).members
    bottom = weyl.principal_ideal(weyl.identity)
    assert ideal_intersection(b21, bottom, b).members == {B}


def test_ideal_intersection_all_pairs(b21):
    ideals = b21.weyl.all_lower_ideals()
    for a, b in product(ideals, repeat=2):
        result = ideal_intersection(b21, a, b)
        assert result.members == ideal_subset(b21, a).members & ideal_subset(b21, b).members
