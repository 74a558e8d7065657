"""
Demazure Model
Demazure crystals, ideal subsets, Demazure atoms, atomic decompositions
and intersections of ideal subsets
"""

from config.logging_setup import get_logger
from models.base_model import BaseSubset
from models.weyl import LowerOrderIdeal
from utils.errors import EmptyIdealError, ModelInconsistencyError

logger = get_logger(__name__)


class DemazureSubset(BaseSubset):
    """B_w(lam) = F_w {b_lam}, keyed by the minimal coset representative"""

    kind = "demazure"

    def __init__(self, graph, members, w, original=None):
        """
        Args:
            graph (CrystalGraph): ambient highest weight crystal
            members (iterable): element ids
            w (WeylElement): minimal coset representative
            original (WeylElement, optional): the element as requested
        """
        super().__init__(graph, members)
        self.w = w
        self.original = original if original is not None else w

    def provenance(self):
        data = super().provenance()
        data["w"] = self.w.to_list()
        if self.original != self.w:
            data["requested"] = self.original.to_list()
        return data


class AtomSubset(BaseSubset):
    """A_w(lam): B_w(lam) minus every strictly smaller Demazure crystal"""

    kind = "atom"

    def __init__(self, graph, members, w):
        super().__init__(graph, members)
        self.w = w

    def provenance(self):
        data = super().provenance()
        data["w"] = self.w.to_list()
        return data


class IdealSubset(BaseSubset):
    """B_I(lam), the union of B_w(lam) over a lower order ideal I"""

    kind = "ideal"

    def __init__(self, graph, members, ideal):
        super().__init__(graph, members)
        self.ideal = ideal

    @property
    def generators(self):
        return self.ideal.generators

    def provenance(self):
        data = super().provenance()
        data["generators"] = self.ideal.to_list()
        return data


def _highest(graph):
    b = graph.highest_weight()
    return b, graph.wt(b)


def demazure_closure(graph, word, start=None):
    """
    Close a set under full downward strings along a word, right to left

    The rightmost letter acts first: S <- S + {f_i^k(x) : x in S, k >= 0}.

    Args:
        graph (CrystalGraph): the crystal
        word (iterable): node labels
        start (iterable, optional): initial ids, defaults to {b_lam}

    Returns:
        frozenset: element ids
    """
    if start is None:
        start = [graph.highest_weight()]
    closed = set(start)
    for node in reversed(tuple(word)):
        for x in list(closed):
            while True:
                x = graph.f(node, x)
                if x is None or x in closed:
                    break
                closed.add(x)
    return frozenset(closed)


def demazure_crystal(graph, w):
    """
    Demazure crystal B_w(lam)

    Args:
        graph (CrystalGraph): highest weight crystal
        w (WeylElement): any group element; normalized to its minimal
            coset representative

    Returns:
        DemazureSubset

    Raises:
        NotHighestWeightError: graph has no unique highest weight element
    """
    _, lam = _highest(graph)
    floor = graph.weyl.min_coset_rep(w, lam)
    members = demazure_closure(graph, floor.word)
    logger.debug(
        "demazure crystal",
        extra={"op": "demazure_crystal", "w": floor.to_list(), "size": len(members)},
    )
    return DemazureSubset(graph, members, floor, original=w)


def floor_ideal(graph, ideal):
    """Minimal coset representatives {floor(v) : v in I}, sorted"""
    _, lam = _highest(graph)
    weyl = graph.weyl
    return weyl.sort({weyl.min_coset_rep(v, lam) for v in ideal.elements})


def ideal_subset(graph, ideal):
    """
    B_I(lam) as the union of B_g(lam) over the generators of I

    Args:
        graph (CrystalGraph): highest weight crystal
        ideal (LowerOrderIdeal): nonempty lower order ideal

    Returns:
        IdealSubset

    Raises:
        EmptyIdealError: the ideal has no elements
    """
    if not isinstance(ideal, LowerOrderIdeal):
        ideal = graph.weyl.lower_ideal_close(ideal)
    if not ideal.generators:
        raise EmptyIdealError("ideal subsets need a nonempty lower order ideal")
    members = set()
    for g in ideal.generators:
        members |= demazure_crystal(graph, g).members
    logger.debug(
        "ideal subset",
        extra={"op": "ideal_subset", "generators": ideal.to_list(), "size": len(members)},
    )
    return IdealSubset(graph, members, ideal)


def demazure_contains(graph, u, w):
    """
    B_u(lam) subset of B_w(lam), decided in the Weyl group only

    Returns:
        bool: floor(u) <= w in Bruhat order
    """
    _, lam = _highest(graph)
    return graph.weyl.bruhat_leq(graph.weyl.min_coset_rep(u, lam), w)


def demazure_atom(graph, w):
    """
    Demazure atom A_w(lam)

    B_w(lam) minus B_v(lam) for the Bruhat co-atoms v of floor(w).

    Returns:
        AtomSubset: indexed by floor(w)
    """
    demazure = demazure_crystal(graph, w)
    members = set(demazure.members)
    for v in graph.weyl.coatoms(demazure.w):
        members -= demazure_crystal(graph, v).members
    return AtomSubset(graph, members, demazure.w)


def atomic_decomposition(graph, ideal):
    """
    Split B_I(lam) into Demazure atoms

    Args:
        graph (CrystalGraph): highest weight crystal
        ideal (LowerOrderIdeal): nonempty lower order ideal

    Returns:
        list: AtomSubset per minimal coset representative in I, sorted

    Raises:
        ModelInconsistencyError: atoms overlap or miss part of B_I(lam)
    """
    target = ideal_subset(graph, ideal)
    atoms = [demazure_atom(graph, v) for v in floor_ideal(graph, target.ideal)]

    covered = set()
    for atom in atoms:
        overlap = covered & atom.members
        if overlap:
            raise ModelInconsistencyError(
                f"atom A_{atom.w!r} overlaps earlier atoms in {sorted(overlap)}"
            )
        covered |= atom.members
    if covered != target.members:
        raise ModelInconsistencyError(
            f"atoms cover {len(covered)} elements, ideal subset has {len(target)}"
        )
    return atoms


def ideal_intersection(graph, first, second):
    """
    B_I(lam) intersected with B_J(lam), computed as B_{I & J}(lam)

    The result is compared with the literal intersection of members and
    with the union of the atoms indexed by I & J.

    Args:
        graph (CrystalGraph): highest weight crystal
        first (LowerOrderIdeal): I
        second (LowerOrderIdeal): J

    Returns:
        IdealSubset

    Raises:
        ModelInconsistencyError: the computations disagree
    """
    meet = graph.weyl.ideal_intersection(first, second)
    result = ideal_subset(graph, meet)

    literal = ideal_subset(graph, first).members & ideal_subset(graph, second).members
    if literal != result.members:
        raise ModelInconsistencyError(
            f"B_I & B_J has {len(literal)} elements, B_(I & J) has {len(result)}"
        )

    atoms = set()
    for atom in atomic_decomposition(graph, meet):
        atoms |= atom.members
    if atoms != result.members:
        raise ModelInconsistencyError("atoms of I & J do not cover B_(I & J)")

    logger.debug(
        "ideal intersection",
        extra={"op": "ideal_intersection", "generators": meet.to_list(), "size": len(result)},
    )
    return result
