"""
Classification Model
Local and global tests for extremal, ideal, principal and Demazure subsets
"""

from dataclasses import dataclass, field

from config.logging_setup import get_logger
from models.character import char_equal, character
from models.demazure import demazure_crystal, ideal_subset
from utils.errors import (
    CharacterMismatchError,
    ModelInconsistencyError,
    NotExtremalError,
    NotIdealError,
)

logger = get_logger(__name__)


@dataclass
class Verdict:
    """
    Outcome of one test on a subset

    witness explains a failure; w carries the Weyl element a positive
    answer produces (principal and Demazure tests); ideal the recovered
    lower order ideal.
    """

    holds: bool
    witness: dict = field(default=None)
    w: object = None
    ideal: object = None

    def __bool__(self):
        return self.holds


def is_extremal(subset):
    """
    Every i-string meets X in nothing, everything, or only its head

    Args:
        subset (BaseSubset): subset X of a crystal graph

    Returns:
        Verdict: witness {"i", "string", "intersection"} on failure
    """
    if subset.is_empty():
        return Verdict(False, {"reason": "empty subset"})
    graph = subset.graph
    for node in graph.cartan.index_set:
        heads = set()
        for b in subset.find_all():
            head = graph.e_star(node, b)
            if head in heads:
                continue
            heads.add(head)
            string = graph.i_string(node, b)
            meet = [x for x in string if x in subset]
            if len(meet) == len(string) or meet == [head]:
                continue
            return Verdict(
                False, {"i": node, "string": string, "intersection": meet}
            )
    return Verdict(True)


def _floor_reps(subset):
    """Minimal coset representatives of the extremal weights of X"""
    return [u for _, u in subset.graph.extremal_elements(subset)]


def is_ideal_local(subset):
    """
    Ideal condition by starred paths between extremal members

    For extremal x, y in X with floor representatives u <= v and
    l(v u^-1) = l(v) - l(u), every reduced word of v u^-1 read right to left
    is a starred lowering path x -> y. Dropping its first step must still
    land in X.

    Args:
        subset (BaseSubset): subset X of a highest weight crystal

    Returns:
        Verdict: witness {"x", "y", "path", "escape"} on failure
    """
    extremal = is_extremal(subset)
    if not extremal:
        witness = dict(extremal.witness)
        witness["condition"] = "extremal"
        return Verdict(False, witness)

    graph = subset.graph
    weyl = graph.weyl
    pairs = graph.extremal_elements(subset)
    for x, u in pairs:
        u_inv = weyl.inverse(u)
        for y, v in pairs:
            if x == y or not weyl.bruhat_leq(u, v):
                continue
            z = weyl.multiply(v, u_inv)
            if z.length != v.length - u.length:
                continue
            for rex in weyl.all_reduced_words(z):
                path = tuple(reversed(rex))
                if graph.path_to_extremal(x, path) != y:
                    logger.warning(
                        "starred path not realized",
                        extra={"x": x, "y": y, "path": list(path)},
                    )
                    continue
                escape = graph.path_to_extremal(x, path[1:])
                if escape not in subset:
                    return Verdict(
                        False,
                        {
                            "condition": "ideal",
                            "x": x,
                            "y": y,
                            "path": list(path),
                            "escape": escape,
                        },
                    )
    return Verdict(True)


def is_ideal_global(subset):
    """
    X equals B_I(lam) for the lower ideal generated by its extremal weights

    Returns:
        Verdict: the recovered ideal on success
    """
    extremal = is_extremal(subset)
    if not extremal:
        witness = dict(extremal.witness)
        witness["condition"] = "extremal"
        return Verdict(False, witness)

    graph = subset.graph
    weyl = graph.weyl
    reps = set(_floor_reps(subset))
    ideal = weyl.lower_ideal_close(weyl.maximal_antichain(reps))
    lam = graph.highest_weight_weight()
    floors = {weyl.min_coset_rep(v, lam) for v in ideal.elements}
    if floors != reps:
        missing = weyl.sort(floors - reps)
        return Verdict(
            False,
            {
                "condition": "ideal",
                "reason": "extremal weights are not down-closed",
                "missing": [w.to_list() for w in missing],
            },
        )
    union = ideal_subset(graph, ideal)
    if union.members != subset.members:
        extra = sorted(union.members - subset.members)
        return Verdict(
            False,
            {"condition": "ideal", "reason": "X differs from B_I", "missing": extra},
        )
    return Verdict(True, ideal=ideal)


def recover_ideal(subset):
    """
    The lower order ideal I with B_I(lam) = X

    Returns:
        LowerOrderIdeal

    Raises:
        NotIdealError: X is not an ideal subset
    """
    verdict = is_ideal_global(subset)
    if not verdict:
        raise NotIdealError(f"subset is not ideal: {verdict.witness}")
    return verdict.ideal


def is_principal(subset):
    """
    The floor representatives of X have a Bruhat maximum

    Returns:
        Verdict: w = the maximum on success, witness lists the maximal ones

    Raises:
        NotExtremalError: X is not extremal
    """
    if not is_extremal(subset):
        raise NotExtremalError("principal is defined for extremal subsets only")
    weyl = subset.graph.weyl
    reps = _floor_reps(subset)
    for top in weyl.sort(reps):
        if all(weyl.bruhat_leq(v, top) for v in reps):
            return Verdict(True, w=top)
    maximal = weyl.maximal_antichain(reps)
    return Verdict(
        False,
        {"condition": "principal", "maximal": [w.to_list() for w in maximal]},
    )


def is_demazure(subset):
    """
    Extremal, ideal and principal, hence X = B_w(lam)

    Returns:
        Verdict: w on success, the first failing condition's witness otherwise

    Raises:
        ModelInconsistencyError: the conditions hold but X is not B_w(lam)
    """
    ideal = is_ideal_local(subset)
    if not ideal:
        return ideal
    principal = is_principal(subset)
    if not principal:
        return principal
    demazure = demazure_crystal(subset.graph, principal.w)
    if demazure.members != subset.members:
        raise ModelInconsistencyError(
            f"conditions hold but X differs from B_{principal.w!r}"
        )
    return Verdict(True, w=principal.w)


def is_demazure_by_character(subset, w):
    """
    Decide X = B_w(lam) for X with the character of B_w(lam)

    Returns:
        bool: the local ideal condition

    Raises:
        CharacterMismatchError: characters differ
    """
    target = demazure_crystal(subset.graph, w)
    if not char_equal(character(subset), character(target)):
        raise CharacterMismatchError(
            f"character of X differs from the character of B_{target.w!r}"
        )
    return is_ideal_local(subset).holds


def classify_subset(subset):
    """
    Full classification report

    Returns:
        dict: {"extremal", "ideal", "principal", "demazure", "w"?,
        "ideal_generators"?, "witness"?, "size"}
    """
    report = {
        "size": len(subset),
        "extremal": False,
        "ideal": False,
        "principal": False,
        "demazure": False,
    }
    witness = None

    extremal = is_extremal(subset)
    if extremal:
        report["extremal"] = True
        ideal = is_ideal_local(subset)
        report["ideal"] = ideal.holds
        if ideal:
            report["ideal_generators"] = recover_ideal(subset).to_list()
        else:
            witness = ideal.witness
        principal = is_principal(subset)
        report["principal"] = principal.holds
        if principal:
            report["w"] = principal.w.to_list()
        elif witness is None:
            witness = principal.witness
        if ideal and principal:
            report["demazure"] = is_demazure(subset).holds
    else:
        witness = dict(extremal.witness)
        witness["condition"] = "extremal"

    if witness is not None:
        report["witness"] = witness
    logger.info(
        "classified subset",
        extra={k: report[k] for k in ("size", "extremal", "ideal", "principal", "demazure")},
    )
    return report
