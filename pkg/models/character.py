"""
Character Model
Formal characters of subsets as weight multisets, with monomial display
for type A tableau crystals
"""

from collections import Counter

from models.cartan import Weight
from models.tableau import content_of_weight
from utils.errors import ModelInconsistencyError, TableauError


class FormalCharacter:
    """
    Weight multiset sum_mu m_mu e^mu

    degree is the number of boxes when the source is a tableau crystal,
    needed to turn weights back into monomials.
    """

    def __init__(self, terms=None, degree=None, n=None):
        self.terms = Counter()
        for wt, mult in (terms or {}).items():
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} at {wt!r}")
            if mult:
                self.terms[wt if isinstance(wt, Weight) else Weight(tuple(wt))] += mult
        self.degree = degree
        self.n = n

    def total(self):
        """Number of elements counted"""
        return sum(self.terms.values())

    def multiplicity(self, wt):
        return self.terms.get(wt if isinstance(wt, Weight) else Weight(tuple(wt)), 0)

    def sorted_terms(self):
        """(weight, multiplicity) pairs, lexicographic on coordinates"""
        return sorted(self.terms.items(), key=lambda item: item[0].coords)

    def __add__(self, other):
        merged = FormalCharacter(degree=self.degree or other.degree, n=self.n or other.n)
        merged.terms = self.terms + other.terms
        return merged

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_dict(self):
        return {"terms": [{"wt": wt.to_list(), "mult": m} for wt, m in self.sorted_terms()]}

    @classmethod
    def from_dict(cls, doc):
        from models.schemas import CharacterDoc, validate_document

        parsed = validate_document(CharacterDoc, doc)
        return cls({Weight(tuple(t.wt)): t.mult for t in parsed.terms})

    def __repr__(self):
        body = ", ".join(f"{wt.to_list()}:{m}" for wt, m in self.sorted_terms())
        return f"FormalCharacter({body})"


def character(subset):
    """
    Weight multiset of the members of a subset

    Args:
        subset (BaseSubset): any subset of a crystal graph

    Returns:
        FormalCharacter
    """
    graph = subset.graph
    model = graph.model or {}
    degree = n = None
    if model.get("kind") == "tableau":
        degree = sum(model["shape"])
        n = model["n"]
    return FormalCharacter(Counter(graph.wt(b) for b in subset.members), degree, n)


def char_equal(first, second):
    """Exact multiset equality"""
    return first.terms == second.terms


def _monomial(exponents, coefficient):
    factors = []
    for k, e in enumerate(exponents):
        if e == 1:
            factors.append(f"x{k + 1}")
        elif e > 1:
            factors.append(f"x{k + 1}^{e}")
    if coefficient != 1:
        factors.insert(0, str(coefficient))
    return "*".join(factors) if factors else "1"


def monomial_string(char, n=None):
    """
    Render a type A character as a polynomial in x1..xn

    Each weight is turned into the content of a tableau; terms come in
    decreasing exponent order.

    Args:
        char (FormalCharacter): character of a subset of a tableau crystal
        n (int, optional): number of variables, defaults to the source's

    Returns:
        str: e.g. "x1^2*x2 + x1*x2^2"

    Raises:
        TableauError: the character does not come from a tableau crystal
    """
    n = n or char.n
    if char.degree is None or n is None:
        raise TableauError("monomial rendering needs a type A tableau crystal")
    terms = [
        (content_of_weight(wt, n, char.degree), mult) for wt, mult in char.terms.items()
    ]
    if not terms:
        return "0"
    terms.sort(key=lambda item: item[0], reverse=True)
    return " + ".join(_monomial(exponents, mult) for exponents, mult in terms)


def atom_character_table(graph, ideal):
    """
    Characters of the atoms in the decomposition of B_I(lam)

    Args:
        graph (CrystalGraph): highest weight crystal
        ideal (LowerOrderIdeal): nonempty lower order ideal

    Returns:
        dict: WeylElement -> FormalCharacter, in Bruhat-compatible order

    Raises:
        ModelInconsistencyError: the atom characters do not add up
    """
    from models.demazure import atomic_decomposition, ideal_subset

    table = {atom.w: character(atom) for atom in atomic_decomposition(graph, ideal)}
    whole = character(ideal_subset(graph, ideal))
    total = FormalCharacter()
    for char in table.values():
        total = total + char
    if not char_equal(total, whole):
        raise ModelInconsistencyError("atom characters do not sum to the ideal character")
    return table
