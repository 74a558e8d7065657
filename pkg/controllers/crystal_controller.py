"""
Crystal Controller
Builds, loads and saves crystals and runs the subset operations behind
each command
"""

from config.logging_setup import get_logger
from config.storage import Storage
from models.character import atom_character_table, character, monomial_string
from models.classify import classify_subset
from models.crystal import CrystalGraph
from models.demazure import (
    atomic_decomposition,
    demazure_crystal,
    ideal_intersection,
    ideal_subset,
)
from models.schemas import ClassificationReport, SubsetDoc, validate_document
from models.tableau import build_tableau_crystal
from utils.errors import CartanError, TableauError
from utils.subset_spec import resolve_subset
from views.dot_view import render_dot

logger = get_logger(__name__)


def parse_word(text):
    """
    Read a word of node labels: "2,1", "[2,1]", "2 1" or "e"

    Returns:
        list: labels, integers where possible
    """
    text = text.strip().strip("[]").strip()
    if text in ("", "e"):
        return []
    parts = text.replace(",", " ").split()
    return [int(p) if p.lstrip("-").isdigit() else p for p in parts]


def parse_generators(text):
    """Read generator words separated by ';', e.g. "1;2" or "[1,2];[2,1]" """
    return [parse_word(part) for part in text.split(";") if part.strip()]


class CrystalController:
    """Command operations over flat-file crystal documents"""

    def __init__(self, storage=None):
        self.storage = storage or Storage()

    # ------------------------------------------------------------------
    # crystals
    # ------------------------------------------------------------------

    def build(self, kind, rank, shape):
        """
        Build a tableau crystal

        Args:
            kind (str): Cartan type; only "A" has a built-in model
            rank (int): rank
            shape (str | iterable): partition, e.g. "2,1"

        Returns:
            CrystalGraph

        Raises:
            CartanError: type other than A
            TableauError: bad partition
        """
        if kind.upper() != "A":
            raise CartanError(
                f"no built-in model for type {kind}; write the graph as JSON and use load"
            )
        if rank < 1:
            raise TableauError(f"rank must be positive, got {rank}")
        graph = build_tableau_crystal(rank + 1, shape)
        logger.info("build", extra={"type": "A", "rank": rank, "size": len(graph)})
        return graph

    def load(self, path):
        """Load and validate a crystal document"""
        return CrystalGraph.from_dict(self.storage.read_json(path))

    def save(self, graph, path):
        return self.storage.write_json(path, graph.to_dict())

    # ------------------------------------------------------------------
    # subsets
    # ------------------------------------------------------------------

    def subset(self, graph, spec):
        """
        Resolve a subset argument

        Args:
            graph (CrystalGraph): the crystal
            spec (str): a subset JSON file or a subset specification

        Returns:
            BaseSubset
        """
        if spec.endswith(".json") and self.storage.exists(spec):
            doc = validate_document(SubsetDoc, self.storage.read_json(spec))
            return graph.subset(doc.members, source=spec)
        return resolve_subset(graph, spec)

    def save_subset(self, subset, path):
        return self.storage.write_json(path, subset.to_dict())

    def demazure(self, graph, word):
        return demazure_crystal(graph, graph.weyl.element(word))

    def ideal(self, graph, generators):
        weyl = graph.weyl
        return ideal_subset(graph, weyl.lower_ideal_close(weyl.element(w) for w in generators))

    def atoms(self, graph, generators=None):
        """
        Atomic decomposition of B_I(lam), by default for the whole crystal

        Returns:
            tuple: (list of AtomSubset, dict WeylElement -> polynomial text or None)
        """
        weyl = graph.weyl
        if generators is None:
            ideal = weyl.principal_ideal(weyl.longest_element())
        else:
            ideal = weyl.lower_ideal_close(weyl.element(w) for w in generators)
        atoms = atomic_decomposition(graph, ideal)
        monomials = None
        if graph.model and graph.model.get("kind") == "tableau":
            table = atom_character_table(graph, ideal)
            monomials = {w: monomial_string(char) for w, char in table.items()}
        return atoms, monomials

    def intersect(self, graph, first, second):
        weyl = graph.weyl
        return ideal_intersection(
            graph,
            weyl.lower_ideal_close(weyl.element(w) for w in first),
            weyl.lower_ideal_close(weyl.element(w) for w in second),
        )

    # ------------------------------------------------------------------
    # reports
    # ------------------------------------------------------------------

    def classify(self, subset):
        """Classification report, validated against its schema"""
        report = classify_subset(subset)
        return validate_document(ClassificationReport, report).model_dump(exclude_none=True)

    def character(self, subset):
        """
        Returns:
            tuple: (FormalCharacter, polynomial text or None)
        """
        char = character(subset)
        text = monomial_string(char) if char.degree is not None else None
        return char, text

    def export_dot(self, graph, subset=None):
        return render_dot(graph, subset)
