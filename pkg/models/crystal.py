"""
Crystal Graph Model
Finite crystal graphs with axiom validation, i-strings, starred operators,
extremal elements and starred paths between them
"""

from config.logging_setup import get_logger
from models.base_model import SubsetHandle
from models.cartan import CartanData
from models.weyl import WeylGroup
from utils.errors import (
    AxiomViolation,
    CartanError,
    GraphFormatError,
    NotHighestWeightError,
)

logger = get_logger(__name__)


class CrystalGraph:
    """
    Finite crystal graph

    Elements carry weights; f_i edges go from b to f_i(b). Absent operator
    results are None. Immutable after construction.
    """

    def __init__(self, cartan, elements, weights, edges, model=None):
        """
        Args:
            cartan (CartanData): root datum
            elements (list): element ids (str), in display order
            weights (dict): id -> Weight
            edges (dict): (src id, node label) -> dst id for f-edges
            model (dict, optional): realization metadata, e.g. tableau shape

        Raises:
            GraphFormatError: duplicate id, dangling edge, bad weight
            AxiomViolation: one of the four crystal axioms fails
        """
        self.cartan = cartan
        self.elements = tuple(elements)
        self.model = dict(model) if model else None
        self.weyl = WeylGroup(cartan)

        if len(set(self.elements)) != len(self.elements):
            seen, dup = set(), None
            for b in self.elements:
                if b in seen:
                    dup = b
                    break
                seen.add(b)
            raise GraphFormatError(f"duplicate element id {dup!r}")
        self._index = {b: k for k, b in enumerate(self.elements)}

        self._wt = {}
        for b in self.elements:
            if b not in weights:
                raise GraphFormatError(f"element {b!r} has no weight")
            try:
                self._wt[b] = cartan.weight(weights[b])
            except CartanError as e:
                raise GraphFormatError(f"element {b!r}: {e}") from e

        rank = cartan.rank
        self._f = [dict() for _ in range(rank)]
        self._e = [dict() for _ in range(rank)]
        for (src, node), dst in edges.items():
            k = cartan.position(node)
            for end in (src, dst):
                if end not in self._index:
                    raise GraphFormatError(f"dangling edge {src!r} -{node}-> {dst!r}")
            if src in self._f[k]:
                raise AxiomViolation("a", src, node, "two outgoing f-edges")
            if dst in self._e[k]:
                raise AxiomViolation("a", dst, node, "two incoming f-edges")
            self._f[k][src] = dst
            self._e[k][dst] = src

        self._eps = [dict() for _ in range(rank)]
        self._phi = [dict() for _ in range(rank)]
        self._validate()

        self._hw = tuple(
            b for b in self.elements if all(b not in self._e[k] for k in range(rank))
        )
        self._extremal = None

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    def _validate(self):
        """Check axioms (a)-(d) and fill the epsilon/phi tables"""
        cartan = self.cartan
        for k, node in enumerate(cartan.index_set):
            root = cartan.simple_root_at(k)
            # (b) wt(e_i b) = wt(b) + alpha_i
            for src, dst in self._f[k].items():
                if self._wt[src] != self._wt[dst] + root:
                    raise AxiomViolation(
                        "b",
                        dst,
                        node,
                        f"wt({src!r}) - wt({dst!r}) = "
                        f"{(self._wt[src] - self._wt[dst]).to_list()}, "
                        f"expected alpha = {root.to_list()}",
                    )

            # (c) strings are finite chains: walk from every head
            covered = set()
            for b in self.elements:
                if b in self._e[k]:
                    continue
                string = [b]
                x = b
                while x in self._f[k]:
                    x = self._f[k][x]
                    string.append(x)
                last = len(string) - 1
                for pos, x in enumerate(string):
                    self._eps[k][x] = pos
                    self._phi[k][x] = last - pos
                    covered.add(x)
            for b in self.elements:
                if b not in covered:
                    raise AxiomViolation("c", b, node, "i-string is a cycle")

            # (d) phi_i = <alpha_i^vee, wt> + eps_i
            for b in self.elements:
                expected = self._wt[b][k] + self._eps[k][b]
                if self._phi[k][b] != expected:
                    raise AxiomViolation(
                        "d",
                        b,
                        node,
                        f"phi = {self._phi[k][b]}, but pairing + eps = {expected}",
                    )

    @classmethod
    def from_dict(cls, doc):
        """
        Load and validate a crystal document

        Args:
            doc (dict): {"cartan":..., "elements":[{"id","wt"}], "edges":[{"src","i","dst"}]}

        Returns:
            CrystalGraph
        """
        from models.schemas import CrystalDoc, validate_document

        parsed = validate_document(CrystalDoc, doc)
        cartan = CartanData.from_dict(parsed.cartan.to_input())
        elements = [el.id for el in parsed.elements]
        weights = {el.id: el.wt for el in parsed.elements}
        edges = {}
        for edge in parsed.edges:
            key = (edge.src, cartan.label(edge.i))
            if key in edges:
                raise AxiomViolation("a", edge.src, edge.i, "two outgoing f-edges")
            edges[key] = edge.dst
        graph = cls(cartan, elements, weights, edges, model=parsed.model)
        logger.info("loaded crystal", extra={"size": len(elements), "edges": len(edges)})
        return graph

    def to_dict(self):
        """Canonical document: elements in stored order, edges by source then node"""
        doc = {
            "cartan": self.cartan.to_dict(),
            "elements": [{"id": b, "wt": self._wt[b].to_list()} for b in self.elements],
            "edges": [
                {"src": b, "i": node, "dst": self._f[k][b]}
                for b in self.elements
                for k, node in enumerate(self.cartan.index_set)
                if b in self._f[k]
            ],
        }
        if self.model:
            doc["model"] = self.model
        return doc

    # ------------------------------------------------------------------
    # crystal data
    # ------------------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def has_element(self, b):
        return b in self._index

    def wt(self, b):
        return self._wt[b]

    def f(self, i, b):
        return self._f[self.cartan.position(i)].get(b)

    def e(self, i, b):
        return self._e[self.cartan.position(i)].get(b)

    def epsilon(self, i, b):
        return self._eps[self.cartan.position(i)][b]

    def phi(self, i, b):
        return self._phi[self.cartan.position(i)][b]

    def e_star(self, i, b):
        """Head of the i-string of b"""
        k = self.cartan.position(i)
        for _ in range(self._eps[k][b]):
            b = self._e[k][b]
        return b

    def f_star(self, i, b):
        """Tail of the i-string of b"""
        k = self.cartan.position(i)
        for _ in range(self._phi[k][b]):
            b = self._f[k][b]
        return b

    def i_string(self, i, b):
        """
        The full i-string through b, head to tail

        Returns:
            list: element ids
        """
        k = self.cartan.position(i)
        x = self.e_star(i, b)
        string = [x]
        while x in self._f[k]:
            x = self._f[k][x]
            string.append(x)
        return string

    def neighbours(self, b):
        """Elements joined to b by an edge of any color"""
        found = []
        for k in range(self.cartan.rank):
            if b in self._f[k]:
                found.append(self._f[k][b])
            if b in self._e[k]:
                found.append(self._e[k][b])
        return found

    def edges(self):
        """All f-edges as (src, node, dst), in canonical order"""
        return [
            (b, node, self._f[k][b])
            for b in self.elements
            for k, node in enumerate(self.cartan.index_set)
            if b in self._f[k]
        ]

    @property
    def highest_weight_ids(self):
        return self._hw

    def highest_weight(self):
        """
        The unique highest weight element of a connected crystal

        Raises:
            NotHighestWeightError: several sources or a disconnected graph
        """
        if len(self._hw) != 1:
            raise NotHighestWeightError(
                f"expected one highest weight element, found {len(self._hw)}"
            )
        if len(self.whole().components()) != 1:
            raise NotHighestWeightError("crystal graph is not connected")
        return self._hw[0]

    def highest_weight_weight(self):
        return self._wt[self.highest_weight()]

    def whole(self):
        return SubsetHandle(self, self.elements, source="whole")

    def subset(self, members, source=None):
        return SubsetHandle(self, members, source=source)

    # ------------------------------------------------------------------
    # extremal elements
    # ------------------------------------------------------------------

    def extremal_map(self):
        """
        Extremal elements of the whole crystal

        Returns:
            dict: id -> floor representative u with wt = u(lam), graph order

        Raises:
            NotHighestWeightError: not a highest weight crystal, or two
                elements share an extremal weight
        """
        if self._extremal is not None:
            return self._extremal
        lam = self.highest_weight_weight()
        found = {}
        by_weight = {}
        for b in self.elements:
            dominant, u = self.weyl.dominant_conjugate(self._wt[b])
            if dominant != lam:
                continue
            if self._wt[b] in by_weight:
                raise NotHighestWeightError(
                    f"extremal weight {self._wt[b].to_list()} carried by "
                    f"{by_weight[self._wt[b]]!r} and {b!r}"
                )
            by_weight[self._wt[b]] = b
            found[b] = u
        self._extremal = found
        self._extremal_by_weight = by_weight
        return found

    def extremal_elements(self, subset=None):
        """
        Extremal members paired with their minimal coset representatives

        Args:
            subset (BaseSubset, optional): defaults to the whole crystal

        Returns:
            list: (id, WeylElement) pairs in graph order
        """
        table = self.extremal_map()
        members = self.elements if subset is None else subset.find_all()
        return [(b, table[b]) for b in members if b in table]

    def extremal_of(self, w):
        """The extremal element of weight w(lam), or None"""
        self.extremal_map()
        lam = self.highest_weight_weight()
        return self._extremal_by_weight.get(self.weyl.apply(w, lam))

    # ------------------------------------------------------------------
    # starred paths
    # ------------------------------------------------------------------

    def path_to_extremal(self, x, word):
        """
        Apply starred lowering operators along a word, left to right

        Word [j1, j2] means f_{j2}^* f_{j1}^* (x); the matching Weyl element
        is the reversed word.

        Returns:
            str: the end of the path
        """
        for node in word:
            x = self.f_star(node, x)
        return x

    def path_words(self, x, y):
        """
        Every starred lowering path from x to y whose steps all move

        Returns:
            list: words in application order, sorted
        """
        found = []

        def walk(b, word):
            if b == y:
                found.append(tuple(word))
            for node in self.cartan.index_set:
                nxt = self.f_star(node, b)
                if nxt != b:
                    word.append(node)
                    walk(nxt, word)
                    word.pop()

        walk(x, [])
        positions = self.cartan.position
        return sorted(set(found), key=lambda wd: (len(wd), [positions(i) for i in wd]))

    def __repr__(self):
        return f"CrystalGraph({self.cartan!r}, {len(self.elements)} elements)"
