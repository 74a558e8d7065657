"""
Base Subset Class
All subset models bound to one crystal graph inherit from this class
"""

from utils.errors import GraphFormatError


class BaseSubset:
    """Base class for all subset models"""

    kind = None  # To be overridden in child classes

    def __init__(self, graph, members):
        """
        Bind a set of element ids to a crystal graph

        Args:
            graph (CrystalGraph): the ambient crystal
            members (iterable): element ids, all inside graph

        Raises:
            GraphFormatError: some id is not an element of graph
        """
        members = frozenset(members)
        unknown = [m for m in members if not graph.has_element(m)]
        if unknown:
            raise GraphFormatError(f"ids not in the crystal: {sorted(unknown)[:5]}")
        self.graph = graph
        self.members = members

    def provenance(self):
        """
        Metadata describing how the subset was produced
        To be extended in child classes
        """
        if not self.kind:
            raise ValueError("kind must be set in child class")
        return {"kind": self.kind}

    def find_all(self):
        """
        Member ids in the graph's element order

        Returns:
            list: element ids
        """
        return [b for b in self.graph.elements if b in self.members]

    def count(self):
        """Number of members"""
        return len(self.members)

    def is_empty(self):
        return not self.members

    def components(self):
        """
        Connected components of the induced subgraph

        Returns:
            list: frozensets of ids, ordered by first element in graph order
        """
        remaining = set(self.members)
        parts = []
        for b in self.find_all():
            if b not in remaining:
                continue
            part = {b}
            stack = [b]
            remaining.discard(b)
            while stack:
                x = stack.pop()
                for y in self.graph.neighbours(x):
                    if y in remaining:
                        remaining.discard(y)
                        part.add(y)
                        stack.append(y)
            parts.append(frozenset(part))
        return parts

    def to_dict(self):
        """Serialize as sorted id list plus provenance"""
        return {"members": sorted(self.members), "provenance": self.provenance()}

    def __contains__(self, b):
        return b in self.members

    def __iter__(self):
        return iter(self.find_all())

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, BaseSubset):
            return NotImplemented
        return self.graph is other.graph and self.members == other.members

    def __hash__(self):
        return hash((id(self.graph), self.members))

    def __repr__(self):
        return f"{type(self).__name__}({self.count()} of {len(self.graph)})"


class SubsetHandle(BaseSubset):
    """A plain set of elements inside one crystal graph"""

    kind = "explicit"

    def __init__(self, graph, members, source=None):
        super().__init__(graph, members)
        self.source = source

    def provenance(self):
        data = super().provenance()
        if self.source:
            data["source"] = self.source
        return data
