"""
Root Data Model
Cartan matrices, weights in the fundamental-weight basis, coroot pairings
and the dominance order
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form

from config.logging_setup import get_logger
from config.settings import ForgeConfig
from utils.errors import CartanError, DominanceHeightExceeded

logger = get_logger(__name__)


@dataclass(frozen=True)
class Weight:
    """
    Integral weight, coordinates in the fundamental-weight basis

    coords[k] is the pairing with the coroot of the k-th node of the index set.
    """

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, k):
        return Weight(tuple(k * a for a in self.coords))

    def is_zero(self):
        return not any(self.coords)

    def to_list(self):
        return list(self.coords)

    def __repr__(self):
        return f"Weight{self.coords}"


def _named_matrix(kind, rank):
    """
    Cartan matrix of a finite type, Bourbaki numbering

    Args:
        kind (str): one of "A", "B", "C", "D", "G"
        rank (int): rank of the root system

    Returns:
        list: rank x rank integer matrix with a_ij = <alpha_i^vee, alpha_j>
    """
    kind = kind.upper()
    if rank < 1:
        raise CartanError(f"rank must be positive, got {rank}")

    m = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 2

    if kind == "G":
        if rank != 2:
            raise CartanError("type G exists only in rank 2")
        # alpha_1 short, alpha_2 long
        m[0][1], m[1][0] = -3, -1
        return m

    if kind in ("A", "B", "C"):
        for i in range(rank - 1):
            m[i][i + 1] = m[i + 1][i] = -1
        if kind == "B" and rank >= 2:
            # alpha_n short
            m[rank - 2][rank - 1], m[rank - 1][rank - 2] = -1, -2
        elif kind == "C" and rank >= 2:
            # alpha_n long
            m[rank - 2][rank - 1], m[rank - 1][rank - 2] = -2, -1
        elif kind != "A" and rank < 2:
            raise CartanError(f"type {kind} needs rank >= 2")
        return m

    if kind == "D":
        if rank < 3:
            raise CartanError("type D needs rank >= 3")
        for i in range(rank - 2):
            m[i][i + 1] = m[i + 1][i] = -1
        m[rank - 3][rank - 1] = m[rank - 1][rank - 3] = -1
        return m

    raise CartanError(f"unknown Cartan type {kind!r}")


class CartanData:
    """
    Cartan matrix with its index set

    All pairings <alpha_i^vee, .> go through this class. Instances are
    immutable after construction.
    """

    def __init__(self, index_set, matrix, name=None):
        """
        Args:
            index_set (list): node labels, in the order used for tie-breaking
            matrix (list): square integer matrix a_ij = <alpha_i^vee, alpha_j>
            name (str, optional): e.g. "A2" for named types
        """
        index_set = tuple(index_set)
        if len(set(index_set)) != len(index_set):
            raise CartanError(f"duplicate node labels in {list(index_set)}")
        rank = len(index_set)
        if rank == 0:
            raise CartanError("index set is empty")
        if len(matrix) != rank or any(len(row) != rank for row in matrix):
            raise CartanError(f"matrix must be {rank}x{rank}")

        self.index_set = index_set
        self.rank = rank
        self.name = name
        self.matrix = tuple(tuple(int(a) for a in row) for row in matrix)
        self._position = {label: k for k, label in enumerate(index_set)}
        self._validate()
        self.symmetrizer = self._find_symmetrizer()
        # alpha_j has coordinates given by column j
        self._roots = tuple(
            Weight(tuple(self.matrix[i][j] for i in range(rank)))
            for j in range(rank)
        )
        self._array = np.array(self.matrix, dtype=np.int64)
        self._nonsingular = bool(np.linalg.matrix_rank(self._array) == rank)

    @classmethod
    def from_type(cls, kind, rank):
        """
        Build a named finite type with index set 1..rank

        Args:
            kind (str): "A", "B", "C", "D" or "G"
            rank (int): rank

        Returns:
            CartanData
        """
        matrix = _named_matrix(kind, rank)
        return cls(list(range(1, rank + 1)), matrix, name=f"{kind.upper()}{rank}")

    @classmethod
    def from_dict(cls, doc):
        """
        Build from the JSON input form

        Accepts {"index_set": [...], "matrix": [[...]]} or {"type": "A", "rank": n}.
        """
        if "type" in doc:
            return cls.from_type(doc["type"], int(doc["rank"]))
        if "matrix" not in doc:
            raise CartanError("Cartan document needs 'matrix' or 'type'")
        index_set = doc.get("index_set") or list(range(1, len(doc["matrix"]) + 1))
        return cls(index_set, doc["matrix"], name=doc.get("name"))

    def to_dict(self):
        """Serialize; named types keep their short form"""
        if self.name and self.name[0] in "ABCDG" and self.name[1:].isdigit():
            kind, rank = self.name[0], int(self.name[1:])
            if self.matrix == tuple(map(tuple, _named_matrix(kind, rank))) and (
                self.index_set == tuple(range(1, rank + 1))
            ):
                return {"type": kind, "rank": rank}
        return {"index_set": list(self.index_set), "matrix": [list(r) for r in self.matrix]}

    def _validate(self):
        for i in range(self.rank):
            if self.matrix[i][i] != 2:
                raise CartanError(f"diagonal entry a_{i}{i} must be 2")
            for j in range(self.rank):
                if i == j:
                    continue
                if self.matrix[i][j] > 0:
                    raise CartanError(f"off-diagonal entry a_{i}{j} must be <= 0")
                if (self.matrix[i][j] == 0) != (self.matrix[j][i] == 0):
                    raise CartanError(f"a_{i}{j} = 0 must hold iff a_{j}{i} = 0")

    def _find_symmetrizer(self):
        """
        Positive rational diagonal D with DA symmetric

        Propagates d_j = d_i * a_ij / a_ji along the Dynkin graph and checks
        every edge afterwards.

        Raises:
            CartanError: the matrix is not symmetrizable
        """
        d = [None] * self.rank
        for start in range(self.rank):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(self.rank):
                    if j == i or self.matrix[i][j] == 0:
                        continue
                    if d[j] is None:
                        d[j] = d[i] * Fraction(self.matrix[i][j], self.matrix[j][i])
                        stack.append(j)
        for i in range(self.rank):
            for j in range(self.rank):
                if d[i] * self.matrix[i][j] != d[j] * self.matrix[j][i]:
                    raise CartanError("Cartan matrix is not symmetrizable")
        return tuple(d)

    def position(self, node):
        """
        Position of a node label in the index set

        Raises:
            CartanError: unknown node label
        """
        try:
            return self._position[node]
        except (KeyError, TypeError):
            pass
        # JSON and CLI input may carry labels as strings
        for label, k in self._position.items():
            if str(label) == str(node):
                return k
        raise CartanError(f"unknown node label {node!r}")

    def label(self, node):
        """Canonical label object for a node given in any spelling"""
        return self.index_set[self.position(node)]

    def weight(self, coords):
        """
        Make a weight of this root datum

        Raises:
            CartanError: wrong number of coordinates
        """
        w = coords if isinstance(coords, Weight) else Weight(tuple(coords))
        if len(w) != self.rank:
            raise CartanError(f"weight {list(w)} needs {self.rank} coordinates")
        return w

    def zero(self):
        return Weight((0,) * self.rank)

    def rho(self):
        return Weight((1,) * self.rank)

    def simple_root(self, node):
        """alpha_j as a weight: column j of the Cartan matrix"""
        return self._roots[self.position(node)]

    def simple_root_at(self, k):
        return self._roots[k]

    def pairing(self, node, weight):
        """
        <alpha_i^vee, weight>

        Args:
            node: label i in the index set
            weight (Weight): the weight

        Returns:
            int: coords_i of the weight
        """
        return weight[self.position(node)]

    def reflect_at(self, k, weight):
        """s_i(weight) for the node at position k"""
        c = weight[k]
        if c == 0:
            return weight
        root = self._roots[k]
        return Weight(tuple(a - c * r for a, r in zip(weight.coords, root.coords)))

    def is_dominant(self, weight):
        """True iff all fundamental-weight coordinates are nonnegative"""
        return all(c >= 0 for c in weight)

    def root_coordinates(self, weight):
        """
        Solve A x = coords(weight) for the simple-root expansion

        Returns:
            list of Fraction, or None when the matrix is singular
        """
        if not self._nonsingular:
            return None
        x = np.linalg.solve(self._array.astype(float), np.array(weight.coords, dtype=float))
        return [Fraction(float(v)).limit_denominator(10**6) for v in x]

    def dominance_leq(self, mu, lam, height_cap=None):
        """
        mu <= lam in dominance order

        True iff lam - mu is a nonnegative integer combination of simple roots.

        Args:
            mu (Weight): smaller candidate
            lam (Weight): larger candidate
            height_cap (int, optional): search cap for singular matrices,
                defaults to ForgeConfig.HEIGHT_CAP

        Returns:
            bool

        Raises:
            DominanceHeightExceeded: singular matrix, difference in the root
                lattice, and no decision within the cap
        """
        diff = lam - mu
        if diff.is_zero():
            return True

        if self._nonsingular:
            x = np.linalg.solve(self._array.astype(float), np.array(diff.coords, dtype=float))
            rounded = np.rint(x).astype(np.int64)
            if not np.allclose(x, rounded, atol=1e-9):
                return False
            if not np.array_equal(self._array @ rounded, np.array(diff.coords, dtype=np.int64)):
                return False
            return bool((rounded >= 0).all())

        if not self.in_root_lattice(diff):
            return False
        cap = ForgeConfig.HEIGHT_CAP if height_cap is None else height_cap
        return self._bounded_dominance(diff, cap)

    def in_root_lattice(self, weight):
        """
        True iff weight is an integer combination of simple roots

        The lattice spanned by the columns of A contains weight exactly when
        appending weight as a column leaves the invariant factors unchanged.
        """
        matrix = Matrix(self.matrix)
        extended = matrix.row_join(Matrix(list(weight.coords)))
        return _invariant_factors(matrix) == _invariant_factors(extended)

    def _bounded_dominance(self, diff, cap):
        """Search nonnegative root combinations of height <= cap summing to diff"""
        frontier = {self.zero()}
        seen = set(frontier)
        for height in range(1, cap + 1):
            nxt = set()
            for acc in frontier:
                for root in self._roots:
                    cand = acc + root
                    if cand == diff:
                        logger.debug(
                            "dominance decided by search", extra={"height": height}
                        )
                        return True
                    if cand not in seen:
                        seen.add(cand)
                        nxt.add(cand)
            frontier = nxt
        raise DominanceHeightExceeded(
            f"no decision for difference {diff.to_list()} within height {cap}"
        )

    def __eq__(self, other):
        return (
            isinstance(other, CartanData)
            and self.index_set == other.index_set
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.index_set, self.matrix))

    def __repr__(self):
        label = self.name or f"rank {self.rank}"
        return f"CartanData({label})"


def _invariant_factors(matrix):
    """Nonzero diagonal of the Smith normal form, up to sign"""
    snf = smith_normal_form(matrix, domain=ZZ)
    size = min(snf.shape)
    return sorted(abs(int(snf[k, k])) for k in range(size) if snf[k, k] != 0)
