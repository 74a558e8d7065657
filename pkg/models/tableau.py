"""
Tableau Model
Semistandard tableaux with the signature-rule crystal operators,
the type A realization of highest weight crystals
"""

from collections import deque
from fractions import Fraction

from config.logging_setup import get_logger
from models.cartan import CartanData, Weight
from utils.errors import TableauError

logger = get_logger(__name__)


def normalize_partition(shape, n):
    """
    Validate a partition for gl_n and strip trailing zeros

    Args:
        shape (iterable): parts, e.g. (2, 1) or "2,1,0"
        n (int): number of letters

    Returns:
        tuple: the partition without trailing zeros

    Raises:
        TableauError: not a partition, or more than n nonzero parts
    """
    if isinstance(shape, str):
        try:
            shape = [int(p) for p in shape.replace(" ", "").split(",") if p != ""]
        except ValueError as e:
            raise TableauError(f"not a partition: {shape!r}") from e
    parts = [int(p) for p in shape]
    if any(p < 0 for p in parts):
        raise TableauError(f"partition {parts} has negative parts")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise TableauError(
            f"{parts} is not weakly decreasing; enter dominant weights as partitions"
        )
    while parts and parts[-1] == 0:
        parts.pop()
    if len(parts) > n:
        raise TableauError(f"partition {parts} has more than {n} parts")
    return tuple(parts)


def partition_to_weight(shape, n):
    """Fundamental-weight coordinates (l_1 - l_2, ..., l_{n-1} - l_n)"""
    padded = list(shape) + [0] * (n - len(shape))
    return Weight(tuple(padded[k] - padded[k + 1] for k in range(n - 1)))


def weyl_dimension(shape, n):
    """
    Dimension of the irreducible gl_n module of highest weight shape

    Product over i < j of (l_i - l_j + j - i) / (j - i).
    """
    padded = list(shape) + [0] * (n - len(shape))
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(padded[i] - padded[j] + j - i, j - i)
    return int(dim)


class Tableau:
    """Semistandard Young tableau with entries in 1..n"""

    def __init__(self, rows, n):
        """
        Args:
            rows (iterable): rows of entries
            n (int): largest allowed entry

        Raises:
            TableauError: not semistandard or bad entries
        """
        self.rows = tuple(tuple(int(x) for x in row) for row in rows if len(row) > 0)
        self.n = n
        self._check()
        self._cells = [
            (r, c)
            for c in reversed(range(len(self.rows[0]) if self.rows else 0))
            for r in range(len(self.rows))
            if c < len(self.rows[r])
        ]

    def _check(self):
        shape = [len(row) for row in self.rows]
        if any(shape[k] < shape[k + 1] for k in range(len(shape) - 1)):
            raise TableauError(f"rows {self.rows} do not form a partition shape")
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if not 1 <= x <= self.n:
                    raise TableauError(f"entry {x} outside 1..{self.n}")
                if c > 0 and row[c - 1] > x:
                    raise TableauError(f"row {r} is not weakly increasing")
                if r > 0 and self.rows[r - 1][c] >= x:
                    raise TableauError(f"column {c} is not strictly increasing")

    @classmethod
    def highest(cls, shape, n):
        """Superstandard tableau: row k filled with k"""
        return cls([[r + 1] * part for r, part in enumerate(shape)], n)

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    def content(self):
        """Multiplicities m_1..m_n"""
        m = [0] * self.n
        for row in self.rows:
            for x in row:
                m[x - 1] += 1
        return tuple(m)

    def weight(self):
        m = self.content()
        return Weight(tuple(m[k] - m[k + 1] for k in range(self.n - 1)))

    def reading_word(self):
        """Far-eastern reading: columns right to left, each top to bottom"""
        return [self.rows[r][c] for r, c in self._cells]

    def _signature(self, i):
        """
        Surviving marks after cancelling every '+' directly left of a '-'

        Returns:
            tuple: (unmatched '-' positions, unmatched '+' positions), both
            as indices into the reading word, left to right
        """
        word = self.reading_word()
        minus, plus = [], []
        for p, x in enumerate(word):
            if x == i:
                plus.append(p)
            elif x == i + 1:
                if plus:
                    plus.pop()
                else:
                    minus.append(p)
        return minus, plus

    def _replace(self, p, value):
        r, c = self._cells[p]
        rows = [list(row) for row in self.rows]
        rows[r][c] = value
        return Tableau(rows, self.n)

    def f(self, i):
        """Lowering operator: leftmost surviving '+' becomes i+1, or None"""
        _, plus = self._signature(i)
        if not plus:
            return None
        return self._replace(plus[0], i + 1)

    def e(self, i):
        """Raising operator: rightmost surviving '-' becomes i, or None"""
        minus, _ = self._signature(i)
        if not minus:
            return None
        return self._replace(minus[-1], i)

    def epsilon(self, i):
        return len(self._signature(i)[0])

    def phi(self, i):
        return len(self._signature(i)[1])

    def to_id(self):
        """Canonical id: the row lists"""
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self.rows) + "]"

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows and self.n == other.n

    def __hash__(self):
        return hash((self.rows, self.n))

    def __repr__(self):
        return f"Tableau({self.to_id()})"


def enumerate_ssyt(shape, n):
    """
    All semistandard tableaux of a shape, by direct backtracking

    Independent of the crystal operators; used as a counting oracle.

    Returns:
        list: Tableau objects
    """
    shape = normalize_partition(shape, n)
    cells = [(r, c) for r, part in enumerate(shape) for c in range(part)]
    grid = [[0] * part for part in shape]
    found = []

    def fill(k):
        if k == len(cells):
            found.append(Tableau(grid, n))
            return
        r, c = cells[k]
        low = 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        for x in range(low, n + 1):
            grid[r][c] = x
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return found


def build_tableau_crystal(n, shape):
    """
    Highest weight crystal of gl_n on semistandard tableaux

    Breadth-first closure of the superstandard tableau under f_1..f_{n-1}.

    Args:
        n (int): number of letters (rank + 1), at least 2
        shape (iterable): partition with at most n parts

    Returns:
        CrystalGraph: validated graph with a "tableau" model block

    Raises:
        TableauError: bad partition or n < 2
    """
    from models.crystal import CrystalGraph

    if n < 2:
        raise TableauError("need at least two letters (rank >= 1)")
    shape = normalize_partition(shape, n)
    cartan = CartanData.from_type("A", n - 1)

    top = Tableau.highest(shape, n)
    order = [top]
    seen = {top.to_id(): top}
    edges = {}
    queue = deque([top])
    while queue:
        t = queue.popleft()
        for i in range(1, n):
            s = t.f(i)
            if s is None:
                continue
            edges[(t.to_id(), i)] = s.to_id()
            if s.to_id() not in seen:
                seen[s.to_id()] = s
                order.append(s)
                queue.append(s)

    graph = CrystalGraph(
        cartan,
        [t.to_id() for t in order],
        {t.to_id(): t.weight() for t in order},
        edges,
        model={"kind": "tableau", "n": n, "shape": list(shape)},
    )
    logger.info(
        "built tableau crystal",
        extra={"n": n, "shape": list(shape), "size": len(order)},
    )
    return graph


def content_of_weight(weight, n, size):
    """
    Recover the content of a gl_n weight from fundamental coordinates

    m_n = (size - sum_j j c_j) / n and m_k = m_n + sum_{j >= k} c_j.

    Raises:
        TableauError: the weight does not come from a tableau of that size
    """
    c = list(weight)
    if len(c) != n - 1:
        raise TableauError(f"weight {c} is not a gl_{n} weight")
    top = size - sum((j + 1) * cj for j, cj in enumerate(c))
    if top % n:
        raise TableauError(f"weight {c} has no content of size {size}")
    m_n = top // n
    content = [m_n + sum(c[k:]) for k in range(n - 1)] + [m_n]
    if any(m < 0 for m in content):
        raise TableauError(f"weight {c} has no content of size {size}")
    return tuple(content)
