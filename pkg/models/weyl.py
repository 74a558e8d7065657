"""
Weyl Group Model
Elements keyed by their image of rho, reduced words, Bruhat order,
minimal coset representatives and lower order ideals
"""

import threading
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from config.logging_setup import get_logger
from config.settings import ForgeConfig
from models.cartan import CartanData, Weight
from utils.errors import CartanError, ElementCapExceeded

logger = get_logger(__name__)


@dataclass(frozen=True)
class WeylElement:
    """
    Weyl group element

    key is w(rho); rho is regular so keys are unique. word is the
    lexicographically least reduced word, letters are node labels and
    w = s_{word[0]} s_{word[1]} ... s_{word[-1]}.
    """

    key: Weight
    word: tuple = field(compare=False)

    @property
    def length(self):
        return len(self.word)

    def is_identity(self):
        return not self.word

    def to_list(self):
        return list(self.word)

    def __repr__(self):
        if not self.word:
            return "e"
        return "s" + "s".join(str(i) for i in self.word)


@dataclass(frozen=True)
class LowerOrderIdeal:
    """
    Bruhat-down-closed finite subset of W

    generators: the Bruhat-maximal members (an antichain), sorted
    elements: the full down-closed set
    """

    generators: tuple
    elements: frozenset

    def __contains__(self, w):
        return w in self.elements

    def __len__(self):
        return len(self.elements)

    def is_principal(self):
        return len(self.generators) == 1

    def to_list(self):
        return [g.to_list() for g in self.generators]


class WeylGroup:
    """
    Weyl group of a Cartan datum

    All operations work on materialized finite data. A shared Bruhat memo
    is used unless ForgeConfig.BRUHAT_MEMO is off; it is guarded by a lock.
    """

    def __init__(self, cartan, memo=None):
        """
        Args:
            cartan (CartanData): root datum
            memo (bool, optional): enable the Bruhat memo, defaults to config
        """
        if not isinstance(cartan, CartanData):
            raise CartanError("WeylGroup needs a CartanData")
        self.cartan = cartan
        self._rho = cartan.rho()
        self.identity = WeylElement(self._rho, ())
        self._use_memo = ForgeConfig.BRUHAT_MEMO if memo is None else memo
        self._lock = threading.RLock()
        self._bruhat_cache = LRUCache(maxsize=ForgeConfig.BRUHAT_MEMO_SIZE)
        self._rex_cache = LRUCache(maxsize=4096)
        self._elements = None

        if self._use_memo:
            memo = cached(
                self._bruhat_cache,
                key=lambda u, w: hashkey(u.key, w.key),
                lock=self._lock,
            )(lambda u, w: self._bruhat(u, w, self._bruhat_step))
            self._bruhat_step = memo
        else:
            self._bruhat_step = self._bruhat_plain

    # ------------------------------------------------------------------
    # action and normal forms
    # ------------------------------------------------------------------

    def act(self, word, weight):
        """
        Apply s_{word[0]} ... s_{word[-1]} to a weight (rightmost letter first)

        Args:
            word (iterable): node labels
            weight (Weight): the weight

        Returns:
            Weight
        """
        for node in reversed(tuple(word)):
            weight = self.cartan.reflect_at(self.cartan.position(node), weight)
        return weight

    def apply(self, w, weight):
        """
        The weight w(weight)

        Args:
            w (WeylElement): group element
            weight (Weight): weight of the same root datum

        Returns:
            Weight
        """
        return self.act(w.word, self.cartan.weight(weight))

    def _from_key(self, key):
        """Recover the lexicographically least reduced word from w(rho)"""
        word = []
        mu = key
        for _ in range(ForgeConfig.WEYL_ELEMENT_CAP):
            k = next((k for k, c in enumerate(mu) if c < 0), None)
            if k is None:
                return WeylElement(key, tuple(word))
            word.append(self.cartan.index_set[k])
            mu = self.cartan.reflect_at(k, mu)
        raise ElementCapExceeded(f"normalization of {key.to_list()} did not terminate")

    def multiply_and_normalize(self, word):
        """
        Canonical element for a word of simple reflections

        Args:
            word (list): node labels, w = s_{word[0]} ... s_{word[-1]}

        Returns:
            WeylElement: normal form, its word is reduced and lex-least

        Raises:
            CartanError: unknown node label
        """
        labels = tuple(self.cartan.label(i) for i in word)
        return self._from_key(self.act(labels, self._rho))

    element = multiply_and_normalize

    def multiply(self, u, w):
        """Product uw"""
        return self._from_key(self.act(u.word, w.key))

    def inverse(self, w):
        return self.multiply_and_normalize(tuple(reversed(w.word)))

    def left_descents(self, w):
        """Node labels i with l(s_i w) < l(w), in index order"""
        return [self.cartan.index_set[k] for k, c in enumerate(w.key) if c < 0]

    def left_multiply(self, node, w):
        """s_i w"""
        k = self.cartan.position(node)
        return self._from_key(self.cartan.reflect_at(k, w.key))

    def word_key(self, w):
        """Sort key: length, then word by index position"""
        return (w.length, tuple(self.cartan.position(i) for i in w.word))

    def sort(self, elements):
        return sorted(elements, key=self.word_key)

    # ------------------------------------------------------------------
    # reduced words and Bruhat order
    # ------------------------------------------------------------------

    def all_reduced_words(self, w):
        """
        Every reduced word for w

        Args:
            w (WeylElement): the element

        Returns:
            tuple: reduced words (tuples of labels), lexicographic by index order
        """
        with self._lock:
            hit = self._rex_cache.get(w.key)
        if hit is not None:
            return hit

        if w.is_identity():
            words = ((),)
        else:
            found = set()
            for i in self.left_descents(w):
                for tail in self.all_reduced_words(self.left_multiply(i, w)):
                    found.add((i,) + tail)
            words = tuple(
                sorted(found, key=lambda wd: tuple(self.cartan.position(i) for i in wd))
            )

        with self._lock:
            self._rex_cache[w.key] = words
        return words

    def bruhat_leq(self, u, w):
        """
        u <= w in Bruhat order

        Uses the lifting property on the smallest left descent s of w:
        if s is a descent of u then u <= w iff su <= sw, otherwise u <= w
        iff u <= sw.

        Returns:
            bool
        """
        return self._bruhat_step(u, w)

    def _bruhat_plain(self, u, w):
        return self._bruhat(u, w, self._bruhat_plain)

    def _bruhat(self, u, w, recurse):
        if u.is_identity() or u == w:
            return True
        if u.length >= w.length:
            return False
        s = self.left_descents(w)[0]
        sw = self.left_multiply(s, w)
        k = self.cartan.position(s)
        if u.key[k] < 0:
            return recurse(self.left_multiply(s, u), sw)
        return recurse(u, sw)

    def subword_leq(self, u, w):
        """
        u <= w by literal subword search in the normal word of w

        Independent of bruhat_leq; used to cross-check it.
        """
        word = w.word
        for positions in combinations(range(len(word)), u.length):
            if self.multiply_and_normalize([word[p] for p in positions]) == u:
                return True
        return False

    def coatoms(self, w):
        """
        Elements covered by w in Bruhat order

        One-letter deletions of the normal word that drop the length by one.
        """
        found = set()
        word = w.word
        for p in range(len(word)):
            v = self.multiply_and_normalize(word[:p] + word[p + 1 :])
            if v.length == w.length - 1:
                found.add(v)
        return self.sort(found)

    # ------------------------------------------------------------------
    # stabilizers and coset representatives
    # ------------------------------------------------------------------

    def dominant_conjugate(self, weight):
        """
        Greedy ascent to the dominant chamber

        While some coordinate is negative, reflect at the smallest such node.

        Args:
            weight (Weight): any integral weight in the Tits cone

        Returns:
            tuple: (dominant weight lam, WeylElement u) with u(lam) = weight and
            u the minimal coset representative of u W_lam

        Raises:
            ElementCapExceeded: the ascent did not terminate
        """
        letters = []
        mu = weight
        for _ in range(ForgeConfig.WEYL_ELEMENT_CAP):
            k = next((k for k, c in enumerate(mu) if c < 0), None)
            if k is None:
                return mu, self.multiply_and_normalize(letters)
            letters.append(self.cartan.index_set[k])
            mu = self.cartan.reflect_at(k, mu)
        raise ElementCapExceeded(f"no dominant conjugate found for {weight.to_list()}")

    def min_coset_rep(self, w, lam):
        """
        The minimal length representative of w W_lam

        Args:
            w (WeylElement): any element
            lam (Weight): dominant weight

        Returns:
            WeylElement: floor(w)^lam, with floor(w) lam = w lam
        """
        dominant, rep = self.dominant_conjugate(self.apply(w, lam))
        if dominant != lam:
            raise CartanError(f"weight {lam.to_list()} is not dominant")
        return rep

    # ------------------------------------------------------------------
    # lower order ideals
    # ------------------------------------------------------------------

    def maximal_antichain(self, elements):
        """Bruhat-maximal members of a finite set"""
        elements = list(set(elements))
        maximal = [
            g
            for g in elements
            if not any(h != g and self.bruhat_leq(g, h) for h in elements)
        ]
        return tuple(self.sort(maximal))

    def lower_ideal_close(self, generators):
        """
        Materialize the lower order ideal generated by some elements

        Args:
            generators (iterable): WeylElements

        Returns:
            LowerOrderIdeal
        """
        generators = list(generators)
        closed = set(generators)
        queue = deque(generators)
        while queue:
            w = queue.popleft()
            for v in self.coatoms(w):
                if v not in closed:
                    closed.add(v)
                    queue.append(v)
        ideal = LowerOrderIdeal(self.maximal_antichain(generators), frozenset(closed))
        logger.debug(
            "closed lower ideal",
            extra={"generators": [g.to_list() for g in ideal.generators], "size": len(closed)},
        )
        return ideal

    def ideal_from_elements(self, elements):
        """Lower ideal whose elements are exactly the given down-closed set"""
        elements = frozenset(elements)
        return LowerOrderIdeal(self.maximal_antichain(elements), elements)

    def ideal_intersection(self, a, b):
        return self.ideal_from_elements(a.elements & b.elements)

    def ideal_union(self, a, b):
        return self.ideal_from_elements(a.elements | b.elements)

    def principal_ideal(self, w):
        return self.lower_ideal_close([w])

    # ------------------------------------------------------------------
    # finite type
    # ------------------------------------------------------------------

    def elements(self, cap=None):
        """
        Enumerate W breadth-first by length

        Args:
            cap (int, optional): element cap, defaults to ForgeConfig.WEYL_ELEMENT_CAP

        Returns:
            list: all WeylElements, sorted by length then word

        Raises:
            ElementCapExceeded: the group has more elements than the cap
        """
        if self._elements is not None:
            return self._elements
        cap = ForgeConfig.WEYL_ELEMENT_CAP if cap is None else cap
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for k in range(self.cartan.rank):
                    key = self.cartan.reflect_at(k, w.key)
                    v = self._from_key(key)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
                        if len(seen) > cap:
                            raise ElementCapExceeded(
                                f"Weyl group has more than {cap} elements"
                            )
            frontier = nxt
        self._elements = self.sort(seen)
        logger.debug("enumerated Weyl group", extra={"order": len(seen)})
        return self._elements

    def is_finite_type(self, cap=None):
        """True iff enumeration terminates under the element cap"""
        try:
            self.elements(cap)
            return True
        except ElementCapExceeded:
            return False

    def longest_element(self):
        return max(self.elements(), key=lambda w: w.length)

    def all_lower_ideals(self):
        """
        Every nonempty lower order ideal of a finite Weyl group

        Enumerated as down-closures of Bruhat antichains.

        Returns:
            list: LowerOrderIdeals, sorted by size then generators
        """
        elements = self.elements()
        ideals = {}

        def extend(antichain, start):
            if antichain:
                ideal = self.lower_ideal_close(antichain)
                ideals[ideal.elements] = ideal
            for k in range(start, len(elements)):
                cand = elements[k]
                if all(
                    not self.bruhat_leq(cand, g) and not self.bruhat_leq(g, cand)
                    for g in antichain
                ):
                    extend(antichain + [cand], k + 1)

        extend([], 0)
        return sorted(
            ideals.values(),
            key=lambda i: (len(i.elements), [self.word_key(g) for g in i.generators]),
        )
