"""
Subset Specification Language
Names subsets of a crystal the way elements are written by hand

    hw; f1 @hw; f2 @hw          three elements, operators act right to left
    f2 f2 f1 @hw                 f_2 f_2 f_1 applied to the highest weight element
    "[[1,2],[2]]"                a raw element id
    demazure [2,1]               B_w for the word s2 s1
    ideal [[1],[2]]              B_I for the ideal generated by s1 and s2
    all                          the whole crystal
"""

from lark import Lark, Transformer, v_args
from lark.exceptions import LarkError

from config.logging_setup import get_logger
from models.base_model import SubsetHandle
from models.demazure import demazure_crystal, ideal_subset
from utils.errors import CrystalForgeError, SubsetSpecError

logger = get_logger(__name__)

GRAMMAR = r"""
    start: item (";" item)* ";"?

    ?item: "hw"                     -> highest
         | "all"                    -> whole
         | OPERATOR+ "@hw"          -> path
         | ESCAPED_STRING           -> raw
         | "demazure" word          -> demazure
         | "ideal" "[" word ("," word)* "]" -> ideal

    word: "[" [label ("," label)*] "]"
    ?label: INT -> int_label
          | CNAME -> name_label

    OPERATOR: /f[A-Za-z0-9_]+/

    %import common.ESCAPED_STRING
    %import common.INT
    %import common.CNAME
    %import common.WS
    %ignore WS
"""

_parser = Lark(GRAMMAR, parser="lalr")


@v_args(inline=True)
class _Items(Transformer):
    """Turn the parse tree into (kind, payload) items"""

    def start(self, *items):
        return list(items)

    def highest(self):
        return ("path", ())

    def whole(self):
        return ("all", None)

    def path(self, *ops):
        return ("path", tuple(str(op)[1:] for op in ops))

    def raw(self, text):
        return ("raw", str(text)[1:-1].replace('\\"', '"'))

    def demazure(self, word):
        return ("demazure", word)

    def ideal(self, *words):
        return ("ideal", list(words))

    def word(self, *labels):
        return tuple(label for label in labels if label is not None)

    def int_label(self, token):
        return int(token)

    def name_label(self, token):
        return str(token)


def parse_subset_spec(text):
    """
    Parse a subset specification

    Returns:
        list: (kind, payload) items

    Raises:
        SubsetSpecError: syntax error
    """
    try:
        tree = _parser.parse(text)
    except LarkError as e:
        raise SubsetSpecError(f"cannot parse subset specification: {e}") from e
    return _Items().transform(tree)


def _follow_path(graph, ops):
    """Apply lowering operators right to left from the highest weight element"""
    b = graph.highest_weight()
    done = []
    for op in reversed(ops):
        done.insert(0, f"f{op}")
        try:
            nxt = graph.f(op, b)
        except CrystalForgeError as e:
            raise SubsetSpecError(str(e), step=" ".join(done) + " @hw") from e
        if nxt is None:
            raise SubsetSpecError(
                f"f{op} is not defined on {b!r}", step=" ".join(done) + " @hw"
            )
        b = nxt
    return b


def resolve_subset(graph, text):
    """
    Resolve a specification to a subset of a crystal graph

    A single demazure or ideal item keeps its typed subset and provenance;
    anything else becomes a plain handle.

    Args:
        graph (CrystalGraph): the crystal
        text (str): specification

    Returns:
        BaseSubset

    Raises:
        SubsetSpecError: bad syntax, a path falling off the crystal, unknown id
    """
    items = parse_subset_spec(text)
    weyl = graph.weyl
    members = set()
    typed = None
    for kind, payload in items:
        step = kind if payload is None else f"{kind} {payload}"
        try:
            if kind == "path":
                members.add(_follow_path(graph, payload))
            elif kind == "all":
                members |= set(graph.elements)
            elif kind == "raw":
                if not graph.has_element(payload):
                    raise SubsetSpecError(f"unknown element id {payload!r}", step=step)
                members.add(payload)
            elif kind == "demazure":
                typed = demazure_crystal(graph, weyl.element(payload))
                members |= typed.members
            elif kind == "ideal":
                ideal = weyl.lower_ideal_close(weyl.element(w) for w in payload)
                typed = ideal_subset(graph, ideal)
                members |= typed.members
        except SubsetSpecError:
            raise
        except CrystalForgeError as e:
            raise SubsetSpecError(str(e), step=step) from e

    logger.debug("resolved subset", extra={"spec": text, "size": len(members)})
    if len(items) == 1 and typed is not None:
        return typed
    return SubsetHandle(graph, members, source=text)
