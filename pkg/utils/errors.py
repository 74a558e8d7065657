"""
Error Types
Every domain failure raised by the library derives from CrystalForgeError
"""


class CrystalForgeError(Exception):
    """Base class for all crystal-forge errors"""


class CartanError(CrystalForgeError):
    """Invalid Cartan matrix, index set or node label"""


class DominanceHeightExceeded(CrystalForgeError):
    """Dominance search on a singular Cartan matrix hit the height cap"""


class ElementCapExceeded(CrystalForgeError):
    """Weyl group enumeration produced more elements than allowed"""


class GraphFormatError(CrystalForgeError):
    """Malformed crystal document: dangling edge, duplicate id, bad weight"""


class AxiomViolation(CrystalForgeError):
    """
    A crystal graph breaks one of the four crystal axioms

    Attributes:
        axiom (str): "a", "b", "c" or "d"
        element (str): offending element id
        node: offending node label
    """

    def __init__(self, axiom, element, node, detail):
        self.axiom = axiom
        self.element = element
        self.node = node
        self.detail = detail
        super().__init__(
            f"axiom ({axiom}) violated at element {element!r}, i={node}: {detail}"
        )


class TableauError(CrystalForgeError):
    """Invalid partition or non-semistandard tableau"""


class NotHighestWeightError(CrystalForgeError):
    """The graph has no unique highest weight element"""


class EmptyIdealError(CrystalForgeError):
    """Ideal subsets need at least one generator"""


class NotExtremalError(CrystalForgeError):
    """Operation requires an extremal subset"""


class NotIdealError(CrystalForgeError):
    """Operation requires an ideal subset"""


class CharacterMismatchError(CrystalForgeError):
    """Characters differ, so the character criterion does not apply"""


class ModelInconsistencyError(CrystalForgeError):
    """Two independent computations of the same object disagree"""


class ExhaustiveCapError(CrystalForgeError):
    """Crystal too large for an exhaustive subset sweep"""


class SubsetSpecError(CrystalForgeError):
    """
    Subset specification could not be resolved

    Attributes:
        step (str): the failing step of the specification, if any
    """

    def __init__(self, message, step=None):
        self.step = step
        if step is not None:
            message = f"{message} (at step {step!r})"
        super().__init__(message)
