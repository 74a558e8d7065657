"""
Models package
"""

from models.base_model import BaseSubset, SubsetHandle
from models.cartan import CartanData, Weight
from models.weyl import LowerOrderIdeal, WeylElement, WeylGroup
from models.crystal import CrystalGraph
from models.demazure import AtomSubset, DemazureSubset, IdealSubset
from models.character import FormalCharacter

__all__ = [
    "BaseSubset",
    "SubsetHandle",
    "CartanData",
    "Weight",
    "WeylElement",
    "WeylGroup",
    "LowerOrderIdeal",
    "CrystalGraph",
    "DemazureSubset",
    "AtomSubset",
    "IdealSubset",
    "FormalCharacter",
]
