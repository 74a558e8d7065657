"""
Document Schemas
pydantic models validating every JSON document read or written
"""

from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from utils.errors import GraphFormatError

NodeLabel = Union[int, str]


class CartanDoc(BaseModel):
    """Either a named type or an explicit matrix"""

    type: Optional[str] = None
    rank: Optional[int] = None
    index_set: Optional[list[NodeLabel]] = None
    matrix: Optional[list[list[int]]] = None
    name: Optional[str] = None

    @model_validator(mode="after")
    def check_form(self):
        if self.type is not None:
            if self.rank is None:
                raise ValueError("named Cartan types need a rank")
        elif self.matrix is None:
            raise ValueError("Cartan document needs 'matrix' or 'type'")
        return self

    def to_input(self):
        return self.model_dump(exclude_none=True)


class ElementDoc(BaseModel):
    id: str
    wt: list[int]


class EdgeDoc(BaseModel):
    src: str
    i: NodeLabel
    dst: str


class CrystalDoc(BaseModel):
    cartan: CartanDoc
    elements: list[ElementDoc]
    edges: list[EdgeDoc] = []
    model: Optional[dict] = None


class SubsetDoc(BaseModel):
    members: list[str]
    provenance: dict = {}


class TermDoc(BaseModel):
    wt: list[int]
    mult: int


class CharacterDoc(BaseModel):
    terms: list[TermDoc]


class ClassificationReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    size: int
    extremal: bool
    ideal: bool
    principal: bool
    demazure: bool
    w: Optional[list[NodeLabel]] = None
    ideal_generators: Optional[list[list[NodeLabel]]] = None
    witness: Optional[dict] = None


def validate_document(schema, doc):
    """
    Validate a parsed JSON document against a schema

    Args:
        schema (type): pydantic model class
        doc (dict): parsed JSON

    Returns:
        the validated model instance

    Raises:
        GraphFormatError: the document does not match the schema
    """
    try:
        return schema.model_validate(doc)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise GraphFormatError(f"invalid {schema.__name__} at {where}: {first['msg']}") from e
