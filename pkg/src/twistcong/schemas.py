"""Request and response models for the HTTP service."""

from __future__ import annotations

from enum import Enum
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator


class PartitionModel(BaseModel):
    n: int = Field(ge=0)
    blocks: list[list[int]]


class ElementModel(BaseModel):
    """A twisted element ``{"i", "alpha"}`` or the zero ``{"zero": true}``."""

    i: int | None = Field(default=None, ge=0)
    alpha: PartitionModel | None = None
    zero: bool = False

    @model_validator(mode="after")
    def _one_form(self) -> "ElementModel":
        if self.zero and (self.i is not None or self.alpha is not None):
            raise ValueError("zero takes no column or partition")
        if not self.zero and (self.i is None or self.alpha is None):
            raise ValueError("an element needs both i and alpha, or zero: true")
        return self


class NatCongModel(BaseModel):
    trivial: bool = False
    min: int | None = Field(default=None, ge=0)
    per: int | None = Field(default=None, ge=1)


class CRowModel(BaseModel):
    prefix: list[str] = []
    limit: str


class CongruenceModel(BaseModel):
    n: int = Field(ge=0)
    theta: list[NatCongModel]
    rows: list[CRowModel]
    exceptional: bool = False


class FCMatrixModel(BaseModel):
    n: int = Field(ge=1)
    d: int = Field(ge=0)
    grid: list[list[str]]


class Method(str, Enum):
    closed = "closed"
    recursion = "recursion"
    gf = "gf"
    generate = "generate"
    oracle = "oracle"


class MulRequest(BaseModel):
    """Two partitions, or two twisted elements (with ``d`` for the finite quotient)."""

    a: dict[str, Any]
    b: dict[str, Any]
    d: int | None = Field(default=None, ge=0)


class MulResponse(BaseModel):
    product: dict[str, Any]
    phi: int | None = None


class LatticeRequest(BaseModel):
    n: int = Field(ge=0)
    d: int = Field(ge=0)
    cap: int | None = Field(default=None, ge=1)


class LatticeResponse(BaseModel):
    n: int
    d: int
    report: dict[str, Any]
    elements: list[Any]
    covers: list[list[int]]
    dot: str
    csv: str


class CountRequest(BaseModel):
    n: int = Field(ge=0)
    d: int = Field(ge=0)
    method: Method = Method.closed
    cap: int | None = Field(default=None, ge=1)


class CountResponse(BaseModel):
    n: int
    d: int
    method: Method
    count: int


class TableRequest(BaseModel):
    nmax: int = Field(ge=0)
    dmax: int = Field(ge=0)


class TableResponse(BaseModel):
    nmax: int
    dmax: int
    rows: list[list[int]]
    csv: str


class PrincipalRequest(BaseModel):
    """Omit ``d`` for the infinite monoid."""

    a: ElementModel
    b: ElementModel
    n: int = Field(ge=1)
    d: int | None = Field(default=None, ge=0)


class PrincipalResponse(BaseModel):
    setting: Literal["infinite", "finite"]
    case: int | None = None
    congruence: dict[str, Any]
    label: str


class IncludeRequest(BaseModel):
    """Two C-pair congruences, or two fC-matrices of the same size."""

    left: dict[str, Any]
    right: dict[str, Any]


class IncludeResponse(BaseModel):
    left_in_right: bool
    right_in_left: bool
    relation: Literal["equal", "below", "above", "incomparable"]


class GenRequest(BaseModel):
    congruence: dict[str, Any]
    oracle: bool = False


class GenResponse(BaseModel):
    setting: Literal["infinite", "finite"]
    pairs: list[list[dict[str, Any]]]
    size: int
    bound: int
    verdict: str
    oracle_match: bool | None = None
