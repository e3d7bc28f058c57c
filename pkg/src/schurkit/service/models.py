"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

PartitionParts = list[int]


class SchurRequest(BaseModel):
    partition: PartitionParts
    num_vars: int = Field(ge=0, le=8)
    method: Literal["bialternant", "jt-h", "jt-e", "tableaux", "abacus"] = "bialternant"


class PolynomialResponse(BaseModel):
    polynomial: str


class ExpandRequest(BaseModel):
    source: Literal["h", "e", "m", "s"]
    target: Literal["s"] = "s"
    mu: PartitionParts


class CoefficientEntry(BaseModel):
    partition: PartitionParts
    coefficient: int


class CoefficientTableResponse(BaseModel):
    coefficients: list[CoefficientEntry]


class KostkaRequest(BaseModel):
    shape: PartitionParts
    content: list[int]
    canonical: bool = False


class KostkaResponse(BaseModel):
    kostka: int
    canonical_tableau: Optional[list[list[int]]] = None


class LRRequest(BaseModel):
    alpha: PartitionParts
    beta: PartitionParts
    outer: Optional[PartitionParts] = None


class LRResponse(BaseModel):
    coefficient: Optional[int] = None
    coefficients: Optional[list[CoefficientEntry]] = None


class InsertRequest(BaseModel):
    tableau: list[list[int]]
    letter: int = Field(ge=1)


class TableauResponse(BaseModel):
    tableau: list[list[int]]


class WordRequest(BaseModel):
    word: str


class PWResponse(BaseModel):
    tableau: list[list[int]]
    shape: PartitionParts
    greene_shape: PartitionParts
    greene_conjugate: PartitionParts


class RSKRequest(BaseModel):
    matrix: list[list[int]]
    flavor: Literal["rsk", "rsk_star", "burge"] = "rsk"


class RSKResponse(BaseModel):
    p: list[list[int]]
    q: list[list[int]]


class AbacusResponse(BaseModel):
    sign: int
    shape: PartitionParts
    weight: str


class PathsRequest(BaseModel):
    model: Literal["h", "e", "giambelli"]
    shape: PartitionParts
    num_vars: int = Field(ge=1, le=6)
    inner: Optional[PartitionParts] = None
    limit: int = Field(default=3, ge=0)


class PathsResponse(BaseModel):
    count: int
    rendering: str
