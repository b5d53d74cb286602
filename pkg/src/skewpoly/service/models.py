"""Pydantic request/response models for the compute service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class RingRequest(BaseModel):
    ring: str


class PolyRequest(RingRequest):
    poly: str
    seed: int = 0
    verify: bool = False


class ParseRequest(RingRequest):
    poly: str


class ParseResponse(BaseModel):
    ring: str
    input: str
    canonical: str
    degree: int


class BinopRequest(RingRequest):
    f: str
    g: str
    verify: bool = False


class ResultResponse(BaseModel):
    ring: str
    input: list[str]
    result: list[str]
    certificates: list[dict] = Field(default_factory=list)
    seed: Optional[int] = None
    verified: Optional[bool] = None


class LdivResponse(BaseModel):
    ring: str
    input: list[str]
    quotient: str
    remainder: str
    verified: Optional[bool] = None


class BoundRequest(PolyRequest):
    algorithm: Literal["v1", "v2"] = "v2"


class BoundResponse(BaseModel):
    ring: str
    input: list[str]
    result: list[str]
    central: dict
    certificates: list[dict] = Field(default_factory=list)
    degree: int
    verified: Optional[bool] = None
    seed: Optional[int] = None


class IrreducibleRequest(PolyRequest):
    algorithm: Literal["v1", "v2"] = "v2"


class IrreducibleResponse(BaseModel):
    ring: str
    input: list[str]
    irreducible: bool
    verified: Optional[bool] = None
    seed: int


class FactorRequest(PolyRequest):
    central_factors: Optional[list[str]] = None
    jobs: int = 1


class FactorResponse(BaseModel):
    ring: str
    input: list[str]
    unit: str
    result: list[str]
    certificates: list[dict]
    count: int
    verified: Optional[bool] = None
    seed: int


class SplitRequest(PolyRequest):
    pi: str


class SplitResponse(BaseModel):
    ring: str
    input: list[str]
    left: str
    right: str
    verified: Optional[bool] = None


class BenchRequest(RingRequest):
    op: Literal["bound", "factor"]
    degrees: list[int]
    trials: int = 3
    seed: int = 0
    jobs: int = 1
    algorithm: Literal["v1", "v2"] = "v2"


class BenchResponse(BaseModel):
    ring: str
    op: str
    rows: list[dict]
    slope: Optional[float] = None
    seed: int


class ErrorBody(BaseModel):
    code: str
    message: str
    position: Optional[int] = None
