"""Request and response schemas for the HTTP service."""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class ExprRequest(BaseModel):
    expr: str


class EvalResponse(BaseModel):
    outcome: str
    value: str


class TextResponse(BaseModel):
    text: str


class BirthdayResponse(BaseModel):
    birthday: int


class EquivRequest(BaseModel):
    left: str
    right: str
    day: int = Field(default=2, ge=0)


class EquivResponse(BaseModel):
    refuted: bool
    witness: Optional[str] = None
    contexts_checked: int


class UniverseRequest(BaseModel):
    day: int = Field(default=2, ge=0)


class UniverseResponse(BaseModel):
    day: int
    members: list[str]


class SubtractionTableRequest(BaseModel):
    subtraction_set: list[int] = Field(min_length=1)
    max_size: int = Field(ge=0)


class EvenNimTableRequest(BaseModel):
    max_size: int = Field(ge=0)


class TableRow(BaseModel):
    n: int
    value: str
    outcome: str


class TableResponse(BaseModel):
    rows: list[TableRow]
    preperiod: Optional[int] = None
    period: Optional[int] = None


class EvenNimOutcomeRequest(BaseModel):
    sizes: list[int]


class OutcomeResponse(BaseModel):
    outcome: str


class StatusResponse(BaseModel):
    status: str
