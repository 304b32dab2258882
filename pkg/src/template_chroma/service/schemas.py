"""Request/response models for the HTTP service and the CLI.

Field order in the response models is the emitted JSON key order; the CLI
doc examples are compared byte for byte against it.
"""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, Field

RawPoints = list[list[int]]
RawRationalPoint = list[Union[int, str]]


class TemplateModel(BaseModel):
    dim: int
    points: list[list[int]]


class SettingModel(BaseModel):
    continuum: int = Field(ge=1)


class AnalyzeRequest(BaseModel):
    points: RawPoints
    continuum: int = Field(ge=1)


class AnalyzeResponse(BaseModel):
    e: int
    simple: bool
    connected: bool
    chi: str


class EnumerateRequest(BaseModel):
    dim: int = Field(ge=1)
    k: int = Field(ge=2)
    simple_only: bool = False


class EnumerateResponse(BaseModel):
    count: int
    templates: list[TemplateModel]


class ImagesRequest(BaseModel):
    points: RawPoints


class ImagesResponse(BaseModel):
    count: int
    images: list[TemplateModel]


class SymbolicChiRequest(BaseModel):
    points: RawPoints
    continuum: int = Field(ge=1)


class SymbolicChiResponse(BaseModel):
    chi: str
    e: int
    template: TemplateModel
    setting: SettingModel
    citation: str


class ExactChiRequest(BaseModel):
    grid: list[int]
    points: RawPoints
    include_witness: bool = False


class ExactChiResponse(BaseModel):
    chi: int


class ExactChiWitnessResponse(BaseModel):
    chi: int
    witness: list[int]


class AchievableRequest(BaseModel):
    k: int = Field(ge=2)
    continuum: int = Field(ge=1)


class AchievableResponse(BaseModel):
    finite_min: int
    infinite: list[str]


class ForbiddenRequest(BaseModel):
    k: int = Field(ge=2)
    kappa: str
    continuum: int = Field(ge=1)


class ForbiddenMember(BaseModel):
    e: int
    template: TemplateModel


class ForbiddenResponse(BaseModel):
    k: int
    kappa: str
    continuum: int
    members: list[ForbiddenMember]


class LiftRequest(BaseModel):
    points: RawPoints
    target_dim: Optional[int] = None  # default: dim + 1
    reduce: bool = False  # project onto a minimum distinguisher instead


class LiftResponse(BaseModel):
    template: TemplateModel
    base: TemplateModel
    e: int
    trace: list[str]


class ReduceResponse(BaseModel):
    template: TemplateModel
    witness: list[int]
    source_dim: int
    fill: int
    simple: bool
    map: str


class VerifyRequest(BaseModel):
    points: RawPoints
    target_dim: Optional[int] = None
    samples: int = Field(default=1000, ge=1)
    bound: int = Field(default=50, ge=2)
    seed: int = 0
    edge_fraction: float = Field(default=0.5, ge=0.0, le=1.0)
    control_points: Optional[RawPoints] = None  # negative control: lift this template instead


class VerifyResponse(BaseModel):
    samples_checked: int
    edge_agreements: int
    failures: list[list[list[int]]]
    seed: int
    bound: int
    ok: bool


class PolyGenRequest(BaseModel):
    points: RawPoints
    symmetrize: bool = False
    reflexive: bool = False


class PolyResponse(BaseModel):
    k: int
    n: int
    symmetrized: bool
    reflexive: bool
    text: str
    ast: dict


class PolyParseRequest(BaseModel):
    text: str
    k: int = Field(ge=2)
    n: int = Field(ge=1)


class ZeroGraphRequest(BaseModel):
    text: str
    k: int = Field(ge=2)
    n: int = Field(ge=1)
    points: list[RawRationalPoint]


class HypergraphResponse(BaseModel):
    k: int
    vertices: list[list]
    edges: list[list[int]]


class RegistryRequest(BaseModel):
    name: str
    param: Optional[int] = None
    kappa: Optional[str] = None
    continuum: Optional[int] = Field(default=None, ge=1)
    cardinality: Optional[str] = None  # distance entry only


class RegistryAvoidableResponse(BaseModel):
    avoidable: bool


class RegistryDistanceResponse(BaseModel):
    chi_upper: str


RegistryResponse = Union[RegistryAvoidableResponse, RegistryDistanceResponse]


class ShiftGraphRequest(BaseModel):
    n: int = Field(ge=2)


class ShiftColorRequest(BaseModel):
    point: RawRationalPoint


class ShiftColorResponse(BaseModel):
    value: str
    tag: Optional[int]


class HealthResponse(BaseModel):
    status: str
    version: str
