"""Pydantic request/response models for the HTTP service and the CLI.

Both front ends share these models: the CLI renders them as stable text or
canonical JSON, the service returns them directly.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class GraphRequest(BaseModel):
    graph: str = Field(description="Graph file content")
    order: Optional[str] = Field(default=None, description="Vertex names, space separated")


class CompleteRequest(GraphRequest):
    max_rules: int = 10_000
    max_steps: int = 1_000_000


class WordRequest(CompleteRequest):
    word: str


class GrowthRequest(CompleteRequest):
    radius: int = 5
    compare: bool = False


class CayleyRequest(CompleteRequest):
    radius: int = 3
    check: bool = False


class HomRequest(BaseModel):
    source_graph: str
    target_graph: str
    map: str
    inverse_map: Optional[str] = None
    max_rules: int = 10_000
    max_steps: int = 1_000_000


class ParseResponse(BaseModel):
    vertices: list[str]
    undirected: list[list[str]]
    directed: list[list[str]]
    origins: list[str]
    order: list[str]


class RuleText(BaseModel):
    lhs: str
    rhs: str


class CompleteResponse(BaseModel):
    status: str
    passes: int
    examined: int
    added: int
    rules: list[RuleText]


class ReduceResponse(BaseModel):
    input: str
    normal_form: str
    geodesic_length: int


class WordProblemResponse(BaseModel):
    trivial: bool
    normal_form: str


class GrowthResponse(BaseModel):
    radius: int
    spheres: list[int]
    geodesics: list[int]
    underlying_spheres: Optional[list[int]] = None
    underlying_geodesics: Optional[list[int]] = None
    equal: Optional[bool] = None


class TorsionResponse(BaseModel):
    torsion: bool
    cycle: Optional[list[str]] = None
    element: Optional[str] = None
    element_order: Optional[int] = None


class AbelianizationResponse(BaseModel):
    free_rank: int
    z2_rank: int


class IndicabilityResponse(BaseModel):
    indicable: bool
    witness: Optional[str] = None


class HomcheckResponse(BaseModel):
    homomorphism: bool
    violated: Optional[str] = None
    inverse_homomorphism: Optional[bool] = None
    inverse_violated: Optional[str] = None
    mutually_inverse: Optional[bool] = None


class CayleyResponse(BaseModel):
    radius: int
    nodes: int
    edges: int
    dot: Optional[str] = None
    layers: Optional[list[list[str]]] = None
    geodesic_counts: Optional[dict[str, int]] = None
    bijective: Optional[bool] = None
    adjacency_preserved: Optional[bool] = None
