"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field


class QuiverRequest(BaseModel):
    spec: str = Field(description="quiver description, e.g. 'cyclic t=4 nodes=(0,-1)'")


class FibreRequest(QuiverRequest):
    gamma: str = Field(description="base-point section literal, e.g. '1*(0:1)(1:1)'")
    threads: Optional[int] = Field(default=None, ge=1)


class CountRequest(QuiverRequest):
    profile: List[int] = Field(description="root multiplicities, summing to n*t")


class RepRequest(QuiverRequest):
    rep: str = Field(description="semicolon-separated sections: 'phi1=...; phi2=...'")


class AnalyzeResponse(BaseModel):
    twist: int
    canonical_degrees: List[int]
    eta: int
    nilcone_dims: List[int]
    bundle_rank: int
    rep_dim: int
    moduli_dim: int
    coprime: bool


class FibrePoint(BaseModel):
    phis: List[str]


class FibreSetResponse(BaseModel):
    gamma: str
    count: int
    points: List[FibrePoint]
    nilcone: bool
    nilcone_dims: Optional[List[int]]
    canonical_degrees: List[int]
    twist: int
    vanishing_map: Optional[str] = None


class CountResponse(BaseModel):
    count: int
    profile: List[int]
    canonical_degrees: List[int]
    twist: int


class FlowResponse(BaseModel):
    phis: List[str]
    hitchin: str
    nilcone_dims: List[int]


class StabilityWitness(BaseModel):
    nodes: List[int]
    slope: str
    total_slope: str


class StableResponse(BaseModel):
    stable: bool
    witness: Optional[StabilityWitness] = None


class Poly(BaseModel):
    degree: int
    coeffs: List[str]


class Multiplier(Poly):
    i: int
    j: int


class ReduceResponse(BaseModel):
    reduction_amounts: List[int]
    odd_maps: List[Poly]
    even_maps: List[Poly]
    multipliers: List[Multiplier]
    chart_shift: int
    hitchin: Poly
    lambda_exponent: int


class Factor(BaseModel):
    node_degree: int
    reduction: int
    tail_degree: int


class DecomposeResponse(BaseModel):
    twist: int
    tail_degree: int
    factors: List[Factor]
    cover_count: int
    special_locus_dim: int


class ErrorResponse(BaseModel):
    kind: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None
