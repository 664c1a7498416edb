"""HTTP service exposing the moduli computations.

Run with ``uvicorn cyclic_moduli.server:app``.  Parse errors map to 400 with
location info, domain errors to 422; both carry the same JSON error shape.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import handlers
from .errors import CyclicModuliError, SpecError
from .schemas import (
    AnalyzeResponse,
    CountRequest,
    CountResponse,
    DecomposeResponse,
    FibreRequest,
    FibreSetResponse,
    FlowResponse,
    QuiverRequest,
    ReduceResponse,
    RepRequest,
    StableResponse,
)

app = FastAPI(
    title="cyclic-moduli",
    description="Exact moduli computations for twisted cyclic quiver "
    "representations on the projective line",
    version="0.1.0",
)


@app.exception_handler(SpecError)
async def spec_error_handler(_: Request, exc: SpecError) -> JSONResponse:
    kind = type(exc).__name__.removeprefix("Spec")
    return JSONResponse(
        status_code=400,
        content={"kind": kind, "message": exc.message, "line": exc.line, "column": exc.column},
    )


@app.exception_handler(CyclicModuliError)
async def domain_error_handler(_: Request, exc: CyclicModuliError) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={"kind": type(exc).__name__, "message": str(exc), "line": None, "column": None},
    )


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(req: QuiverRequest):
    return handlers.analyze(req.spec)


@app.post("/fibre", response_model=FibreSetResponse)
def fibre(req: FibreRequest):
    return handlers.fibre(req.spec, req.gamma, threads=req.threads)


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest):
    return handlers.count(req.spec, req.profile)


@app.post("/nilcone", response_model=FibreSetResponse)
def nilcone(req: QuiverRequest):
    return handlers.nilcone(req.spec)


@app.post("/flow", response_model=FlowResponse)
def flow(req: RepRequest):
    return handlers.flow(req.spec, req.rep)


@app.post("/stable", response_model=StableResponse)
def stable(req: RepRequest):
    return handlers.stable(req.spec, req.rep)


@app.post("/reduce", response_model=ReduceResponse)
def reduce(req: RepRequest):
    return handlers.reduce(req.spec, req.rep)


@app.post("/decompose", response_model=DecomposeResponse)
def decompose(req: QuiverRequest):
    return handlers.decompose_cmd(req.spec)
