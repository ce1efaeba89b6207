"""FastAPI application exposing the decision service."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from . import service
from .service import (
    BenchRequest,
    BenchResponse,
    BrittonResponse,
    EqualityRequest,
    EtaResponse,
    InputError,
    NormalFormResponse,
    PermutationResponse,
    VerdictResponse,
    WordRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="singbraid",
        description="Equality decision for singular braid words.",
    )

    @app.exception_handler(InputError)
    async def input_error_handler(_, exc: InputError):
        payload = {"detail": exc.message}
        if exc.position is not None:
            payload["position"] = exc.position
        return JSONResponse(status_code=422, content=payload)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/eq", response_model=VerdictResponse)
    def eq(request: EqualityRequest):
        return service.handle_eq(request)

    @app.post("/nf", response_model=NormalFormResponse)
    def nf(request: WordRequest):
        return service.handle_nf(request)

    @app.post("/eta", response_model=EtaResponse)
    def eta(request: WordRequest):
        return service.handle_eta(request)

    @app.post("/perm", response_model=PermutationResponse)
    def perm(request: WordRequest):
        return service.handle_perm(request)

    @app.post("/britton", response_model=BrittonResponse)
    def britton(request: WordRequest):
        return service.handle_britton(request)

    @app.post("/bench", response_model=BenchResponse)
    def bench(request: BenchRequest):
        return service.handle_bench(request)

    return app


app = create_app()
