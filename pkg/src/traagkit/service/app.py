"""FastAPI front end: one POST endpoint per operation.

Run with::

    uvicorn traagkit.service.app:app

Parse errors map to 400, exhausted completion budgets to 409; verification
outcomes (word problem answers, failed hom checks, ...) are ordinary 200
responses carrying the result.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..errors import IncompleteSystemError, ParseError
from . import handlers, schemas

app = FastAPI(title="traagkit", version=__version__)


def _run(handler, request):
    try:
        return handler(request)
    except ParseError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except IncompleteSystemError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.post("/parse", response_model=schemas.ParseResponse)
def parse(request: schemas.GraphRequest) -> schemas.ParseResponse:
    return _run(handlers.handle_parse, request)


@app.post("/complete", response_model=schemas.CompleteResponse)
def complete(request: schemas.CompleteRequest) -> schemas.CompleteResponse:
    return _run(handlers.handle_complete, request)


@app.post("/reduce", response_model=schemas.ReduceResponse)
def reduce(request: schemas.WordRequest) -> schemas.ReduceResponse:
    return _run(handlers.handle_reduce, request)


@app.post("/wp", response_model=schemas.WordProblemResponse)
def word_problem(request: schemas.WordRequest) -> schemas.WordProblemResponse:
    return _run(handlers.handle_word_problem, request)


@app.post("/growth", response_model=schemas.GrowthResponse)
def growth(request: schemas.GrowthRequest) -> schemas.GrowthResponse:
    return _run(handlers.handle_growth, request)


@app.post("/torsion", response_model=schemas.TorsionResponse)
def torsion(request: schemas.CompleteRequest) -> schemas.TorsionResponse:
    return _run(handlers.handle_torsion, request)


@app.post("/abel", response_model=schemas.AbelianizationResponse)
def abelianization(request: schemas.GraphRequest) -> schemas.AbelianizationResponse:
    return _run(handlers.handle_abelianization, request)


@app.post("/indicable", response_model=schemas.IndicabilityResponse)
def indicability(request: schemas.GraphRequest) -> schemas.IndicabilityResponse:
    return _run(handlers.handle_indicability, request)


@app.post("/homcheck", response_model=schemas.HomcheckResponse)
def homcheck(request: schemas.HomRequest) -> schemas.HomcheckResponse:
    return _run(handlers.handle_homcheck, request)


@app.post("/cayley", response_model=schemas.CayleyResponse)
def cayley(request: schemas.CayleyRequest) -> schemas.CayleyResponse:
    return _run(handlers.handle_cayley, request)
