"""
Request/response models and handlers shared by the HTTP service and the CLI.

Each handler is a pure function from a request model to a response model;
the FastAPI app exposes them over HTTP and the command-line client calls
them in-process (or forwards the same JSON to a remote server).  Invalid
words raise InputError, which the transports turn into exit code 2 or an
HTTP 422 respectively.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from .bench import BenchParams, run_bench
from .braids import normal_form
from .decide import decide_equal
from .errors import NotationError, PurityError, StrandMismatchError, UnsupportedWordError
from .group_ring import desingularize
from .notation import (
    format_britton,
    format_permutation,
    format_word,
    parse_braid_word,
    parse_word,
)
from .singular import to_britton_form


class InputError(Exception):
    """A request could not be served because its payload is invalid."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.message = message
        self.position = position


class EqualityRequest(BaseModel):
    strands: int = Field(ge=2)
    word1: str
    word2: str


class VerdictResponse(BaseModel):
    equal: bool
    certificate: str
    steps: int


class WordRequest(BaseModel):
    strands: int = Field(ge=2)
    word: str


class NormalFormResponse(BaseModel):
    key: str
    infimum: int
    canonical_length: int


class RingTerm(BaseModel):
    coefficient: int
    key: str


class EtaResponse(BaseModel):
    rendering: str
    terms: list[RingTerm]


class PermutationResponse(BaseModel):
    mapping: list[int]
    display: str


class BrittonResponse(BaseModel):
    serialization: str
    segments: list[str]
    labels: list[tuple[int, int]]


class BenchRequest(BaseModel):
    strands: int = Field(default=5, ge=2)
    trials: int = Field(default=3, ge=0)
    max_len: int = Field(default=400, ge=10)
    max_sing: int = Field(default=8, ge=1)
    seed: int = 0


class BenchResponse(BaseModel):
    report: dict


def _wrap(fn, *args):
    try:
        return fn(*args)
    except NotationError as exc:
        raise InputError(str(exc), exc.position) from exc
    except (UnsupportedWordError, PurityError, StrandMismatchError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def handle_eq(request: EqualityRequest) -> VerdictResponse:
    def run():
        w1 = parse_word(request.word1, request.strands)
        w2 = parse_word(request.word2, request.strands)
        verdict = decide_equal(w1, w2)
        return VerdictResponse(
            equal=verdict.equal, certificate=verdict.certificate, steps=verdict.steps
        )

    return _wrap(run)


def handle_nf(request: WordRequest) -> NormalFormResponse:
    def run():
        word = parse_braid_word(request.word, request.strands)
        nf = normal_form(word)
        return NormalFormResponse(
            key=nf.key(), infimum=nf.power, canonical_length=nf.canonical_length()
        )

    return _wrap(run)


def handle_eta(request: WordRequest) -> EtaResponse:
    def run():
        word = parse_word(request.word, request.strands)
        element = desingularize(word)
        terms = [
            RingTerm(coefficient=coeff, key=key) for coeff, key in element.sorted_terms()
        ]
        return EtaResponse(rendering=element.render(), terms=terms)

    return _wrap(run)


def handle_perm(request: WordRequest) -> PermutationResponse:
    def run():
        word = parse_word(request.word, request.strands)
        p = word.permutation()
        return PermutationResponse(mapping=list(p.images), display=format_permutation(p))

    return _wrap(run)


def handle_britton(request: WordRequest) -> BrittonResponse:
    def run():
        word = parse_word(request.word, request.strands)
        form = to_britton_form(word)
        return BrittonResponse(
            serialization=format_britton(form),
            segments=[format_word(seg) for seg in form.segments],
            labels=[(label.k, label.j) for label in form.labels],
        )

    return _wrap(run)


def handle_bench(request: BenchRequest) -> BenchResponse:
    params = BenchParams(
        strands=request.strands,
        trials=request.trials,
        max_len=request.max_len,
        max_sing=request.max_sing,
        seed=request.seed,
    )
    return BenchResponse(report=run_bench(params))
