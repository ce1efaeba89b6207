"""
Command-line client for the decision service.

All commands build the same request models the HTTP service consumes and
either call the handlers in-process (the default) or forward the request to
a running server given with --server.  Exit codes: 0 for success (EQUAL for
`eq`), 1 for UNEQUAL, 2 for invalid input or transport errors.
"""

from __future__ import annotations

import json
import sys

import click
import httpx
from pydantic import ValidationError

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

_ROUTES = {
    "/eq": (service.handle_eq, VerdictResponse),
    "/nf": (service.handle_nf, NormalFormResponse),
    "/eta": (service.handle_eta, EtaResponse),
    "/perm": (service.handle_perm, PermutationResponse),
    "/britton": (service.handle_britton, BrittonResponse),
    "/bench": (service.handle_bench, BenchResponse),
}


def _build(model_cls, **fields):
    try:
        return model_cls(**fields)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise InputError(f"{'.'.join(map(str, first['loc']))}: {first['msg']}") from exc


def _dispatch(server: str | None, path: str, request):
    handler, response_cls = _ROUTES[path]
    if not server:
        return handler(request)
    try:
        response = httpx.post(
            server.rstrip("/") + path, json=request.model_dump(), timeout=None
        )
    except httpx.HTTPError as exc:
        raise InputError(f"could not reach server: {exc}") from exc
    if response.status_code == 422:
        detail = response.json()
        raise InputError(str(detail.get("detail", detail)), detail.get("position"))
    response.raise_for_status()
    return response_cls.model_validate(response.json())


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


@click.group()
def main() -> None:
    """Decide equality of singular braid words."""


_strands = click.option("--strands", "-n", type=int, required=True, help="Number of strands.")
_json_flag = click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
_server = click.option("--server", default=None, help="Base URL of a running service.")


@main.command()
@_strands
@_json_flag
@_server
@click.argument("words", nargs=-1)
def eq(strands: int, as_json: bool, server: str | None, words: tuple[str, ...]):
    """Decide w1 = w2.  With no word arguments, reads "w1<TAB>w2" lines from stdin."""
    if words and len(words) != 2:
        _fail("eq needs exactly two words (or none for batch mode)")
    pairs = (
        [(words[0], words[1])]
        if words
        else [
            tuple(line.rstrip("\n").split("\t", 1))
            for line in sys.stdin
            if line.strip()
        ]
    )
    any_unequal = False
    for pair in pairs:
        if len(pair) != 2:
            _fail("batch lines must contain two words separated by a tab")
        try:
            request = _build(EqualityRequest, strands=strands, word1=pair[0], word2=pair[1])
            verdict = _dispatch(server, "/eq", request)
        except InputError as exc:
            _fail(str(exc))
        if as_json:
            click.echo(verdict.model_dump_json())
        else:
            word = "EQUAL" if verdict.equal else "UNEQUAL"
            click.echo(f"{word} ({verdict.certificate})")
        any_unequal |= not verdict.equal
    sys.exit(1 if any_unequal else 0)


def _word_command(name: str, path: str, render):
    @main.command(name=name)
    @_strands
    @_json_flag
    @_server
    @click.argument("word")
    def command(strands: int, as_json: bool, server: str | None, word: str):
        try:
            request = _build(WordRequest, strands=strands, word=word)
            response = _dispatch(server, path, request)
        except InputError as exc:
            _fail(str(exc))
        click.echo(response.model_dump_json() if as_json else render(response))

    command.__doc__ = f"Run the {name} query on one word."
    return command


_word_command("nf", "/nf", lambda r: r.key)
_word_command("eta", "/eta", lambda r: r.rendering)
_word_command("perm", "/perm", lambda r: r.display)
_word_command("britton", "/britton", lambda r: r.serialization)


@main.command()
@click.option("--strands", "-n", type=int, default=5)
@click.option("--trials", type=int, default=3)
@click.option("--max-len", type=int, default=400)
@click.option("--max-sing", type=int, default=8)
@click.option("--seed", type=int, default=0)
@_server
def bench(strands, trials, max_len, max_sing, seed, server):
    """Run the complexity benchmark and print the JSON report."""
    try:
        request = _build(
            BenchRequest,
            strands=strands,
            trials=trials,
            max_len=max_len,
            max_sing=max_sing,
            seed=seed,
        )
        response = _dispatch(server, "/bench", request)
    except InputError as exc:
        _fail(str(exc))
    click.echo(json.dumps(response.report, indent=2, sort_keys=True))


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int):
    """Run the HTTP service."""
    import uvicorn

    from .app import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
