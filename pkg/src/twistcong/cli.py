"""Command-line client for the HTTP service.

By default requests go to an in-process instance of the service; pass
``--url`` to talk to a running server instead.  JSON arguments may be given
inline, as ``@path`` to read a file, or as ``-`` to read standard input.
"""

from __future__ import annotations

import json
import os
import sys
import warnings
from pathlib import Path
from typing import Any

import click
import httpx

METHODS = ("closed", "recursion", "gf", "generate", "oracle")


class ServiceError(click.ClickException):
    exit_code = 1


class Client:
    def __init__(self, url: str | None):
        if url:
            self._http = httpx.Client(base_url=url, timeout=None)
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._http = TestClient(app)

    def post(self, path: str, payload: dict[str, Any]) -> dict[str, Any]:
        resp = self._http.post(path, json=payload)
        if resp.status_code != 200:
            try:
                detail = resp.json().get("detail", resp.text)
            except ValueError:
                detail = resp.text
            if not isinstance(detail, str):
                detail = "; ".join(f"{'.'.join(map(str, e.get('loc', [])))}: {e.get('msg')}" for e in detail)
            raise ServiceError(detail)
        return resp.json()


def _load(arg: str) -> Any:
    if arg == "-":
        text = sys.stdin.read()
    elif arg.startswith("@"):
        text = Path(arg[1:]).read_text()
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.BadParameter(f"not valid JSON: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2)


@click.group()
@click.option("--url", envvar="TWISTCONG_URL", default=None, help="Base URL of a running service.")
@click.option("--cap", type=click.IntRange(min=1), default=None,
              help="Enumeration cap (overrides TWISTCONG_CAP).")
@click.pass_context
def main(ctx: click.Context, url: str | None, cap: int | None) -> None:
    """Congruences of twisted partition monoids."""
    if cap is None and os.environ.get("TWISTCONG_CAP"):
        cap = int(os.environ["TWISTCONG_CAP"])
    ctx.obj = {"client": Client(url), "cap": cap}


@main.command()
@click.argument("a")
@click.argument("b")
@click.option("--d", "d", type=click.IntRange(min=0), default=None, help="Multiply in the finite quotient.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def mul(ctx: click.Context, a: str, b: str, d: int | None, out: str | None) -> None:
    """Multiply two partitions or two twisted elements."""
    res = ctx.obj["client"].post("/mul", {"a": _load(a), "b": _load(b), "d": d})
    _emit(_dump(res), out)


@main.command()
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--d", "d", type=click.IntRange(min=0), required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "csv", "report"]), default="json")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def lattice(ctx: click.Context, n: int, d: int, fmt: str, out: str | None) -> None:
    """Build the congruence lattice: JSON (elements, covers, report), DOT Hasse diagram or CSV tables."""
    res = ctx.obj["client"].post("/lattice", {"n": n, "d": d, "cap": ctx.obj["cap"]})
    if fmt == "dot":
        text = res["dot"]
    elif fmt == "csv":
        text = res["csv"]
    elif fmt == "report":
        text = _dump(res["report"])
    else:
        text = _dump({k: res[k] for k in ("n", "d", "report", "elements", "covers")})
    _emit(text, out)


@main.command()
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--d", "d", type=click.IntRange(min=0), required=True)
@click.option("--method", type=click.Choice(METHODS), default="closed")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def count(ctx: click.Context, n: int, d: int, method: str, fmt: str, out: str | None) -> None:
    """Number of congruences of the finite monoid."""
    res = ctx.obj["client"].post("/count", {"n": n, "d": d, "method": method, "cap": ctx.obj["cap"]})
    text = _dump(res) if fmt == "json" else f"n,d,method,count\n{n},{d},{method},{res['count']}"
    _emit(text, out)


@main.command()
@click.option("--nmax", type=click.IntRange(min=0), default=10)
@click.option("--dmax", type=click.IntRange(min=0), default=10)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def table(ctx: click.Context, nmax: int, dmax: int, fmt: str, out: str | None) -> None:
    """Grid of congruence counts, rows n = 0..nmax and columns d = 0..dmax."""
    res = ctx.obj["client"].post("/table", {"nmax": nmax, "dmax": dmax})
    _emit(res["csv"] if fmt == "csv" else _dump(res["rows"]), out)


@main.command()
@click.argument("a")
@click.argument("b")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--d", "d", type=click.IntRange(min=0), default=None, help="Omit for the infinite monoid.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def principal(ctx: click.Context, a: str, b: str, n: int, d: int | None, out: str | None) -> None:
    """Principal congruence generated by the pair (A, B)."""
    res = ctx.obj["client"].post("/principal", {"a": _load(a), "b": _load(b), "n": n, "d": d})
    _emit(_dump(res), out)


@main.command()
@click.argument("left")
@click.argument("right")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def include(ctx: click.Context, left: str, right: str, out: str | None) -> None:
    """Compare two congruences (both C-pairs or both fC-matrices) by inclusion."""
    res = ctx.obj["client"].post("/include", {"left": _load(left), "right": _load(right)})
    _emit(_dump(res), out)


@main.command()
@click.argument("congruence")
@click.option("--oracle", is_flag=True, help="Also check a finite generating set by brute-force closure.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def gen(ctx: click.Context, congruence: str, oracle: bool, out: str | None) -> None:
    """Construct a generating set and report whether it was verified."""
    res = ctx.obj["client"].post("/gen", {"congruence": _load(congruence), "oracle": oracle})
    _emit(_dump(res), out)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("twistcong.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
