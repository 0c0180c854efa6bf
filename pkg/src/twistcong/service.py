"""HTTP service exposing the congruence computations.

Every endpoint takes and returns JSON in the formats of the core modules.
Bad input (malformed JSON objects, invalid matrices, cap overruns) yields a
400 response whose ``detail`` is a one-line diagnostic.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .cong_finite import (
    FCMatrix, build_lattice, enumerate_fc, fc_generating_set, fcong_leq, generated_fc, principal_fc, validate_fc,
)
from .cong_infinite import (
    Congruence, cong_leq, generating_set, generation_bound, principal_case, principal_cpair, validate_congruence,
    verify_generators,
)
from .enumeration import count_closed, count_gf, count_recursion, table, table_csv
from .lattice_analysis import property_report, to_csv, to_dot
from .oracle_bruteforce import all_congruences, congruence_closure, match_to_fc
from .partition_core import multiply, partition_from_json
from .schemas import (
    CountRequest, CountResponse, ElementModel, GenRequest, GenResponse, IncludeRequest, IncludeResponse,
    LatticeRequest, LatticeResponse, Method, MulRequest, MulResponse, PrincipalRequest, PrincipalResponse,
    TableRequest, TableResponse,
)
from .twisted_monoid import Pair, TwistedElement, Zero, element_from_json, elements_of, t_mul_d, t_mul_infinite

app = FastAPI(title="twistcong", version=__version__)


@app.exception_handler(ValueError)
@app.exception_handler(KeyError)
@app.exception_handler(TypeError)
async def _bad_input(request: Request, exc: Exception) -> JSONResponse:
    detail = str(exc) if not isinstance(exc, KeyError) else f"missing field {exc}"
    return JSONResponse(status_code=400, content={"detail": detail})


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


# -- helpers ---------------------------------------------------------------------------------


def _element(model: ElementModel, n: int) -> TwistedElement:
    x = element_from_json(model.model_dump(exclude_none=True), n)
    if isinstance(x, Pair) and x.alpha.n != n:
        raise ValueError(f"element has n={x.alpha.n}, expected {n}")
    return x


def _check_lattice_cap(n: int, d: int, cap: int | None) -> None:
    if cap is not None and n >= 1 and count_closed(n, d) > cap:
        raise ValueError(f"Cong(P_{{{n},{d}}}) has {count_closed(n, d)} elements, above the cap {cap}")


def _congruence(data: dict[str, Any]) -> Congruence | FCMatrix:
    if "grid" in data:
        m = FCMatrix.from_json(data)
        problems = validate_fc(m)
    else:
        m = Congruence.from_json(data)
        problems = validate_congruence(m)
    if problems:
        raise ValueError("invalid congruence: " + "; ".join(problems))
    return m


def _pair_json(a: TwistedElement, b: TwistedElement) -> list[dict[str, Any]]:
    return [a.to_json(), b.to_json()]


# -- endpoints -------------------------------------------------------------------------------


@app.post("/mul", response_model=MulResponse)
def mul(req: MulRequest) -> MulResponse:
    if "blocks" in req.a or "blocks" in req.b:
        alpha, beta = partition_from_json(req.a), partition_from_json(req.b)
        if alpha.n != beta.n:
            raise ValueError(f"mismatched n: {alpha.n} and {beta.n}")
        prod, phi = multiply(alpha, beta)
        return MulResponse(product=prod.to_json(), phi=phi)
    n = next((int(x["alpha"]["n"]) for x in (req.a, req.b) if "alpha" in x), None)
    if n is None:
        raise ValueError("at least one factor must be a non-zero element")
    a, b = (element_from_json(x, n) for x in (req.a, req.b))
    phi = None
    if isinstance(a, Pair) and isinstance(b, Pair):
        if a.alpha.n != b.alpha.n:
            raise ValueError(f"mismatched n: {a.alpha.n} and {b.alpha.n}")
        phi = multiply(a.alpha, b.alpha)[1]
    prod = t_mul_infinite(a, b) if req.d is None else t_mul_d(a, b, req.d)
    return MulResponse(product=prod.to_json(), phi=phi)


@app.post("/lattice", response_model=LatticeResponse)
def lattice(req: LatticeRequest) -> LatticeResponse:
    _check_lattice_cap(req.n, req.d, req.cap)
    lat = build_lattice(req.n, req.d)
    elements = [m.to_json() if isinstance(m, FCMatrix) else m for m in lat.elements]
    return LatticeResponse(n=req.n, d=req.d, report=property_report(lat), elements=elements,
                           covers=[list(c) for c in lat.covers], dot=to_dot(lat), csv=to_csv(lat))


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    n, d = req.n, req.d
    if req.method is Method.closed:
        value = count_closed(n, d)
    elif req.method is Method.recursion:
        value = count_recursion(n, d)
    elif req.method is Method.gf:
        value = count_gf(n, d)
    elif req.method is Method.generate:
        value = build_lattice(0, d).size if n == 0 else len(enumerate_fc(n, d, cap=req.cap))
    else:
        elements_of(n, d, cap=req.cap)  # raises when the monoid is too large
        value = all_congruences(n, d).size
    return CountResponse(n=n, d=d, method=req.method, count=value)


@app.post("/table", response_model=TableResponse)
def count_table(req: TableRequest) -> TableResponse:
    return TableResponse(nmax=req.nmax, dmax=req.dmax, rows=table(req.nmax, req.dmax),
                         csv=table_csv(req.nmax, req.dmax))


@app.post("/principal", response_model=PrincipalResponse)
def principal(req: PrincipalRequest) -> PrincipalResponse:
    a, b = _element(req.a, req.n), _element(req.b, req.n)
    if req.d is None:
        if isinstance(a, Zero) or isinstance(b, Zero):
            raise ValueError("the infinite monoid has no zero element")
        s = principal_cpair(a, b)
        return PrincipalResponse(setting="infinite", case=principal_case(a, b)[0], congruence=s.to_json(),
                                 label=s.label())
    for x in (a, b):
        if isinstance(x, Pair) and x.i > req.d:
            raise ValueError(f"column {x.i} exceeds d={req.d}")
    m = principal_fc(a, b, req.n, req.d)
    return PrincipalResponse(setting="finite", congruence=m.to_json(), label=m.label())


@app.post("/include", response_model=IncludeResponse)
def include(req: IncludeRequest) -> IncludeResponse:
    left, right = _congruence(req.left), _congruence(req.right)
    if type(left) is not type(right):
        raise ValueError("cannot compare a C-pair with an fC-matrix")
    if left.n != right.n or (isinstance(left, FCMatrix) and left.d != right.d):  # type: ignore[union-attr]
        raise ValueError("congruences of different monoids")
    leq = fcong_leq if isinstance(left, FCMatrix) else cong_leq
    lr, rl = leq(left, right), leq(right, left)  # type: ignore[arg-type]
    relation = {(True, True): "equal", (True, False): "below", (False, True): "above"}.get((lr, rl), "incomparable")
    return IncludeResponse(left_in_right=lr, right_in_left=rl, relation=relation)  # type: ignore[arg-type]


@app.post("/gen", response_model=GenResponse)
def gen(req: GenRequest) -> GenResponse:
    s = _congruence(req.congruence)
    if isinstance(s, FCMatrix):
        pairs = fc_generating_set(s)
        verdict = "verified" if generated_fc(pairs, s.n, s.d) == s else "failed"
        oracle_match = None
        if req.oracle:
            elements_of(s.n, s.d)  # raises when the monoid is too large
            oracle_match = match_to_fc(congruence_closure(s.n, s.d, pairs)) == s
        return GenResponse(setting="finite", pairs=[_pair_json(a, b) for a, b in pairs], size=len(pairs),
                           bound=generation_bound(s.n), verdict=verdict, oracle_match=oracle_match)
    if req.oracle:
        raise ValueError("the oracle only covers the finite monoids")
    omega = generating_set(s)
    return GenResponse(setting="infinite", pairs=[_pair_json(a, b) for a, b in omega], size=len(omega),
                       bound=generation_bound(s.n), verdict=verify_generators(s, omega).value)
