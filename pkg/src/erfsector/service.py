"""FastAPI service wrapping the core package.

Every endpoint is a stateless request/response wrapper over pure library
functions, so the service scales to any number of concurrent clients and
two identical requests always produce identical answers. Run with

    uvicorn erfsector.service:app

Domain violations and unreachable accuracy targets map to HTTP 422 with
the library's message as detail.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .cerf import EvalConfig, erf, erfc
from .contour import fold_into_T, integrate_along_gamma, make_gamma
from .errors import AccuracyError, DomainError
from .quadrature import QuadConfig
from .region import (
    VERIFY_TOLERANCE,
    GridMode,
    PointVerdict,
    RandomMode,
    SamplePlan,
    Sector,
    SectorSpec,
    iter_verdicts,
    strand_sweep,
    summarize,
    verify_point,
)

app = FastAPI(
    title="erfsector",
    version=__version__,
    description="Complex erf/erfc evaluation, contour decomposition and "
    "sector verification of Re(erfc(z)) >= 1 on |Arg z| >= 3pi/4.",
)


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError):
    return JSONResponse(status_code=422, content={"detail": f"domain error: {exc}"})


@app.exception_handler(AccuracyError)
async def _accuracy_error(request: Request, exc: AccuracyError):
    return JSONResponse(status_code=422, content={"detail": f"accuracy error: {exc}"})


class ComplexOut(BaseModel):
    re: float
    im: float


class EvalRequest(BaseModel):
    re: float
    im: float = 0.0
    fn: Literal["erf", "erfc"] = "erf"
    target_abs_tol: float | None = Field(default=None, gt=0)


class EvalResponse(BaseModel):
    value_re: float
    value_im: float
    abs_err_estimate: float
    method: str


class VerifyRequest(BaseModel):
    re: float
    im: float = 0.0
    tolerance: float = Field(default=VERIFY_TOLERANCE, ge=0)


class VerdictModel(BaseModel):
    z: ComplexOut
    re_erfc: float
    margin: float
    strand_bound_value: float | None
    strand_ok: bool | None
    method_note: str
    easy_part: float | None
    real_part_leg2: float | None


class VerifyResponse(VerdictModel):
    ok: bool


class ScanRequest(BaseModel):
    sector: Literal["S", "T"] = "S"
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    nx: int | None = Field(default=None, ge=2)
    ny: int | None = Field(default=None, ge=2)
    count: int | None = Field(default=None, ge=1)
    seed: int = 0
    tolerance: float = Field(default=VERIFY_TOLERANCE, ge=0)
    include_rows: bool = False


class ScanResponse(BaseModel):
    points_tested: int
    min_margin: float | None
    argmin: ComplexOut | None
    violations: list[VerdictModel]
    tolerance: float
    empty_intersection: bool
    rows: list[VerdictModel] | None = None


class ContourRequest(BaseModel):
    re: float
    im: float = 0.0


class ContourResponse(BaseModel):
    conjugated: bool
    a: float
    easy_part: float
    real_part_leg2: float
    imag_part_leg2: float
    total: ComplexOut
    erf_direct: ComplexOut
    discrepancy: float


class StrandRequest(BaseModel):
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    nx: int = Field(ge=2)
    ny: int = Field(ge=2)


class StrandRow(BaseModel):
    x: float
    y: float
    modulus: float
    bound: float
    slack: float


class StrandResponse(BaseModel):
    points: int
    min_slack: float | None
    all_positive: bool
    rows: list[StrandRow]


def _verdict_model(v: PointVerdict) -> VerdictModel:
    return VerdictModel(
        z=ComplexOut(re=v.z.real, im=v.z.imag),
        re_erfc=v.re_erfc,
        margin=v.margin,
        strand_bound_value=v.strand_bound_value,
        strand_ok=v.strand_ok,
        method_note=v.method_note.value,
        easy_part=v.easy_part,
        real_part_leg2=v.real_part_leg2,
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/eval", response_model=EvalResponse)
def eval_endpoint(req: EvalRequest) -> EvalResponse:
    cfg = EvalConfig() if req.target_abs_tol is None else EvalConfig(target_abs_tol=req.target_abs_tol)
    fn = erf if req.fn == "erf" else erfc
    result = fn(complex(req.re, req.im), cfg)
    return EvalResponse(
        value_re=result.value.real,
        value_im=result.value.imag,
        abs_err_estimate=result.abs_err_estimate,
        method=result.method.value,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    verdict = verify_point(complex(req.re, req.im))
    base = _verdict_model(verdict)
    return VerifyResponse(**base.model_dump(), ok=verdict.margin >= -req.tolerance)


@app.post("/scan", response_model=ScanResponse)
def scan_endpoint(req: ScanRequest) -> ScanResponse:
    grid_given = req.nx is not None or req.ny is not None
    if grid_given == (req.count is not None):
        raise DomainError("choose exactly one of nx/ny or count/seed")
    if grid_given:
        if req.nx is None or req.ny is None:
            raise DomainError("grid mode needs both nx and ny")
        mode: GridMode | RandomMode = GridMode(req.nx, req.ny)
    else:
        mode = RandomMode(req.count, req.seed)
    plan = SamplePlan(
        box=(req.xmin, req.xmax, req.ymin, req.ymax),
        mode=mode,
        sector=SectorSpec(Sector(req.sector)),
    )
    verdicts = list(iter_verdicts(plan, EvalConfig(), QuadConfig()))
    report = summarize(verdicts, req.tolerance)
    return ScanResponse(
        points_tested=report.points_tested,
        min_margin=None if report.empty_intersection else report.min_margin,
        argmin=None if report.argmin is None else ComplexOut(re=report.argmin.real, im=report.argmin.imag),
        violations=[_verdict_model(v) for v in report.violations],
        tolerance=report.tolerance,
        empty_intersection=report.empty_intersection,
        rows=[_verdict_model(v) for v in verdicts] if req.include_rows else None,
    )


@app.post("/contour", response_model=ContourResponse)
def contour_endpoint(req: ContourRequest) -> ContourResponse:
    fold = fold_into_T(complex(req.re, req.im))
    path = make_gamma(fold.point.real, fold.point.imag)
    dec = integrate_along_gamma(path)
    direct = erf(fold.point)
    return ContourResponse(
        conjugated=fold.conjugated,
        a=path.a,
        easy_part=dec.easy_part,
        real_part_leg2=dec.real_part_leg2,
        imag_part_leg2=dec.imag_part_leg2,
        total=ComplexOut(re=dec.total.real, im=dec.total.imag),
        erf_direct=ComplexOut(re=direct.value.real, im=direct.value.imag),
        discrepancy=abs(dec.total - direct.value),
    )


@app.post("/strand", response_model=StrandResponse)
def strand_endpoint(req: StrandRequest) -> StrandResponse:
    rows = [
        StrandRow(x=s.x, y=s.y, modulus=s.modulus, bound=s.bound, slack=s.slack)
        for s in strand_sweep((req.xmin, req.xmax, req.ymin, req.ymax), req.nx, req.ny)
    ]
    min_slack = min((r.slack for r in rows), default=None)
    return StrandResponse(
        points=len(rows),
        min_slack=min_slack,
        all_positive=all(r.slack > 0.0 for r in rows),
        rows=rows,
    )
