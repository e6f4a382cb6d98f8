from fastapi import APIRouter
from fastapi.concurrency import run_in_threadpool
from fastapi.responses import ORJSONResponse
from semiquant.backend.engine.hybridfield import FieldParams
from semiquant.backend.schemas.api_schemas import (
    BracketRequest,
    FieldRequest,
    NoGoRequest,
    PlaneWaveRequest,
    SimulateRequest,
)
from semiquant.backend.schemas.reports import ReportEnvelope
from semiquant.backend.services.reports.bracket_service import evaluate_bracket
from semiquant.backend.services.reports.envelope import build_envelope
from semiquant.backend.services.reports.field_service import (
    default_sim_config,
    positivity_report,
    simulate_report,
    spectrum_report,
)
from semiquant.backend.services.reports.nogo_service import run_nogo
from semiquant.backend.services.reports.planewave_service import planewave_report

router = APIRouter(tags=["verify"])


def _field_params(request: FieldRequest) -> FieldParams:
    return FieldParams(**request.model_dump(include={"m1sq", "m2sq", "g", "hbar1", "hbar2"}))


@router.post(
    "/bracket",
    response_model=ReportEnvelope,
    response_class=ORJSONResponse,
    summary="Evaluate a dynamical bracket",
)
async def bracket_route(request: BracketRequest):
    payload = evaluate_bracket(
        request.a,
        request.b,
        kind=request.kind,
        jacobi=request.jacobi,
        leibniz=request.leibniz,
        dims=(request.n_q, request.n_c),
    )
    return build_envelope("bracket", request.model_dump(), payload)


@router.post(
    "/nogo",
    response_model=ReportEnvelope,
    response_class=ORJSONResponse,
    summary="Run the inductive no-go verification",
    description="CPU bound; step 4 takes minutes.",
)
async def nogo_route(request: NoGoRequest):
    payload = await run_in_threadpool(run_nogo, request.steps)
    return build_envelope("nogo", request.model_dump(), payload)


@router.post("/field/spectrum", response_model=ReportEnvelope, response_class=ORJSONResponse)
async def field_spectrum_route(request: FieldRequest):
    return build_envelope("field spectrum", request.model_dump(), spectrum_report(_field_params(request)))


@router.post("/field/positivity", response_model=ReportEnvelope, response_class=ORJSONResponse)
async def field_positivity_route(request: FieldRequest):
    return build_envelope("field positivity", request.model_dump(), positivity_report(_field_params(request)))


@router.post("/field/simulate", response_model=ReportEnvelope, response_class=ORJSONResponse)
async def field_simulate_route(request: SimulateRequest):
    params = _field_params(request)
    cfg = default_sim_config(
        k_grid=request.k_grid,
        dtau=request.dtau,
        n_steps=request.n_steps,
        n_burnin=request.n_burnin,
        seed=request.seed,
    )
    payload = await run_in_threadpool(simulate_report, params, cfg, request.bias)
    return build_envelope("field simulate", {**request.model_dump(), **cfg.model_dump()}, payload)


@router.post("/planewave", response_model=ReportEnvelope, response_class=ORJSONResponse)
async def planewave_route(request: PlaneWaveRequest):
    payload = await run_in_threadpool(planewave_report, request.h_grid, request.n_samples, request.seed)
    return build_envelope("planewave-check", request.model_dump(), payload)
