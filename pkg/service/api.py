"""
PPA Reductions Toolkit - REST API
FastAPI front door over the verifiers, the brute-force necklace oracle and the
necklace-to-sandwich reduction.
"""

import os
import sys
from typing import Optional

# Setup path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
os.environ.setdefault('BASE_DIR', os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from config import get_logger
from numerics.errors import ReductionToolkitError, SearchBoundError
from numerics.serialization import (
    CHInstanceModel,
    CutSetModel,
    GridPairModel,
    HamSandwichModel,
    NecklaceModel,
    NecklaceSplitModel,
    ReductionParamsModel,
    Report,
    Tucker2DModel,
)
from oracles.brute_force import brute_force_necklace
from oracles.verifiers import eval_ch, verify_necklace, verify_tucker2d
from sandwich.moment import necklace_to_sandwich
from sandwich.thieves import solve_power_of_two

logger = get_logger('Service')

# ============================================
# APP SETUP
# ============================================

app = FastAPI(
    title="PPA Reductions Toolkit API",
    description="Verification and reduction endpoints for the PPA reductions toolkit",
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc"
)

# CORS - allow all origins for development
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _report(command: str, positive: bool, result: dict) -> Report:
    return Report(command=command, status='ok' if positive else 'no',
                  exit_code=0 if positive else 1, result=result)


def _fail(e: ReductionToolkitError) -> HTTPException:
    """Malformed input is 422; everything else the toolkit refuses is 400."""
    status = 422 if isinstance(e, ValueError) else 400
    logger.warning(f"{type(e).__name__}: {e}")
    return HTTPException(status_code=status, detail=str(e))


# ============================================
# HEALTH
# ============================================

@app.get("/health", tags=["Health"])
async def health_check():
    return {"status": "ok"}


# ============================================
# VERIFY
# ============================================

class CHVerifyRequest(BaseModel):
    instance: CHInstanceModel
    cuts: CutSetModel


class NecklaceVerifyRequest(BaseModel):
    instance: NecklaceModel
    split: NecklaceSplitModel


class TuckerVerifyRequest(BaseModel):
    grid: Tucker2DModel
    pair: GridPairModel


@app.post("/verify/ch", tags=["Verify"], response_model=Report)
def verify_ch_route(request: CHVerifyRequest):
    try:
        report = eval_ch(request.instance.to_domain(), request.cuts.to_domain())
    except ReductionToolkitError as e:
        raise _fail(e)
    return _report('verify ch', report.is_epsilon_solution, report.to_dict())


@app.post("/verify/necklace", tags=["Verify"], response_model=Report)
def verify_necklace_route(request: NecklaceVerifyRequest):
    try:
        ok = verify_necklace(request.instance.to_domain(), request.split.to_domain())
    except ReductionToolkitError as e:
        raise _fail(e)
    return _report('verify necklace', ok, {'verified': ok})


@app.post("/verify/tucker2d", tags=["Verify"], response_model=Report)
def verify_tucker2d_route(request: TuckerVerifyRequest):
    try:
        p1, p2 = request.pair.to_domain()
        ok = verify_tucker2d(request.grid.to_domain(), p1, p2)
    except ReductionToolkitError as e:
        raise _fail(e)
    return _report('verify tucker2d', ok, {'verified': ok})


# ============================================
# SOLVE AND REDUCE
# ============================================

@app.post("/solve/necklace", tags=["Solve"], response_model=Report)
def solve_necklace_route(request: NecklaceModel, jobs: Optional[int] = None):
    try:
        inst = request.to_domain()
        split = brute_force_necklace(inst, jobs=jobs) if inst.k == 2 else solve_power_of_two(inst, jobs=jobs)
    except SearchBoundError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except ReductionToolkitError as e:
        raise _fail(e)
    if split is None:
        return _report('solve necklace', False, {'split': None})
    return _report('solve necklace', True, {'split': split.to_dict(), 'verified': verify_necklace(inst, split)})


@app.post("/reduce/ns-to-dhs", tags=["Reduce"], response_model=Report)
def reduce_ns_to_dhs_route(request: NecklaceModel):
    try:
        dhs, embedding = necklace_to_sandwich(request.to_domain())
    except ReductionToolkitError as e:
        raise _fail(e)
    return _report('reduce ns-to-dhs', True, {
        'instance': HamSandwichModel.from_domain(dhs).model_dump(),
        'embedding': embedding.to_dict(),
    })


@app.post("/params/check", tags=["Params"], response_model=Report)
def params_check_route(request: ReductionParamsModel):
    try:
        params = request.to_domain()
    except ReductionToolkitError as e:
        raise _fail(e)
    return _report('params-check', True, params.to_dict())
