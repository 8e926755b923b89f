"""
FastAPI routes for metahecke
Every route returns the same Document as the matching CLI subcommand.
"""

import logging
import sys
from pathlib import Path

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from core import __version__
from core.commands import execute
from core.errors import MetaHeckeError
from models.schemas import (
    CommutatorRequest, CongruenceRequest, GreenRequest, HealthResponse, HeckeMulRequest,
    HilbertRequest, InduceRequest, ParamsRequest, ReducibilityRequest, ScanRequest, W0CheckRequest,
)

logger = logging.getLogger(__name__)

router = APIRouter()


def _run(command: str, request: BaseModel) -> dict:
    try:
        return execute(command, request)
    except MetaHeckeError as e:
        raise HTTPException(status_code=400, detail=e.to_dict())
    except ValueError as e:
        raise HTTPException(status_code=400, detail={"code": "malformed_input", "message": str(e),
                                                     "details": {}})
    except Exception as e:
        logger.exception("%s failed", command)
        raise HTTPException(status_code=500, detail=f"{command} failed: {str(e)}")


@router.get("/health", response_model=HealthResponse)
async def health_check():
    """Health check endpoint"""
    return HealthResponse(status="healthy", message="metahecke is running", version=__version__)


@router.post("/hilbert")
def hilbert(request: HilbertRequest):
    return _run("hilbert", request)


@router.post("/commutator")
def commutator(request: CommutatorRequest):
    return _run("commutator", request)


@router.post("/congruence")
def congruence(request: CongruenceRequest):
    return _run("congruence", request)


@router.post("/params")
def params(request: ParamsRequest):
    return _run("params", request)


@router.post("/w0check")
def w0check(request: W0CheckRequest):
    return _run("w0check", request)


@router.post("/green")
def green(request: GreenRequest):
    return _run("green-l0", request)


@router.post("/hecke/multiply")
def hecke_multiply(request: HeckeMulRequest):
    return _run("hecke-mul", request)


@router.post("/induce")
def induce(request: InduceRequest):
    """Induced module, irreducibility verdict and one-dimensional constituents"""
    return _run("induce", request)


@router.post("/reducibility")
def reducibility(request: ReducibilityRequest):
    return _run("reducibility", request)


@router.post("/scan-w0")
def scan(request: ScanRequest):
    """Grid scan; bounded by METAHECKE_SCAN_CAP"""
    return _run("scan-w0", request)
