"""
Pydantic models for CLI and API request/response documents
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


# ---- building blocks ----------------------------------------------------------

class LocalFieldElemModel(BaseModel):
    """varpi^v times the unit g^u of the residue field"""
    v: int = 0
    u: int = 0


class BlockModel(BaseModel):
    degree: int = 1
    unramified: bool = True
    v: int = 0
    u: int = 0


class MuNModel(BaseModel):
    n: int
    e: int


class WeylElemModel(BaseModel):
    """Translation num/s and a 0-based permutation (images of 0..t-1)"""
    s: int = 1
    num: List[int]
    perm: List[int]


class ScalarModel(BaseModel):
    """Ascending coefficients in v of numerator and denominator"""
    num: List[int]
    den: List[int]
    text: str


class HeckeTermModel(BaseModel):
    label: str
    weyl: WeylElemModel
    coeff: ScalarModel


class LatticeModel(BaseModel):
    t: int
    basis: List[List[int]]
    determinant: int


class ErrorModel(BaseModel):
    code: str
    message: str
    details: Dict[str, Any] = {}


# ---- requests -----------------------------------------------------------------

class CoverFields(BaseModel):
    cover: str = Field("general", description="kp, savin or general")
    n: int
    c: int = 0
    d: int = 1


class HilbertRequest(BaseModel):
    p: int
    k: int = 1
    n: int
    x: LocalFieldElemModel
    y: LocalFieldElemModel
    unramified_degree: Optional[int] = None


class CommutatorRequest(BaseModel):
    p: int
    k: int = 1
    n: int
    c: int = 0
    d: int = 1
    kind: str = Field("field_torus", description="field_torus, levi or diagonal")
    u: List[BlockModel]
    w: List[BlockModel]


class CongruenceRequest(BaseModel):
    n: int
    c: int = 0
    d: int = 1
    l: List[int]
    r: List[int]
    method: str = "kernel"
    closed_form: Optional[str] = None


class ParamsRequest(CoverFields):
    r0: int
    m0: Optional[int] = None
    l0: int = 1
    t: int = 2
    f: int = 1


class W0CheckRequest(ParamsRequest):
    method: str = "kernel"


class GreenRequest(BaseModel):
    q_l: int
    m0: int
    n: int
    xi: int


class HeckeMulRequest(BaseModel):
    t: int
    s: int = 1
    flavor: Optional[str] = None
    lhs: str
    rhs: str
    prefer: str = "smallest"


class InduceRequest(BaseModel):
    t: int
    s: int = 1
    x: List[str]
    zval: Optional[str] = None
    specialize: Optional[str] = None
    method: str = "auto"
    box_cap: Optional[int] = None


class ReducibilityRequest(ParamsRequest):
    v: Optional[str] = None
    unit: str = "1"


class ScanRequest(BaseModel):
    n_max: int
    t_max: int = 2
    r0_max: int = 2
    workers: Optional[int] = None


# ---- envelope -----------------------------------------------------------------

class RunConfig(BaseModel):
    """Global CLI options for one run"""
    subcommand: str
    seed: Optional[int] = None
    pretty: bool = False
    output: Optional[str] = None
    n_max: Optional[int] = Field(None, ge=1)
    t_max: Optional[int] = Field(None, ge=1)
    r0_max: Optional[int] = Field(None, ge=1)


class Document(BaseModel):
    version: str
    command: str
    seed: int
    input: Dict[str, Any]
    result: Optional[Dict[str, Any]] = None
    error: Optional[ErrorModel] = None


class HealthResponse(BaseModel):
    status: str
    message: str
    version: str
