"""
Command layer shared by the CLI and the HTTP routes
Each command validates its request model, runs the computation and returns a Document dict.
"""

import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Type

from pydantic import BaseModel

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core import __version__
from core.cocycle import (
    Block, BlockTorusElem, CoverParams, LeviDetData, commutator_diagonal, commutator_field_torus,
    commutator_levi,
)
from core.errors import InvalidParametersError, MetaHeckeError
from core.hecke import HeckeElement
from core.hilbert import hilbert_symbol, hilbert_symbol_unramified, tame_symbol
from core.hmodules import (
    CharacterPoint, induce, irreducible, one_dim_constituents, proper_submodule, reducibility_point,
)
from core.scalars import parse_scalar, scalar_to_dict
from core.typeparams import (
    TypeParams, closed_form_solution, invariants_n0_d0_s0, l0_from_green, pi_zeta_translations,
    scan_w0, solve_congruence, t0_lattice, twist_stabilizer_order, w0_equals_w0prime,
    w0prime_lattice,
)
from core.weyl import reduced_word
from models.schemas import (
    CommutatorRequest, CongruenceRequest, Document, GreenRequest, HeckeMulRequest, HeckeTermModel,
    HilbertRequest, InduceRequest, LatticeModel, MuNModel, ParamsRequest, ReducibilityRequest,
    ScanRequest, W0CheckRequest,
)

logger = logging.getLogger(__name__)


def cover_from(req) -> CoverParams:
    if req.cover == "kp":
        return CoverParams.kp(req.n, req.c)
    if req.cover == "savin":
        return CoverParams.savin(req.n)
    if req.cover != "general":
        raise InvalidParametersError(f"unknown cover family {req.cover!r}", {"cover": req.cover})
    return CoverParams(req.n, req.c, req.d)


def type_params_from(req: ParamsRequest) -> TypeParams:
    return TypeParams(cover_from(req), req.r0, req.m0, req.l0, req.t, req.f)


def _rational(text: Optional[str]) -> Optional[Fraction]:
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e


def weyl_label(w) -> str:
    a, b, word = reduced_word(w)
    parts = []
    if a:
        parts.append("pi" if a == 1 else f"pi^{a}")
    if b:
        parts.append("zeta" if b == 1 else f"zeta^{b}")
    parts.extend(f"s{i}" for i in word)
    return "*".join(parts) or "id"


def _symbol(value) -> dict:
    return MuNModel(**value.to_dict()).model_dump()


def _lattice(lattice) -> dict:
    return LatticeModel(**lattice.to_dict()).model_dump()


def hecke_terms(x: HeckeElement) -> List[dict]:
    terms = [HeckeTermModel(label=weyl_label(w), weyl=w.to_dict(), coeff=scalar_to_dict(x.coeffs[w]))
             for w in x.support()]
    return [term.model_dump() for term in terms]


# ---- commands ---------------------------------------------------------------------

def cmd_hilbert(req: HilbertRequest, seed: int) -> dict:
    from factory import get_local_field
    F = get_local_field(req.p, req.k, req.n)
    x = F.element(req.x.v, req.x.u)
    if req.unramified_degree:
        E = F.unramified_extension(req.unramified_degree)
        y = E.element(req.y.v, req.y.u)
        symbol = hilbert_symbol_unramified(x, y, req.unramified_degree, F)
        return {"symbol": _symbol(symbol), "field": repr(E)}
    y = F.element(req.y.v, req.y.u)
    return {"symbol": _symbol(hilbert_symbol(x, y, F)),
            "tame_symbol": tame_symbol(x, y, F).dlog(), "field": repr(F)}


def cmd_commutator(req: CommutatorRequest, seed: int) -> dict:
    from factory import get_local_field
    F = get_local_field(req.p, req.k, req.n)
    P = CoverParams(req.n, req.c, req.d)

    def blocks(models) -> List[Block]:
        return [Block(b.degree, b.unramified,
                      F.extension(b.degree, b.unramified).element(b.v, b.u)) for b in models]

    if req.kind == "diagonal":
        xs = [F.element(b.v, b.u) for b in req.u]
        ys = [F.element(b.v, b.u) for b in req.w]
        value = commutator_diagonal(xs, ys, P, F)
    elif req.kind == "field_torus":
        value = commutator_field_torus(BlockTorusElem(F, blocks(req.u)), BlockTorusElem(F, blocks(req.w)), P)
    elif req.kind == "levi":
        value = commutator_levi(BlockTorusElem(F, blocks(req.u)), LeviDetData(F, blocks(req.w)), P)
    else:
        raise InvalidParametersError(f"unknown commutator kind {req.kind!r}")
    return {"commutator": _symbol(value), "cover": P.to_dict()}


def cmd_congruence(req: CongruenceRequest, seed: int) -> dict:
    lattice = solve_congruence(req.n, req.c, req.d, req.l, req.r, req.method)
    result = {"lattice": _lattice(lattice), "method": req.method}
    if req.closed_form:
        closed = closed_form_solution(req.n, req.c, req.d, req.l, req.r, req.closed_form)
        result["closed_form"] = _lattice(closed)
        result["agrees"] = closed == lattice
    return result


def cmd_params(req: ParamsRequest, seed: int) -> dict:
    P = type_params_from(req)
    n0, d0, s0 = invariants_n0_d0_s0(P)
    return {"n0": n0, "d0": d0, "s0": s0, "s_star": str(Fraction(1, 2 * n0)),
            **pi_zeta_translations(P), "params": P.to_dict()}


def cmd_w0check(req: W0CheckRequest, seed: int) -> dict:
    P = type_params_from(req)
    equal, index = w0_equals_w0prime(P, req.method)
    return {"equal": equal, "index": index, "t0": _lattice(t0_lattice(P, req.method)),
            "w0prime": _lattice(w0prime_lattice(P)), "params": P.to_dict()}


def cmd_green(req: GreenRequest, seed: int) -> dict:
    o, l = l0_from_green(req.q_l, req.m0, req.n, req.xi)
    result = {"o": o, "l": l}
    if (req.q_l - 1) % req.n == 0:
        result["twist_stabilizer"] = twist_stabilizer_order(req.q_l, req.m0, req.n, req.xi)
    return result


def cmd_hecke_mul(req: HeckeMulRequest, seed: int) -> dict:
    from factory import get_hecke_algebra
    flavor = req.flavor or ("affine" if req.s == 1 else "twisted")
    H = get_hecke_algebra(req.t, req.s, flavor)
    product = H.multiply(H.parse(req.lhs), H.parse(req.rhs), req.prefer)
    return {"algebra": repr(H), "terms": hecke_terms(product)}


def cmd_induce(req: InduceRequest, seed: int) -> dict:
    from factory import SPECIALIZE_V, get_hecke_algebra
    flavor = "affine" if req.zval is None else "twisted"
    H = get_hecke_algebra(req.t, req.s, flavor)
    point = CharacterPoint(tuple(parse_scalar(x) for x in req.x),
                           parse_scalar(req.zval) if req.zval is not None else None)
    v = _rational(req.specialize)
    module = induce(point, H, v, req.box_cap)
    checked_at = v if v is not None else SPECIALIZE_V
    verdict = irreducible(module, checked_at, req.method)
    result = module.to_dict()
    result["irreducible"] = verdict
    result["checked_at_v"] = str(checked_at)
    if not verdict:
        sub = proper_submodule(module, checked_at, seed=seed)
        result["submodule_dimension"] = len(sub) if sub else None
        result["constituents"] = [c.to_dict() for c in one_dim_constituents(module, checked_at)]
    return result


def cmd_reducibility(req: ReducibilityRequest, seed: int) -> dict:
    P = type_params_from(req)
    report = reducibility_point(P, _rational(req.v), parse_scalar(req.unit))
    return {**report.to_dict(), "params": P.to_dict()}


def cmd_scan_w0(req: ScanRequest, seed: int) -> dict:
    from factory import WORKERS
    rows = scan_w0(req.n_max, req.t_max, req.r0_max, req.workers or WORKERS)
    strict = [row.to_dict() for row in rows if row.index > 1]
    return {
        "points": len(rows),
        "kp_all_index_one": all(row.index == 1 for row in rows if row.kp),
        "savin_all_index_one": all(row.index == 1 for row in rows if row.savin),
        "strict_inclusions": strict,
        "rows": [row.to_dict() for row in rows],
    }


COMMANDS: Dict[str, Tuple[Type[BaseModel], Callable[[Any, int], dict]]] = {
    "hilbert": (HilbertRequest, cmd_hilbert),
    "commutator": (CommutatorRequest, cmd_commutator),
    "congruence": (CongruenceRequest, cmd_congruence),
    "params": (ParamsRequest, cmd_params),
    "w0check": (W0CheckRequest, cmd_w0check),
    "green-l0": (GreenRequest, cmd_green),
    "hecke-mul": (HeckeMulRequest, cmd_hecke_mul),
    "induce": (InduceRequest, cmd_induce),
    "reducibility": (ReducibilityRequest, cmd_reducibility),
    "scan-w0": (ScanRequest, cmd_scan_w0),
}


def request_schemas() -> Dict[str, dict]:
    return {name: model.model_json_schema() for name, (model, _) in COMMANDS.items()}


def _dump(doc: Document) -> dict:
    return {key: value for key, value in doc.model_dump().items() if value is not None}


def execute(command: str, request: BaseModel, seed: Optional[int] = None) -> dict:
    """
    Run a validated request. Domain errors propagate to the caller;
    the returned document echoes the input and records version and seed.
    """
    from factory import SEED
    seed = SEED if seed is None else seed
    _, handler = COMMANDS[command]
    logger.debug("running %s with %s (seed %d)", command, request, seed)
    result = handler(request, seed)
    doc = Document(version=__version__, command=command, seed=seed,
                   input=request.model_dump(), result=result)
    return _dump(doc)


def error_document(command: str, payload: dict, error: MetaHeckeError, seed: Optional[int] = None) -> dict:
    from factory import SEED
    doc = Document(version=__version__, command=command, seed=SEED if seed is None else seed,
                   input=payload, error=error.to_dict())
    return _dump(doc)
