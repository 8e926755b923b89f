"""
Metaplectic cocycle and commutator formulas on tori and block-diagonal elements
All values are exponents in mu_n, evaluated through Hilbert symbols.
"""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import (
    BlockMismatchError, InvalidParametersError, ModulusMismatchError, NonUnitDeterminantError,
)
from core.hilbert import LocalField, LocalFieldElem, MuN, hilbert_symbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverParams:
    """Degree n cover of GL_r with cocycle sigma_det^c * sigma_KP^d"""

    n: int
    c: int = 0
    d: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParametersError("cover degree must be positive", {"n": self.n})

    @classmethod
    def kp(cls, n: int, c: int = 0) -> "CoverParams":
        return cls(n, c, 1)

    @classmethod
    def savin(cls, n: int) -> "CoverParams":
        return cls(n, -1, 2)

    @property
    def kp_flag(self) -> bool:
        return (self.d - 1) % self.n == 0

    @property
    def savin_flag(self) -> bool:
        return (self.c + 1) % self.n == 0 and (self.d - 2) % self.n == 0

    @property
    def twist(self) -> int:
        """2c + d"""
        return 2 * self.c + self.d

    def to_dict(self) -> dict:
        return {"n": self.n, "c": self.c, "d": self.d, "kp": self.kp_flag, "savin": self.savin_flag}


@dataclass(frozen=True)
class Block:
    degree: int
    unramified: bool
    element: LocalFieldElem

    def __post_init__(self):
        if self.degree < 1:
            raise InvalidParametersError("block degree must be positive", {"degree": self.degree})

    @property
    def shape(self) -> Tuple[int, bool]:
        return (self.degree, self.unramified)


class _Blocks:
    def __init__(self, base: LocalField, blocks: Sequence[Block]):
        self.base = base
        self.blocks: Tuple[Block, ...] = tuple(blocks)
        for i, block in enumerate(self.blocks):
            field = self.field(i)
            if not field.contains(block.element):
                raise BlockMismatchError(f"block {i} element does not lie in its extension",
                                         {"block": i, "degree": block.degree})

    def __len__(self) -> int:
        return len(self.blocks)

    def field(self, i: int) -> LocalField:
        block = self.blocks[i]
        return self.base.extension(block.degree, block.unramified)

    @property
    def shape(self) -> Tuple[Tuple[int, bool], ...]:
        return tuple(block.shape for block in self.blocks)

    def det_f(self) -> LocalFieldElem:
        """Product of the block norms down to F"""
        det = LocalFieldElem(0, self.base.residue.one)
        for i, block in enumerate(self.blocks):
            det = det * self.field(i).norm(block.element)
        return det


class BlockTorusElem(_Blocks):
    """u = (u_1, ..., u_k) in the product of the E_i^x"""


class LeviDetData(_Blocks):
    """Block determinants det_{E_i}(v_i) of v in the product of the GL_{r_i'}(E_i)"""


def _match(u: _Blocks, v: _Blocks) -> None:
    if u.base is not v.base or u.shape != v.shape:
        raise BlockMismatchError("block structures differ",
                                 {"left": [list(s) for s in u.shape], "right": [list(s) for s in v.shape]})


def _check_modulus(K: LocalField, P: CoverParams) -> None:
    if K.n != P.n:
        raise ModulusMismatchError(f"field symbol degree {K.n} differs from cover degree {P.n}")


def sigma_det(det_g1: LocalFieldElem, det_g2: LocalFieldElem, P: CoverParams, K: LocalField) -> MuN:
    _check_modulus(K, P)
    return P.c * hilbert_symbol(det_g1, det_g2, K)


def commutator_center(lam: LocalFieldElem, det_g: LocalFieldElem, r: int, P: CoverParams,
                      K: LocalField) -> MuN:
    """[lambda I_r, g] = (lambda, det g)^((2c+d)r - d)"""
    _check_modulus(K, P)
    return (P.twist * r - P.d) * hilbert_symbol(lam, det_g, K)


def commutator_field_torus(u: BlockTorusElem, v: BlockTorusElem, P: CoverParams) -> MuN:
    _match(u, v)
    _check_modulus(u.base, P)
    total = MuN(P.n)
    for i in range(len(u)):
        total += -P.d * hilbert_symbol(u.blocks[i].element, v.blocks[i].element, u.field(i))
    return total + P.twist * hilbert_symbol(u.det_f(), v.det_f(), u.base)


def commutator_levi(u: BlockTorusElem, v: LeviDetData, P: CoverParams) -> MuN:
    """Sum over blocks of (det_F(u)^(2c+d) u_i^(-d), det_{E_i} v_i)_{n,E_i}"""
    _match(u, v)
    _check_modulus(u.base, P)
    det_u = u.det_f()
    total = MuN(P.n)
    for i in range(len(u)):
        E = u.field(i)
        left = E.embed(det_u) ** P.twist * u.blocks[i].element ** (-P.d)
        total += hilbert_symbol(left, v.blocks[i].element, E)
    return total


def commutator_levi_expanded(u: BlockTorusElem, v: LeviDetData, P: CoverParams) -> MuN:
    """The same commutator written as -d sum (u_i, det v_i) + (2c+d)(det_F u, det_F v)"""
    _match(u, v)
    _check_modulus(u.base, P)
    total = MuN(P.n)
    for i in range(len(u)):
        total += -P.d * hilbert_symbol(u.blocks[i].element, v.blocks[i].element, u.field(i))
    return total + P.twist * hilbert_symbol(u.det_f(), v.det_f(), u.base)


def block_correction(dets1: Sequence[LocalFieldElem], dets2: Sequence[LocalFieldElem],
                     P: CoverParams, K: LocalField) -> MuN:
    """Cross terms of sigma on block-diagonal matrices: exponent c+d for i<j, c for j<i"""
    if len(dets1) != len(dets2):
        raise BlockMismatchError("determinant lists differ in length")
    _check_modulus(K, P)
    total = MuN(P.n)
    for i, a in enumerate(dets1):
        for j, b in enumerate(dets2):
            if i < j:
                total += (P.c + P.d) * hilbert_symbol(a, b, K)
            elif j < i:
                total += P.c * hilbert_symbol(a, b, K)
    return total


def sigma_block_diagonal(per_block: Sequence[MuN], dets1: Sequence[LocalFieldElem],
                         dets2: Sequence[LocalFieldElem], P: CoverParams, K: LocalField) -> MuN:
    """sigma(diag(g_i), diag(g_i')) from the per-block values sigma(g_i, g_i')"""
    if len(per_block) != len(dets1):
        raise BlockMismatchError("one sigma value per block is required")
    total = MuN(P.n)
    for value in per_block:
        total += value
    return total + block_correction(dets1, dets2, P, K)


def commutator_diagonal(xs: Sequence[LocalFieldElem], ys: Sequence[LocalFieldElem],
                        P: CoverParams, K: LocalField) -> MuN:
    """Commutator of two diagonal tori over F, expanded blockwise with [x_i, y_i] = 2c (x_i, y_i)"""
    if len(xs) != len(ys):
        raise BlockMismatchError("tori of different rank")
    _check_modulus(K, P)
    total = MuN(P.n)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            weight = 2 * P.c if i == j else P.twist
            total += weight * hilbert_symbol(x, y, K)
    return total


def chi_h_exponents(s: Sequence[int], r0: int, P: CoverParams) -> List[int]:
    """Per-block exponents (sum_j s_j r0)(2c+d) - s_i d"""
    gamma = sum(s) * r0
    return [(gamma * P.twist - s_i * P.d) % P.n for s_i in s]


def chi_h(s: Sequence[int], g_dets: Sequence[LocalFieldElem], r0: int, P: CoverParams,
          E: LocalField) -> MuN:
    """chi_h(g) = sum_i exponent_i * (varpi_E, det_E g_i)_{n,E}"""
    if len(s) != len(g_dets):
        raise BlockMismatchError("one determinant per block is required",
                                 {"t": len(s), "dets": len(g_dets)})
    _check_modulus(E, P)
    total = MuN(P.n)
    for exponent, det in zip(chi_h_exponents(s, r0, P), g_dets):
        if not det.is_unit:
            raise NonUnitDeterminantError("chi_h is defined on unit determinants",
                                          {"valuation": det.valuation})
        total += exponent * hilbert_symbol(E.uniformizer, det, E)
    return total
