"""
Arithmetic of simple-type parameters
Congruence lattices, the invariants n0, d0, s0, l0 from Green data, and W0 against W0'
"""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import gcd
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.cocycle import CoverParams
from core.errors import (
    BoundExceededError, DivisibilityViolationError, FlavorMismatchError, InvalidParametersError,
    NotRegularError, NotSublatticeError,
)
from core.lattice import IntegerLattice, diagonal_lattice
from core.weyl import TwistedAffineWeylElem, pi_element, translation, zeta_element

logger = logging.getLogger(__name__)

ENUMERATION_MAX_T = 4
ENUMERATION_MAX_N = 24


@dataclass(frozen=True)
class TypeParams:
    """Cover (n, c, d) with t blocks of F-dimension r0, E-dimension m0 and twist invariant l0"""

    cover: CoverParams
    r0: int
    m0: Optional[int]
    l0: int
    t: int
    f: int = 1

    def __post_init__(self):
        n = self.cover.n
        if min(self.r0, self.l0, self.t, self.f) < 1 or (self.m0 is not None and self.m0 < 1):
            raise InvalidParametersError("type parameters must be positive", self.to_dict())
        if n % self.l0:
            raise InvalidParametersError("l0 must divide n", self.to_dict())
        # without m0 only the arithmetic invariants are meaningful
        if self.m0 is not None:
            if self.m0 % self.l0:
                raise InvalidParametersError("l0 must divide m0", self.to_dict())
            if self.r0 % self.m0:
                raise InvalidParametersError("m0 must divide r0", self.to_dict())

    @property
    def n(self) -> int:
        return self.cover.n

    @property
    def r(self) -> int:
        return self.r0 * self.t

    def q0(self, q: int) -> int:
        """Hecke parameter q^(m0 f) for residue field size q"""
        if self.m0 is None:
            raise InvalidParametersError("q0 needs m0", self.to_dict())
        return q ** (self.m0 * self.f)

    def l_profile(self) -> List[int]:
        return [self.l0] * self.t

    def r_profile(self) -> List[int]:
        return [self.r0] * self.t

    def hecke_algebra(self):
        """The abstract model H~(t, s0, q0) of the Hecke algebra of the type"""
        from factory import get_hecke_algebra
        _, _, s0 = invariants_n0_d0_s0(self)
        return get_hecke_algebra(self.t, s0, "twisted")

    def to_dict(self) -> dict:
        return {"n": self.cover.n, "c": self.cover.c, "d": self.cover.d, "r0": self.r0,
                "m0": self.m0, "l0": self.l0, "t": self.t, "f": self.f}


@dataclass
class CongruenceLattice:
    """Solution lattice of the intertwining congruences, in HNF"""

    lattice: IntegerLattice

    @property
    def t(self) -> int:
        return self.lattice.dim

    @property
    def basis(self) -> List[List[int]]:
        return self.lattice.hnf()

    def __contains__(self, vec: Sequence[int]) -> bool:
        return vec in self.lattice

    def __eq__(self, other) -> bool:
        if not isinstance(other, CongruenceLattice):
            return NotImplemented
        return self.lattice == other.lattice

    def determinant(self) -> int:
        return self.lattice.determinant()

    def to_dict(self) -> dict:
        return {"t": self.t, "basis": self.basis, "determinant": self.determinant()}


def _check_profiles(n: int, l: Sequence[int], r: Sequence[int]) -> None:
    if len(l) != len(r) or not l:
        raise InvalidParametersError("l and r profiles must have the same positive length",
                                     {"l": list(l), "r": list(r)})
    if any(x < 1 or n % x for x in l):
        raise InvalidParametersError("every l_i must divide n", {"n": n, "l": list(l)})


def _coefficient_matrix(n: int, c: int, d: int, l: Sequence[int], r: Sequence[int]) -> List[List[int]]:
    """Row i is the linear form s -> l_i[(sum_j s_j r_j)(2c+d) - s_i d]"""
    t = len(l)
    return [[l[i] * ((2 * c + d) * r[j] - (d if i == j else 0)) for j in range(t)] for i in range(t)]


def _trivial_solutions(n: int, t: int) -> List[List[int]]:
    return [[n if i == j else 0 for j in range(t)] for i in range(t)]


def solve_congruence(n: int, c: int, d: int, l: Sequence[int], r: Sequence[int],
                     method: str = "kernel") -> CongruenceLattice:
    """
    All s in Z^t with l_i[(sum_j s_j r_j)(2c+d) - s_i d] = 0 mod n for every i.
    "enumerate" scans residues mod n; "kernel" intersects with the kernel of [A | nI].
    """
    _check_profiles(n, l, r)
    t = len(l)
    rows = _coefficient_matrix(n, c, d, l, r)

    if method == "enumerate":
        if t > ENUMERATION_MAX_T or n > ENUMERATION_MAX_N:
            raise BoundExceededError("residue enumeration is limited to small systems",
                                     {"t": t, "n": n, "max_t": ENUMERATION_MAX_T,
                                      "max_n": ENUMERATION_MAX_N})
        lattice = IntegerLattice(t, _trivial_solutions(n, t))
        for s in product(range(n), repeat=t):
            if all(sum(a * x for a, x in zip(row, s)) % n == 0 for row in rows):
                lattice.add_vector(s)
        return CongruenceLattice(lattice)

    if method != "kernel":
        raise InvalidParametersError(f"unknown congruence method {method!r}")
    # Generators (A e_j | e_j) and (n e_i | 0); the rows of the echelon form whose
    # pivot lies past the residue block span {(0 | s) : A s = 0 mod n}.
    augmented = IntegerLattice(2 * t)
    for j in range(t):
        augmented.add_vector([rows[i][j] for i in range(t)] + [1 if k == j else 0 for k in range(t)])
    for i in range(t):
        augmented.add_vector([n if k == i else 0 for k in range(t)] + [0] * t)
    solutions = IntegerLattice(t, (row[t:] for row in augmented.hnf() if not any(row[:t])))
    logger.debug("kernel route for n=%d, c=%d, d=%d, l=%s, r=%s gave %s", n, c, d, l, r, solutions)
    return CongruenceLattice(solutions)


def closed_form_solution(n: int, c: int, d: int, l: Sequence[int], r: Sequence[int],
                         flavor: str) -> CongruenceLattice:
    """Closed forms for the KP covers and the Savin cover"""
    _check_profiles(n, l, r)
    t = len(l)
    P = CoverParams(n, c, d)
    if flavor == "kp":
        if not P.kp_flag:
            raise FlavorMismatchError("KP closed form needs d = 1 mod n", P.to_dict())
        if any(r_i % l_i for l_i, r_i in zip(l, r)):
            raise InvalidParametersError("KP closed form needs l_i | r_i", {"l": list(l), "r": list(r)})
        r_total = sum(r)
        step = (2 * c + 1) * (n // gcd(n, 2 * r_total * c + r_total - 1))
        lattice = diagonal_lattice([n // l_i for l_i in l])
        lattice.add_vector([step] * t)
    elif flavor == "savin":
        if not P.savin_flag:
            raise FlavorMismatchError("Savin closed form needs (c, d) = (-1, 2) mod n", P.to_dict())
        lattice = diagonal_lattice([n // gcd(n, 2 * l_i) for l_i in l])
    else:
        raise FlavorMismatchError(f"no closed form for flavor {flavor!r}")
    return CongruenceLattice(lattice)


def invariants_n0_d0_s0(P: TypeParams) -> Tuple[int, int, int]:
    n, c, d = P.cover.n, P.cover.c, P.cover.d
    n0 = n // gcd(n, (2 * c + d) * P.r0 * P.l0, d * P.l0)
    d0 = n // gcd(n, P.l0 * (2 * c * P.r + d * P.r - d))
    if n0 % d0:
        raise DivisibilityViolationError("d0 does not divide n0", {"n0": n0, "d0": d0, **P.to_dict()})
    return n0, d0, n0 // d0


def _order_in(x: int, modulus: int) -> int:
    """Order of x in the additive group Z/modulus"""
    return modulus // gcd(modulus, x)


def frobenius_orbit(q_l: int, m0: int, xi: int) -> List[int]:
    big = q_l ** m0 - 1
    orbit, e = [], xi % big
    while e not in orbit:
        orbit.append(e)
        e = (e * q_l) % big
    return orbit


def l0_from_green(q_l: int, m0: int, n: int, xi: int) -> Tuple[int, int]:
    """
    o = least o >= 1 with xi^(q_l^o - 1) of order dividing n; l = m0 / o.
    Characters of the degree m0 residue field are exponents in Z/(q_l^m0 - 1).
    """
    if q_l < 2 or m0 < 1 or n < 1:
        raise InvalidParametersError("need q_l >= 2, m0 >= 1, n >= 1", {"q_l": q_l, "m0": m0, "n": n})
    big = q_l ** m0 - 1
    if len(frobenius_orbit(q_l, m0, xi)) != m0:
        raise NotRegularError("character is not regular", {"xi": xi, "q_l": q_l, "m0": m0})
    for o in range(1, m0 + 1):
        if n % _order_in(xi * (q_l ** o - 1), big) == 0:
            if m0 % o:
                raise DivisibilityViolationError("o does not divide m0", {"o": o, "m0": m0})
            return o, m0 // o
    raise DivisibilityViolationError("no admissible o found", {"xi": xi})


def twist_stabilizer_order(q_l: int, m0: int, n: int, xi: int) -> int:
    """
    Largest l | n such that twisting by a character of order l of the small residue
    field keeps xi in its Frobenius orbit; meaningful when n | q_l - 1.
    """
    big = q_l ** m0 - 1
    pullback = big // (q_l - 1)
    orbit = set(frobenius_orbit(q_l, m0, xi))
    best = 1
    for a in range(q_l - 1):
        if (xi + a * pullback) % big in orbit:
            order = _order_in(a, q_l - 1)
            if n % order == 0:
                best = max(best, order)
    return best


def w0prime_lattice(P: TypeParams) -> CongruenceLattice:
    """n0 Z^t + d0 (1, ..., 1) Z"""
    n0, d0, _ = invariants_n0_d0_s0(P)
    lattice = diagonal_lattice([n0] * P.t)
    lattice.add_vector([d0] * P.t)
    return CongruenceLattice(lattice)


def t0_lattice(P: TypeParams, method: str = "kernel") -> CongruenceLattice:
    return solve_congruence(P.n, P.cover.c, P.cover.d, P.l_profile(), P.r_profile(), method)


def w0_equals_w0prime(P: TypeParams, method: str = "kernel") -> Tuple[bool, int]:
    """Equality flag and index [T0 : W0'] of the translation lattices"""
    t0 = t0_lattice(P, method)
    w0p = w0prime_lattice(P)
    if not w0p.lattice.is_sublattice_of(t0.lattice):
        raise NotSublatticeError("W0' lattice is not inside T0", P.to_dict())
    index = w0p.lattice.index_in(t0.lattice)
    return index == 1, index


def pi_zeta_translations(P: TypeParams) -> Dict[str, List[int]]:
    n0, d0, _ = invariants_n0_d0_s0(P)
    return {"pi_e": [0] * (P.t - 1) + [n0], "zeta_e": [d0] * P.t}


def pi_zeta_elements(P: TypeParams) -> Tuple[TwistedAffineWeylElem, TwistedAffineWeylElem]:
    """Pi_E and zeta_E in W~(t, s0), translations measured in units of n0"""
    _, _, s0 = invariants_n0_d0_s0(P)
    return pi_element(P.t, s0), zeta_element(P.t, s0)


# ---- grid scan ----------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    n: int
    c: int
    d: int
    r0: int
    m0: Optional[int]
    l0: int
    t: int
    index: int
    kp: bool
    savin: bool

    def to_dict(self) -> dict:
        return self.__dict__.copy()


def grid_points(n_max: int, t_max: int, r0_max: int) -> List[TypeParams]:
    points = []
    for n in range(1, n_max + 1):
        for c, d in product(range(n), repeat=2):
            for t in range(1, t_max + 1):
                for r0 in range(1, r0_max + 1):
                    for m0 in (m for m in range(1, r0 + 1) if r0 % m == 0):
                        for l0 in (l for l in range(1, m0 + 1) if m0 % l == 0 and n % l == 0):
                            points.append(TypeParams(CoverParams(n, c, d), r0, m0, l0, t))
    return points


def _scan_point(P: TypeParams) -> ScanRow:
    _, index = w0_equals_w0prime(P)
    return ScanRow(P.n, P.cover.c, P.cover.d, P.r0, P.m0, P.l0, P.t, index,
                   P.cover.kp_flag, P.cover.savin_flag)


def scan_w0(n_max: int, t_max: int, r0_max: int, workers: int = 1,
            n_cap: Optional[int] = None) -> List[ScanRow]:
    """Index [T0 : W0'] over a parameter grid; rows come back in sorted order"""
    if n_cap is None:
        from factory import SCAN_CAP
        n_cap = SCAN_CAP
    if min(n_max, t_max, r0_max) < 1:
        raise InvalidParametersError("scan bounds must be positive")
    if n_max > n_cap:
        raise BoundExceededError(f"n_max = {n_max} exceeds the scan cap {n_cap}",
                                 {"n_max": n_max, "cap": n_cap})
    points = grid_points(n_max, t_max, r0_max)
    logger.info("scanning %d parameter points with %d worker(s)", len(points), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_point, points, chunksize=64))
    else:
        rows = [_scan_point(P) for P in points]
    return sorted(rows, key=lambda row: (row.n, row.c, row.d, row.t, row.r0, row.m0, row.l0))
