"""
Induced modules of affine and twisted affine Hecke algebras
Ind_A^H(C_x) on the basis [sigma] (x) 1, irreducibility tests and one-dimensional constituents
"""

import logging
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import (
    BoxOverflowError, ConsistencyError, FlavorMismatchError, InvalidParametersError,
    SingularSolveError, ZeroArgumentError,
)
from core.hecke import HeckeAlgebra
from core.scalars import RV, K, V, Z, Scalar, format_scalar, scalar, specialize
from core.typeparams import TypeParams, invariants_n0_d0_s0
from core.weyl import TwistedAffineWeylElem, all_perms, permutation_element, zeta_element

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacterPoint:
    """Values x_i of the Bernstein generators, and zval for Z when the algebra is twisted"""

    x: Tuple[Scalar, ...]
    zval: Optional[Scalar] = None

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(scalar(xi) for xi in self.x))
        if self.zval is not None:
            object.__setattr__(self, "zval", scalar(self.zval))
            if not self.zval:
                raise ZeroArgumentError("zval must be nonzero")
        if not self.x or any(not xi for xi in self.x):
            raise ZeroArgumentError("character values must be nonzero")

    @property
    def t(self) -> int:
        return len(self.x)

    def check_for(self, algebra: HeckeAlgebra) -> None:
        if algebra.t != self.t:
            raise InvalidParametersError("character rank differs from the algebra rank",
                                         {"t": algebra.t, "points": self.t})
        if algebra.flavor == "finite":
            raise FlavorMismatchError("induction starts from the Bernstein subalgebra")
        if algebra.flavor == "twisted":
            if self.zval is None:
                raise InvalidParametersError("the twisted algebra needs a value for Z")
            product_x = K.one
            for xi in self.x:
                product_x *= xi
            if self.zval ** algebra.s != product_x:
                raise InvalidParametersError("Z^s must equal X_1 ... X_t")

    def theta_value(self, lam: Sequence[int]) -> Scalar:
        """theta_lam acts by v^<lam, 2 rho> prod x_i^lam_i"""
        t = self.t
        value = V ** sum(lam[i] * (t - 1 - 2 * i) for i in range(t))
        for xi, k in zip(self.x, lam):
            value *= xi ** k
        return value

    def to_dict(self) -> dict:
        data = {"x": [format_scalar(xi) for xi in self.x]}
        if self.zval is not None:
            data["zval"] = format_scalar(self.zval)
        return data


def character_point(a: Sequence[Fraction], n0: int, unit=1) -> CharacterPoint:
    """Image x_i = unit * q0^(-a_i n0) of an unramified character, q0 = z = v^2"""
    exponents = [Fraction(-2) * Fraction(ai) * n0 for ai in a]
    if any(e.denominator != 1 for e in exponents):
        raise InvalidParametersError("q0^(a_i n0) needs 2 a_i n0 integral",
                                     {"a": [str(x) for x in a], "n0": n0})
    u = scalar(unit)
    return CharacterPoint(tuple(u * V ** int(e) for e in exponents))


def rank_one_point(s: Fraction, n0: int, unit=1) -> CharacterPoint:
    """x = (unit, unit * q0^(2 s n0)), the rank-one family up to a central unit"""
    exponent = Fraction(4) * Fraction(s) * n0
    if exponent.denominator != 1:
        raise InvalidParametersError("q0^(2 s n0) needs 4 s n0 integral", {"s": str(s), "n0": n0})
    u = scalar(unit)
    return CharacterPoint((u, u * V ** int(exponent)))


@dataclass
class InducedModule:
    """Generator actions on the basis [sigma] (x) 1, columns are images"""

    algebra: HeckeAlgebra
    point: CharacterPoint
    labels: List[Tuple[int, ...]]
    actions: Dict[str, DomainMatrix]
    v_value: Optional[Fraction] = None
    box: Tuple[int, int] = (0, 0)

    @property
    def t(self) -> int:
        return self.algebra.t

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def domain(self):
        """Q(v) for symbolic modules, Q once v is specialized"""
        return RV if self.v_value is None else QQ

    @property
    def z_value(self):
        return Z if self.v_value is None else _qq(self.v_value ** 2)

    def rational_actions(self, v: Optional[Fraction] = None) -> Dict[str, DomainMatrix]:
        """Action matrices over Q at v = value"""
        if self.v_value is not None:
            if v is not None and Fraction(v) != self.v_value:
                raise InvalidParametersError("module was built at another value of v",
                                             {"built": str(self.v_value), "requested": str(v)})
            return self.actions
        if v is None:
            from factory import SPECIALIZE_V
            v = SPECIALIZE_V
        v = Fraction(v)
        return {name: DomainMatrix.from_list([[_qq(specialize(c, v)) for c in row] for row in m.to_list()], QQ)
                for name, m in self.actions.items()}

    def restrict(self) -> "InducedModule":
        """Restriction from H~(t,s,z) to H(t,z)"""
        if self.algebra.flavor != "twisted":
            return self
        from factory import get_hecke_algebra
        actions = {name: m for name, m in self.actions.items() if name != "zeta"}
        return InducedModule(get_hecke_algebra(self.t, 1, "affine"), CharacterPoint(self.point.x),
                             self.labels, actions, self.v_value, self.box)

    def to_dict(self) -> dict:
        def fmt(c):
            return format_scalar(c) if self.v_value is None else str(_fraction(c))
        return {
            "t": self.t,
            "flavor": self.algebra.flavor,
            "s": self.algebra.s,
            "basis": [list(sigma) for sigma in self.labels],
            "v": None if self.v_value is None else str(self.v_value),
            "box": list(self.box),
            "actions": {name: [[fmt(c) for c in row] for row in m.to_list()]
                        for name, m in self.actions.items()},
        }


# ---- matrix helpers ---------------------------------------------------------------

def _qq(x):
    return QQ(int(x.numerator), int(x.denominator))


def _fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _convert(x, domain):
    return _qq(x) if domain == QQ else domain.convert(x)


def _scalar_matrix(dim: int, c, domain) -> DomainMatrix:
    return DomainMatrix.diag([c] * dim, domain)


def _same(a: DomainMatrix, b: DomainMatrix) -> bool:
    return (a - b).is_zero_matrix


def _echelon(rows: Sequence[Sequence], domain) -> List[list]:
    """Nonzero rows of the reduced echelon form"""
    if not rows:
        return []
    reduced, pivots = DomainMatrix.from_list([[_convert(x, domain) for x in row] for row in rows], domain).rref()
    return reduced.to_list()[:len(pivots)]


def _apply(m: DomainMatrix, vec: Sequence) -> list:
    column = DomainMatrix.from_list([[x] for x in vec], m.domain)
    return [row[0] for row in (m * column).to_list()]


# ---- construction ---------------------------------------------------------------

def _coerce(c: Scalar, v: Optional[Fraction]):
    return c if v is None else _qq(specialize(c, v))


def _integral_lambda(w: TwistedAffineWeylElem) -> Tuple[int, ...]:
    return tuple(x // w.s for x in w.num)


def _solve_in_box(algebra: HeckeAlgebra, targets: List[Dict[TwistedAffineWeylElem, Scalar]],
                  lo: int, hi: int, v: Optional[Fraction]):
    """Coordinates of each target in {[tau] theta_lam}; None when some target is outside the span"""
    columns = []
    keys = []
    for lam in product(range(lo, hi + 1), repeat=algebra.t):
        theta = algebra.theta(lam)
        for tau in all_perms(algebra.t):
            columns.append((algebra.basis_elem(permutation_element(tau, algebra.s)) * theta).coeffs)
            keys.append((tau, lam))
    support = sorted({w for col in columns + targets for w in col})
    index = {w: i for i, w in enumerate(support)}
    domain = RV if v is None else QQ
    rows = [[domain.zero] * (len(columns) + len(targets)) for _ in support]
    for j, col in enumerate(columns + targets):
        for w, c in col.items():
            rows[index[w]][j] = _coerce(c, v)
    reduced, pivots = DomainMatrix.from_list(rows, domain).rref()
    n_cols = len(columns)
    if tuple(pivots[:n_cols]) != tuple(range(n_cols)):
        raise SingularSolveError("Bernstein spanning set is dependent", {"box": [lo, hi]})
    if len(pivots) > n_cols:
        return None
    reduced = reduced.to_list()
    solutions = []
    for k in range(len(targets)):
        coords = {}
        for r, key in enumerate(keys):
            c = reduced[r][n_cols + k]
            if c:
                coords[key] = c
        solutions.append(coords)
    return solutions


def induce(point: CharacterPoint, algebra: Optional[HeckeAlgebra] = None,
           v: Optional[Fraction] = None, box_cap: Optional[int] = None) -> InducedModule:
    """
    Ind_A^H(C_x): every generator times [sigma] is rewritten in the basis
    {[tau] theta_lam} by an exact solve over a translation box, then theta_lam -> x(lam).
    """
    if algebra is None:
        from factory import get_hecke_algebra
        algebra = get_hecke_algebra(point.t, 1, "affine")
    if box_cap is None:
        from factory import BOX_CAP
        box_cap = BOX_CAP
    point.check_for(algebra)
    v = None if v is None else Fraction(v)
    t, s = algebra.t, algebra.s
    labels = all_perms(t)
    names = algebra.generator_names()

    # integral targets after pulling out [zeta]^b
    targets, origin = [], []
    for name in names:
        gen = algebra.generator(name)
        for j, sigma in enumerate(labels):
            product_elem = gen * algebra.basis_elem(permutation_element(sigma, s))
            for b, part in algebra.graded_components(product_elem).items():
                shift = zeta_element(t, s) ** (-b)
                targets.append({w * shift: c for w, c in part.coeffs.items()})
                origin.append((name, j, b))

    coords = [x for target in targets for w in target for x in _integral_lambda(w)]
    lo, hi = min(coords), max(coords)
    while True:
        if hi - lo + 1 > box_cap:
            raise BoxOverflowError("translation box exceeded its cap",
                                   {"lo": lo, "hi": hi, "cap": box_cap})
        solutions = _solve_in_box(algebra, targets, lo, hi, v)
        if solutions is not None:
            break
        grow = max(1, (hi - lo + 1) // 2)
        lo, hi = lo - grow, hi + grow
        logger.debug("enlarging induce box to [%d, %d]", lo, hi)

    domain = RV if v is None else QQ
    position = {sigma: i for i, sigma in enumerate(labels)}
    entries = {name: [[domain.zero] * len(labels) for _ in labels] for name in names}
    zval = _coerce(point.zval, v) if point.zval is not None else None
    for (name, j, b), coords_k in zip(origin, solutions):
        for (tau, lam), c in coords_k.items():
            value = c * _coerce(point.theta_value(lam), v)
            if b:
                value = value * zval ** b
            entries[name][position[tau]][j] += value
    actions = {name: DomainMatrix.from_list(rows, domain) for name, rows in entries.items()}

    module = InducedModule(algebra, point, labels, actions, v, (lo, hi))
    verify_relations(module)
    return module


# ---- relations -------------------------------------------------------------------

def verify_relations(module: InducedModule) -> None:
    """Quadratic, braid, Pi-conjugation, Pi^t and zeta relations on the action matrices"""
    acts, t, s = module.actions, module.t, module.algebra.s
    domain = module.domain
    ident = DomainMatrix.eye(module.dim, domain)
    failures = []

    simple = [f"s{i}" for i in range(t) if f"s{i}" in acts]
    for name in simple:
        m = acts[name]
        check = (m - _scalar_matrix(module.dim, module.z_value, domain)) * (m + ident)
        if not check.is_zero_matrix:
            failures.append(f"quadratic {name}")

    if t >= 3 and "s0" in acts:
        for i in range(t):
            for j in range(i + 1, t):
                a, b = acts[f"s{i}"], acts[f"s{j}"]
                ab, ba = a * b, b * a
                if (j - i) % t in (1, t - 1):
                    if not _same(ab * a, ba * b):
                        failures.append(f"braid s{i} s{j}")
                elif not _same(ab, ba):
                    failures.append(f"commute s{i} s{j}")

    if "pi" in acts:
        pi = acts["pi"]
        for i in range(t):
            prev = f"s{(i - 1) % t}"
            if f"s{i}" not in acts or prev not in acts:
                continue
            if not _same(pi * acts[f"s{i}"], acts[prev] * pi):
                failures.append(f"pi s{i} = {prev} pi")
        central = domain.one
        for xi in module.point.x:
            central = central * _coerce(xi, module.v_value)
        pi_t = pi ** t
        if not _same(pi_t, _scalar_matrix(module.dim, central, domain)):
            failures.append("pi^t = x_1 ... x_t")
        if "zeta" in acts:
            zeta = acts["zeta"]
            for name, m in acts.items():
                if not _same(zeta * m, m * zeta):
                    failures.append(f"zeta central against {name}")
            if not _same(zeta ** s, pi_t):
                failures.append("zeta^s = pi^t")

    if failures:
        raise ConsistencyError("induced module violates defining relations", {"relations": failures})


# ---- irreducibility ----------------------------------------------------------------

def spin(actions: Dict[str, DomainMatrix], vectors: Sequence[Sequence]) -> List[list]:
    """Smallest invariant subspace containing the vectors (row-reduced basis)"""
    domain = next(iter(actions.values())).domain
    basis = _echelon(vectors, domain)
    frontier = list(basis)
    while frontier:
        vec = frontier.pop()
        for m in actions.values():
            image = _apply(m, vec)
            grown = _echelon(basis + [image], domain)
            if len(grown) > len(basis):
                basis = grown
                frontier.append(image)
    return basis


def _eigen_vectors(m: DomainMatrix, eigenvalue: Fraction) -> List[list]:
    shifted = m - _scalar_matrix(m.shape[0], _qq(eigenvalue), m.domain)
    return shifted.nullspace().to_list()


def _z_at(module: InducedModule, v: Optional[Fraction]) -> Fraction:
    return (Fraction(v) if v is not None else module.v_value or _default_v()) ** 2


def proper_submodule(module: InducedModule, v: Optional[Fraction] = None,
                     tries: int = 20, seed: Optional[int] = None) -> Optional[List[List[Fraction]]]:
    """
    Witness search in the MeatAxe manner: spin eigenvectors of the simple generators
    and of random words in them; returns a proper invariant subspace or None.
    The random words are drawn from seed (METAHECKE_SEED when omitted).
    """
    if seed is None:
        from factory import SEED
        seed = SEED
    acts = module.rational_actions(v)
    z = _z_at(module, v)
    dim = module.dim
    candidates = []
    simple = [m for name, m in sorted(acts.items()) if name.startswith("s")]
    for m in simple:
        for eigenvalue in (z, Fraction(-1)):
            candidates.extend(_eigen_vectors(m, eigenvalue))
    rng = random.Random(seed)
    mats = list(acts.values())
    for _ in range(tries if simple else 0):
        word = DomainMatrix.eye(dim, QQ)
        for _ in range(3):
            word = word * rng.choice(mats)
        combo = word + rng.choice(simple) * QQ(rng.randint(1, 5))
        for eigenvalue in (z, Fraction(-1)):
            candidates.extend(_eigen_vectors(combo, eigenvalue)[:1])
    for vec in candidates:
        sub = spin(acts, [vec])
        if 0 < len(sub) < dim:
            logger.debug("seed %d found an invariant subspace of dimension %d", seed, len(sub))
            return [[_fraction(x) for x in row] for row in sub]
    return None


def _default_v() -> Fraction:
    from factory import SPECIALIZE_V
    return SPECIALIZE_V


def generated_algebra_dimension(actions: Dict[str, DomainMatrix]) -> int:
    """Dimension of the algebra generated by the action matrices"""
    mats = list(actions.values())
    domain = mats[0].domain
    flatten = lambda m: [x for row in m.to_list() for x in row]
    ident = DomainMatrix.eye(mats[0].shape[0], domain)
    basis = _echelon([flatten(ident)], domain)
    frontier = [ident]
    while frontier:
        current = frontier.pop()
        for m in mats:
            candidate = m * current
            grown = _echelon(basis + [flatten(candidate)], domain)
            if len(grown) > len(basis):
                basis = grown
                frontier.append(candidate)
    return len(basis)


def irreducible(module: InducedModule, v: Optional[Fraction] = None, method: str = "auto") -> bool:
    """
    Absolute irreducibility at a rational specialization.
    "burnside": the generated algebra is all of M_d; "eigen" (t = 2): no common eigenline.
    """
    acts = module.rational_actions(v)
    dim = module.dim
    if dim == 1:
        return True
    if method == "auto":
        method = "eigen" if module.t == 2 else "burnside"
    if method == "eigen":
        if module.t != 2:
            raise InvalidParametersError("the eigenline test is for rank two")
        z = _z_at(module, v)
        for eigenvalue in (z, Fraction(-1)):
            for vec in _eigen_vectors(acts["s1"], eigenvalue):
                if len(spin(acts, [vec])) < dim:
                    return False
        return True
    if method != "burnside":
        raise InvalidParametersError(f"unknown irreducibility method {method!r}")
    return generated_algebra_dimension(acts) == dim * dim


@dataclass
class Constituent:
    """
    Common eigenspace of the simple generators for one eigenvalue. Every line in it
    is a one-dimensional sub (or quotient); pi_value is reported when the space is a line.
    """

    kind: str
    sigma_value: Optional[Fraction]
    eigenspace_dimension: int
    pi_value: Optional[Fraction] = None
    basis: List[List[Fraction]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "sigma_value": None if self.sigma_value is None else str(self.sigma_value),
            "pi_value": None if self.pi_value is None else str(self.pi_value),
            "eigenspace_dimension": self.eigenspace_dimension,
        }


def _pi_scalar(pi: DomainMatrix, vec: list) -> Optional[Fraction]:
    image = _apply(pi, vec)
    k = next(i for i, x in enumerate(vec) if x)
    ratio = image[k] / vec[k]
    if all(a == ratio * b for a, b in zip(image, vec)):
        return _fraction(ratio)
    return None


def one_dim_constituents(module: InducedModule, v: Optional[Fraction] = None) -> List[Constituent]:
    """
    One-dimensional submodules (common eigenvectors) and quotients (common left
    eigenvectors). Every simple generator acts on such a line by z or by -1.
    """
    acts = module.rational_actions(v)
    if module.dim == 1:
        value = _fraction(acts["pi"].to_list()[0][0]) if "pi" in acts else None
        return [Constituent("sub", None, 1, value, [[Fraction(1)]]),
                Constituent("quotient", None, 1, value, [[Fraction(1)]])]
    z = _z_at(module, v)
    simple = [m for name, m in sorted(acts.items()) if name.startswith("s")]
    found = []
    for kind in ("sub", "quotient"):
        mats = simple if kind == "sub" else [m.transpose() for m in simple]
        pi = acts.get("pi")
        if pi is not None and kind == "quotient":
            pi = pi.transpose()
        for eigenvalue in (z, Fraction(-1)):
            shifted = [m - _scalar_matrix(module.dim, _qq(eigenvalue), QQ) for m in mats]
            space = shifted[0].vstack(*shifted[1:]).nullspace().to_list()
            if not space:
                continue
            pi_value = _pi_scalar(pi, space[0]) if pi is not None and len(space) == 1 else None
            basis = [[_fraction(x) for x in row] for row in space]
            found.append(Constituent(kind, eigenvalue, len(space), pi_value, basis))
    return found


# ---- reducibility points --------------------------------------------------------------

@dataclass
class ReducibilityReport:
    s_star: Fraction
    n0: int
    v: Fraction
    checks: List[dict]

    def to_dict(self) -> dict:
        return {"s_star": str(self.s_star), "n0": self.n0, "v": str(self.v), "checks": self.checks}


def reducibility_point(P: TypeParams, v: Optional[Fraction] = None, unit=1) -> ReducibilityReport:
    """
    s* = 1/(2 n0) for the rank-one case, with witness modules at s*, 2 s* and s*/2.
    Ratios x2/x1 = q0^(2 s n0) with q0 = z.
    """
    from factory import get_hecke_algebra
    if v is None:
        v = _default_v()
    v = Fraction(v)
    n0, _, _ = invariants_n0_d0_s0(P)
    s_star = Fraction(1, 2 * n0)
    algebra = get_hecke_algebra(2, 1, "affine")
    checks = []
    for label, s in (("s_star", s_star), ("double", 2 * s_star), ("half", s_star / 2)):
        point = rank_one_point(s, n0, unit)
        module = induce(point, algebra)
        verdict = irreducible(module, v)
        checks.append({"label": label, "s": str(s), "ratio_q0_power": str(2 * s * n0),
                       "reducible": not verdict})
    if not checks[0]["reducible"] or any(c["reducible"] for c in checks[1:]):
        raise ConsistencyError("reducibility witnesses disagree with s* = 1/(2 n0)", {"checks": checks})
    return ReducibilityReport(s_star, n0, v, checks)
