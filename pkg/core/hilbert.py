"""
Tame local fields and the n-th Hilbert symbol
Elements are modelled as (valuation, unit residue); the tame symbol needs nothing else.
"""

import logging
import sys
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Dict, Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import (
    ConsistencyError, DegreeMismatchError, FieldMismatchError, InvalidParametersError,
    ModulusMismatchError, ZeroArgumentError,
)
from core.ffield import FFElem, FiniteField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MuN:
    """The root of unity zeta^e in mu_n, written additively"""

    n: int
    e: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParametersError("mu_n needs n >= 1", {"n": self.n})
        object.__setattr__(self, "e", self.e % self.n)

    def _check(self, other: "MuN") -> None:
        if other.n != self.n:
            raise ModulusMismatchError(f"mu_{self.n} combined with mu_{other.n}")

    def __add__(self, other: "MuN") -> "MuN":
        self._check(other)
        return MuN(self.n, self.e + other.e)

    def __sub__(self, other: "MuN") -> "MuN":
        self._check(other)
        return MuN(self.n, self.e - other.e)

    def __neg__(self) -> "MuN":
        return MuN(self.n, -self.e)

    def __mul__(self, k: int) -> "MuN":
        return MuN(self.n, self.e * k)

    __rmul__ = __mul__

    @property
    def is_trivial(self) -> bool:
        return self.e == 0

    def value_in(self, residue: FiniteField) -> FFElem:
        """The root of unity as a residue field element, zeta = g^((q-1)/n)"""
        if residue.order % self.n:
            raise ModulusMismatchError(f"{self.n} does not divide q - 1 = {residue.order}")
        return residue.element(self.e * (residue.order // self.n))

    def to_dict(self) -> Dict[str, int]:
        return {"n": self.n, "e": self.e}


@dataclass(frozen=True)
class LocalFieldElem:
    """Nonzero element varpi^valuation * unit, with unit given by its residue"""

    valuation: int
    unit: FFElem

    def __post_init__(self):
        if self.unit.is_zero:
            raise ZeroArgumentError("unit part must be nonzero")

    def __mul__(self, other: "LocalFieldElem") -> "LocalFieldElem":
        return LocalFieldElem(self.valuation + other.valuation, self.unit * other.unit)

    def __truediv__(self, other: "LocalFieldElem") -> "LocalFieldElem":
        return LocalFieldElem(self.valuation - other.valuation, self.unit / other.unit)

    def __pow__(self, k: int) -> "LocalFieldElem":
        return LocalFieldElem(self.valuation * k, self.unit ** k)

    def __neg__(self) -> "LocalFieldElem":
        return LocalFieldElem(self.valuation, -self.unit)

    def inverse(self) -> "LocalFieldElem":
        return LocalFieldElem(-self.valuation, self.unit.inverse())

    @property
    def is_unit(self) -> bool:
        return self.valuation == 0

    def to_dict(self) -> Dict[str, int]:
        return {"v": self.valuation, "u": self.unit.dlog()}


class LocalField:
    """
    Tame local field with residue field F_q and symbol degree n | q - 1.
    The uniformizer is symbolic. Extensions are either unramified of degree f
    or totally ramified of degree e, generated by a root of x^e - varpi_F.
    """

    def __init__(self, residue: FiniteField, n: int, base: Optional["LocalField"] = None,
                 kind: str = "base", degree: int = 1):
        if n < 1:
            raise InvalidParametersError("symbol degree must be positive", {"n": n})
        if residue.order % n:
            raise ModulusMismatchError(f"n = {n} does not divide q - 1 = {residue.order}",
                                       {"n": n, "q": residue.q})
        if gcd(n, residue.p) != 1:
            raise ModulusMismatchError("wild symbols (p | n) are not supported",
                                       {"n": n, "p": residue.p})
        self.residue = residue
        self.n = n
        self.base = base
        self.kind = kind
        self.degree = degree
        self._extensions: Dict[tuple, "LocalField"] = {}

    def __repr__(self) -> str:
        if self.base is None:
            return f"LocalField(q={self.q}, n={self.n})"
        return f"LocalField(q={self.q}, n={self.n}, {self.kind} degree {self.degree} over q={self.base.q})"

    @property
    def q(self) -> int:
        return self.residue.q

    @property
    def uniformizer(self) -> LocalFieldElem:
        return LocalFieldElem(1, self.residue.one)

    def element(self, valuation: int, unit_exponent: int = 0) -> LocalFieldElem:
        return LocalFieldElem(valuation, self.residue.element(unit_exponent))

    def unit(self, residue: FFElem) -> LocalFieldElem:
        return LocalFieldElem(0, residue)

    def contains(self, x: LocalFieldElem) -> bool:
        return x.unit.field is self.residue

    def check(self, *xs: LocalFieldElem) -> None:
        for x in xs:
            if not self.contains(x):
                raise FieldMismatchError(f"element with residue in {x.unit.field.label} used in {self!r}")

    # ---- extensions -----------------------------------------------------

    def unramified_extension(self, f: int) -> "LocalField":
        """
        Unramified E/F of degree f. The residue field of E is rebased so that
        its degree-k subfield coincides with F's residue field exponent by exponent.
        """
        if f < 1:
            raise DegreeMismatchError("extension degree must be positive", {"f": f})
        if f == 1:
            return self
        key = ("unramified", f)
        if key not in self._extensions:
            from factory import get_finite_field
            big = get_finite_field(self.residue.p, self.residue.k * f)
            sub = big.subfield(self.residue.k)
            j = self.residue.isomorphism_exponent(sub)
            lift = j
            while gcd(lift, big.order) != 1:
                lift += self.residue.order
            residue = big.rebased(lift)
            step = residue.order // self.residue.order
            aligned = all(
                residue.zech(e * step) == (None if z is None else z * step)
                for e, z in ((e, self.residue.zech(e)) for e in range(self.residue.order))
            )
            if not aligned:
                raise ConsistencyError("residue tower is not aligned", {"f": f})
            self._extensions[key] = LocalField(residue, self.n, base=self, kind="unramified", degree=f)
            logger.debug("unramified extension of degree %d over q=%d uses generator exponent %d",
                         f, self.q, lift)
        return self._extensions[key]

    def ramified_extension(self, e: int) -> "LocalField":
        """Totally ramified E = F(varpi_F^(1/e)); varpi_E^e = varpi_F"""
        if e < 1:
            raise DegreeMismatchError("ramification index must be positive", {"e": e})
        if e == 1:
            return self
        if gcd(e, self.residue.p) != 1:
            raise DegreeMismatchError("wildly ramified extensions are not modelled", {"e": e})
        key = ("ramified", e)
        if key not in self._extensions:
            self._extensions[key] = LocalField(self.residue, self.n, base=self, kind="ramified", degree=e)
        return self._extensions[key]

    def extension(self, degree: int, unramified: bool) -> "LocalField":
        return self.unramified_extension(degree) if unramified else self.ramified_extension(degree)

    def embed(self, x: LocalFieldElem) -> LocalFieldElem:
        """Image of an element of the base field in this field"""
        if self.base is None:
            self.check(x)
            return x
        self.base.check(x)
        if self.kind == "unramified":
            step = self.residue.order // self.base.residue.order
            return LocalFieldElem(x.valuation, self.residue.element(x.unit.dlog() * step))
        return LocalFieldElem(self.degree * x.valuation, x.unit)

    def norm(self, y: LocalFieldElem) -> LocalFieldElem:
        """N_{E/F}(y) for this field E over its base F"""
        self.check(y)
        if self.base is None:
            return y
        if self.kind == "unramified":
            # N(g_E) = g_E^(1+q+...+q^(f-1)) is the generator of the base residue field
            return LocalFieldElem(self.degree * y.valuation, self.base.residue.element(y.unit.dlog()))
        sign = self.residue.minus_one ** ((self.degree + 1) * y.valuation)
        return LocalFieldElem(y.valuation, sign * y.unit ** self.degree)


def tame_symbol(x: LocalFieldElem, y: LocalFieldElem, K: LocalField) -> FFElem:
    """(-1)^(v(x)v(y)) * u_x^v(y) * u_y^(-v(x)) in the residue field"""
    K.check(x, y)
    sign = K.residue.minus_one ** (x.valuation * y.valuation)
    return sign * x.unit ** y.valuation * y.unit ** (-x.valuation)


def hilbert_symbol(x: LocalFieldElem, y: LocalFieldElem, K: LocalField) -> MuN:
    """
    n-th Hilbert symbol (x, y)_n in the tame case.
    The root of unity t^((q-1)/n) equals zeta^dlog(t) for zeta = g^((q-1)/n),
    so the exponent is dlog(t) mod n.
    """
    if K.residue.order % K.n:
        raise ModulusMismatchError(f"n = {K.n} does not divide q - 1")
    return MuN(K.n, tame_symbol(x, y, K).dlog())


def hilbert_symbol_unramified(x: LocalFieldElem, y: LocalFieldElem, f: int, F: LocalField) -> MuN:
    """
    (x, y)_{n,E} for x over F and y over the unramified E/F of degree f,
    evaluated over E directly and as (x, N_{E/F} y)_{n,F}; the routes must agree.
    """
    if f < 1:
        raise DegreeMismatchError("extension degree must be positive", {"f": f})
    E = F.unramified_extension(f)
    if y.unit.field.k != F.residue.k * f:
        raise DegreeMismatchError(f"y does not lie in the degree {f} extension",
                                  {"f": f, "residue_degree": y.unit.field.k})
    F.check(x)
    E.check(y)
    direct = hilbert_symbol(E.embed(x), y, E)
    via_norm = hilbert_symbol(x, E.norm(y), F)
    if direct != via_norm:
        raise ConsistencyError("unramified symbol routes disagree",
                               {"direct": direct.e, "via_norm": via_norm.e})
    return direct


def one_minus(x: LocalFieldElem, K: LocalField) -> LocalFieldElem:
    """1 - x, which needs the Zech table when x is a unit"""
    K.check(x)
    if x.valuation > 0:
        return LocalFieldElem(0, K.residue.one)
    if x.valuation < 0:
        return LocalFieldElem(x.valuation, -x.unit)
    residue = K.residue.one - x.unit
    if residue.is_zero:
        raise InvalidParametersError("1 - x has undetermined valuation when x has residue 1")
    return LocalFieldElem(0, residue)
