"""
Finite, affine and twisted affine Hecke algebras of type A in the Iwahori-Matsumoto basis
"""

import logging
import re
import sys
from collections import defaultdict
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import AlgebraMismatchError, FlavorMismatchError, InvalidParametersError
from core.scalars import K, Scalar, Z, format_scalar, scalar, scalar_to_dict
from core.weyl import (
    TwistedAffineWeylElem, from_word, identity, length, pi_element, reduced_word, simple_reflection,
    translation, zeta_element,
)

logger = logging.getLogger(__name__)

FLAVORS = ("finite", "affine", "twisted")

Coeffs = Dict[TwistedAffineWeylElem, Scalar]


def _sort_key(w: TwistedAffineWeylElem):
    return (length(w), w.num, w.perm)


class HeckeElement:
    """Finitely supported combination of IM basis vectors [w]"""

    def __init__(self, algebra: "HeckeAlgebra", coeffs: Optional[Coeffs] = None):
        self.algebra = algebra
        self.coeffs: Coeffs = {w: c for w, c in (coeffs or {}).items() if c}

    def _check(self, other: "HeckeElement") -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(f"{self.algebra!r} combined with {other.algebra!r}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, K.zero) + c
        return HeckeElement(self.algebra, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.algebra, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, HeckeElement):
            return self.algebra.multiply(self, other)
        factor = scalar(other)
        return HeckeElement(self.algebra, {w: c * factor for w, c in self.coeffs.items()})

    def __rmul__(self, other) -> "HeckeElement":
        factor = scalar(other)
        return HeckeElement(self.algebra, {w: factor * c for w, c in self.coeffs.items()})

    def __pow__(self, k: int) -> "HeckeElement":
        if k < 0:
            raise InvalidParametersError("only generators have closed-form inverses")
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, w: TwistedAffineWeylElem) -> Scalar:
        return self.coeffs.get(w, K.zero)

    def support(self) -> List[TwistedAffineWeylElem]:
        return sorted(self.coeffs, key=_sort_key)

    def to_list(self) -> List[dict]:
        return [{"weyl": w.to_dict(), "coeff": scalar_to_dict(self.coeffs[w])} for w in self.support()]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({format_scalar(self.coeffs[w])})[{w.num}|{w.perm}]" for w in self.support())


class HeckeAlgebra:
    """
    H0(t,z), H(t,z) or H~(t,s,z) with quadratic relation ([s_i] - z)([s_i] + 1) = 0.
    Products are expanded right to left along a reduced word of the right factor.
    """

    def __init__(self, t: int, s: int = 1, flavor: str = "affine"):
        if flavor not in FLAVORS:
            raise InvalidParametersError(f"unknown flavor {flavor!r}", {"flavors": list(FLAVORS)})
        if t < 1 or s < 1:
            raise InvalidParametersError("rank and twist must be positive", {"t": t, "s": s})
        if flavor != "twisted" and s != 1:
            raise FlavorMismatchError(f"the {flavor} algebra has twist 1", {"s": s})
        self.t = t
        self.s = s
        self.flavor = flavor

    def __repr__(self) -> str:
        return f"HeckeAlgebra(t={self.t}, s={self.s}, {self.flavor})"

    def generator_names(self) -> List[str]:
        names = [f"s{i}" for i in range(1, self.t)]
        if self.flavor != "finite":
            if self.t >= 2:
                names.insert(0, "s0")
            names.append("pi")
        if self.flavor == "twisted":
            names.append("zeta")
        return names

    # ---- elements -------------------------------------------------------

    def contains(self, w: TwistedAffineWeylElem) -> bool:
        if w.t != self.t or w.s != self.s:
            return False
        if self.flavor == "finite":
            return w.is_permutation
        if self.flavor == "affine":
            return w.is_integral
        return True

    def element(self, coeffs: Coeffs) -> HeckeElement:
        for w in coeffs:
            if not self.contains(w):
                raise FlavorMismatchError(f"{w!r} is not in the group of {self!r}")
        return HeckeElement(self, coeffs)

    def zero(self) -> HeckeElement:
        return HeckeElement(self)

    def one(self) -> HeckeElement:
        return HeckeElement(self, {identity(self.t, self.s): K.one})

    def basis_elem(self, w: TwistedAffineWeylElem) -> HeckeElement:
        return self.element({w: K.one})

    def weyl_generator(self, name: str) -> TwistedAffineWeylElem:
        if name not in self.generator_names():
            raise FlavorMismatchError(f"{name} is not a generator of {self!r}")
        if name == "pi":
            return pi_element(self.t, self.s)
        if name == "zeta":
            return zeta_element(self.t, self.s)
        return simple_reflection(self.t, int(name[1:]), self.s)

    def generator(self, name: str) -> HeckeElement:
        return self.basis_elem(self.weyl_generator(name))

    def generator_inverse(self, name: str) -> HeckeElement:
        """[s_i]^-1 = z^-1 [s_i] + (z^-1 - 1); Pi and zeta invert inside the group"""
        w = self.weyl_generator(name)
        if name.startswith("s"):
            return self.element({w: 1 / Z, identity(self.t, self.s): 1 / Z - 1})
        return self.basis_elem(w.inverse())

    # ---- multiplication -------------------------------------------------

    def _times_simple(self, coeffs: Coeffs, i: int) -> Coeffs:
        g = simple_reflection(self.t, i, self.s)
        out: Coeffs = defaultdict(lambda: K.zero)
        for w, c in coeffs.items():
            wg = w * g
            if length(wg) > length(w):
                out[wg] += c
            else:
                out[wg] += Z * c
                out[w] += (Z - 1) * c
        return {w: c for w, c in out.items() if c}

    def _times_simple_inverse(self, coeffs: Coeffs, i: int) -> Coeffs:
        shifted = self._times_simple(coeffs, i)
        out: Coeffs = defaultdict(lambda: K.zero)
        for w, c in shifted.items():
            out[w] += c / Z
        for w, c in coeffs.items():
            out[w] += (1 / Z - 1) * c
        return {w: c for w, c in out.items() if c}

    @staticmethod
    def _times_length_zero(coeffs: Coeffs, g: TwistedAffineWeylElem) -> Coeffs:
        return {w * g: c for w, c in coeffs.items()}

    def _times_basis(self, coeffs: Coeffs, u: TwistedAffineWeylElem, prefer: str) -> Coeffs:
        a, b, word = reduced_word(u, prefer)
        g = from_word(self.t, self.s, a, b, ())
        part = self._times_length_zero(coeffs, g)
        for i in word:
            part = self._times_simple(part, i)
        return part

    def multiply(self, x: HeckeElement, y: HeckeElement, prefer: str = "smallest") -> HeckeElement:
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatchError(f"factors do not belong to {self!r}")
        out: Coeffs = defaultdict(lambda: K.zero)
        for u, c in y.coeffs.items():
            for w, d in self._times_basis(x.coeffs, u, prefer).items():
                out[w] += d * c
        return HeckeElement(self, out)

    def basis_inverse(self, w: TwistedAffineWeylElem) -> HeckeElement:
        """[w]^-1 = [s_ik]^-1 ... [s_i1]^-1 [g^-1] for [w] = [g][s_i1]...[s_ik]"""
        if not self.contains(w):
            raise FlavorMismatchError(f"{w!r} is not in the group of {self!r}")
        a, b, word = reduced_word(w)
        g = from_word(self.t, self.s, a, b, ())
        coeffs: Coeffs = {identity(self.t, self.s): K.one}
        for i in reversed(word):
            coeffs = self._times_simple_inverse(coeffs, i)
        return HeckeElement(self, self._times_length_zero(coeffs, g.inverse()))

    # ---- Bernstein elements ---------------------------------------------

    def theta(self, lam: Sequence, nu: Optional[Sequence] = None) -> HeckeElement:
        """
        theta_lam = [t_mu][t_nu]^-1 with mu = lam + nu and mu, nu dominant.
        Without nu, the smallest dominant nu is used.
        """
        if self.flavor == "finite":
            raise FlavorMismatchError("the finite Hecke algebra has no Bernstein elements")
        lam = [Fraction(x) for x in lam]
        if len(lam) != self.t:
            raise InvalidParametersError("translation has the wrong rank", {"t": self.t})
        if nu is None:
            nu = [Fraction(0)] * self.t
            for i in range(self.t - 2, -1, -1):
                nu[i] = nu[i + 1] + max(Fraction(0), lam[i + 1] - lam[i])
        nu = [Fraction(x) for x in nu]
        mu = [a + b for a, b in zip(lam, nu)]
        for vec in (mu, nu):
            if any(vec[i] < vec[i + 1] for i in range(self.t - 1)):
                raise InvalidParametersError("theta needs dominant mu and nu",
                                             {"vector": [str(x) for x in vec]})
        t_mu = translation(mu, self.s)
        if not self.contains(t_mu):
            raise FlavorMismatchError(f"translation {[str(x) for x in lam]} is not in {self!r}")
        return self.basis_elem(t_mu) * self.basis_inverse(translation(nu, self.s))

    # ---- form and grading -----------------------------------------------

    def hermitian_form(self, x: HeckeElement, y: HeckeElement) -> Scalar:
        """<x, y> = sum c_x(w) c_y(w) z^l(w); conjugation fixes v"""
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatchError(f"arguments do not belong to {self!r}")
        total = K.zero
        for w, c in x.coeffs.items():
            if w in y.coeffs:
                total += c * y.coeffs[w] * Z ** length(w)
        return total

    def graded_components(self, x: HeckeElement) -> Dict[int, HeckeElement]:
        """Decomposition by zeta-grade b in Z/s"""
        parts: Dict[int, Coeffs] = defaultdict(dict)
        for w, c in x.coeffs.items():
            parts[w.grade][w] = c
        return {b: HeckeElement(self, coeffs) for b, coeffs in sorted(parts.items())}

    # ---- parsing ----------------------------------------------------------

    _FACTOR = re.compile(r"^(s\d+|pi|zeta)(?:\^(-?\d+))?$")
    _THETA = re.compile(r"^theta\(([^()]*)\)$")

    def parse(self, text: str) -> HeckeElement:
        """
        Parse sums of products like "s1*s2 + [z-1]*pi^-1 + theta(1,0)".
        Factors: generators with optional integer powers, theta(...) and [scalar].
        """
        total = self.zero()
        for term in _split_top(text, "+"):
            product = self.one()
            for factor in _split_top(term, "*"):
                product = product * self._parse_factor(factor.strip())
            total = total + product
        return total

    def _parse_factor(self, factor: str) -> HeckeElement:
        if factor == "1":
            return self.one()
        if factor.startswith("[") and factor.endswith("]"):
            return scalar(factor[1:-1]) * self.one()
        match = self._THETA.match(factor)
        if match:
            return self.theta([Fraction(x.strip()) for x in match.group(1).split(",")])
        match = self._FACTOR.match(factor)
        if not match:
            raise ValueError(f"cannot parse Hecke factor {factor!r}")
        name, power = match.group(1), int(match.group(2) or 1)
        base = self.generator(name) if power > 0 else self.generator_inverse(name)
        result = self.one()
        for _ in range(abs(power)):
            result = result * base
        return result


def _split_top(text: str, sep: str) -> List[str]:
    """Split on sep outside brackets and parentheses"""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    if any(not p.strip() for p in parts):
        raise ValueError(f"empty term in {text!r}")
    return parts
