"""
Finite fields F_q stored by discrete logarithm
Addition goes through a Zech table, multiplication is exponent addition
"""

import logging
import random
import sys
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add, gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem, gf_strip,
)

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import (
    ConsistencyError, DegreeMismatchError, FieldMismatchError, FieldTooLargeError,
    InvalidParametersError, NotPrimeError, ZeroArgumentError, ZeroInverseError,
)

logger = logging.getLogger(__name__)

Poly = Tuple[int, ...]


def _key(poly: Sequence) -> Poly:
    return tuple(int(c) for c in gf_strip(list(poly)))


def _digits_to_poly(a: int, p: int) -> List[int]:
    """Base-p digits of a (least significant first) as a descending coefficient list"""
    coeffs = []
    while a:
        coeffs.append(a % p)
        a //= p
    return gf_strip(list(reversed(coeffs)))


class FiniteField:
    """Finite field F_{p^k} with a fixed multiplicative generator"""

    def __init__(self, p: int, k: int, modulus: Sequence[int], powers: Sequence[Poly],
                 label: Optional[str] = None):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = _key(modulus)
        self.label = label or f"F_{self.q}"
        self._exp: List[Poly] = list(powers)
        if len(self._exp) != self.q - 1:
            raise ConsistencyError("power table has the wrong size",
                                   {"expected": self.q - 1, "got": len(self._exp)})
        self._log: Dict[Poly, int] = {poly: e for e, poly in enumerate(self._exp)}
        if len(self._log) != self.q - 1:
            raise ConsistencyError(f"generator of {self.label} is not primitive")
        self._zech: List[Optional[int]] = []
        for poly in self._exp:
            shifted = _key(gf_add(list(poly), [1], p, ZZ))
            self._zech.append(self._log[shifted] if shifted else None)
        self._subfields: Dict[int, "FiniteField"] = {}

    def __repr__(self) -> str:
        return f"FiniteField({self.label}, modulus={list(self.modulus)})"

    # ---- elements -------------------------------------------------------

    @property
    def order(self) -> int:
        """Order of the multiplicative group"""
        return self.q - 1

    @property
    def zero(self) -> "FFElem":
        return FFElem(self, None)

    @property
    def one(self) -> "FFElem":
        return FFElem(self, 0)

    @property
    def generator(self) -> "FFElem":
        return FFElem(self, 1 % self.order)

    @property
    def minus_one(self) -> "FFElem":
        return FFElem(self, self.order // 2 if self.p != 2 else 0)

    def element(self, exponent: int) -> "FFElem":
        return FFElem(self, exponent % self.order)

    def elements(self) -> Iterator["FFElem"]:
        yield self.zero
        for e in range(self.order):
            yield FFElem(self, e)

    def units(self) -> Iterator["FFElem"]:
        for e in range(self.order):
            yield FFElem(self, e)

    def from_poly(self, coeffs: Sequence[int]) -> "FFElem":
        """Element with polynomial-basis coordinates, constant term first"""
        poly = _key(gf_rem(gf_strip([c % self.p for c in reversed(list(coeffs))]), list(self.modulus), self.p, ZZ))
        if not poly:
            return self.zero
        if poly not in self._log:
            raise FieldMismatchError(f"polynomial does not lie in {self.label}", {"coeffs": list(coeffs)})
        return FFElem(self, self._log[poly])

    def to_poly(self, x: "FFElem") -> List[int]:
        """Polynomial-basis coordinates, constant term first, padded to the basis degree"""
        self._check(x)
        width = len(self.modulus) - 1
        if x.exp is None:
            return [0] * width
        coeffs = list(reversed(self._exp[x.exp]))
        return coeffs + [0] * (width - len(coeffs))

    def from_int(self, a: int) -> "FFElem":
        """Element whose base-p digits are its polynomial coordinates (residue a mod p for prime fields)"""
        if self.k == 1 and len(self.modulus) == 2:
            a %= self.p
        return self.from_poly(list(reversed(_digits_to_poly(a, self.p))))

    # ---- arithmetic on exponents ---------------------------------------

    def _check(self, *xs: "FFElem") -> None:
        for x in xs:
            if x.field is not self:
                raise FieldMismatchError(f"element of {x.field.label} used in {self.label}")

    def add(self, x: "FFElem", y: "FFElem") -> "FFElem":
        self._check(x, y)
        if x.exp is None:
            return y
        if y.exp is None:
            return x
        shift = self._zech[(y.exp - x.exp) % self.order]
        if shift is None:
            return self.zero
        return FFElem(self, (x.exp + shift) % self.order)

    def neg(self, x: "FFElem") -> "FFElem":
        self._check(x)
        if x.exp is None:
            return x
        return FFElem(self, (x.exp + self.minus_one.exp) % self.order)

    def mul(self, x: "FFElem", y: "FFElem") -> "FFElem":
        self._check(x, y)
        if x.exp is None or y.exp is None:
            return self.zero
        return FFElem(self, (x.exp + y.exp) % self.order)

    def inv(self, x: "FFElem") -> "FFElem":
        self._check(x)
        if x.exp is None:
            raise ZeroInverseError(f"zero has no inverse in {self.label}")
        return FFElem(self, (-x.exp) % self.order)

    def dlog(self, x: "FFElem") -> int:
        self._check(x)
        if x.exp is None:
            raise ZeroArgumentError(f"discrete log of zero in {self.label}")
        return x.exp

    def zech(self, e: int) -> Optional[int]:
        """Exponent of g^e + 1, None when g^e = -1"""
        return self._zech[e % self.order]

    # ---- derived fields -------------------------------------------------

    def subfield(self, k_sub: int) -> "FiniteField":
        """
        The subfield F_{p^k_sub} with generator N(g) = g^((q-1)/(p^k_sub - 1)).
        Coordinates stay in this field's polynomial basis.
        """
        if k_sub < 1 or self.k % k_sub:
            raise DegreeMismatchError(f"{self.label} has no subfield of degree {k_sub}",
                                      {"k": self.k, "k_sub": k_sub})
        if k_sub == self.k:
            return self
        if k_sub not in self._subfields:
            q_sub = self.p ** k_sub
            step = self.order // (q_sub - 1)
            powers = [self._exp[(e * step) % self.order] for e in range(q_sub - 1)]
            self._subfields[k_sub] = FiniteField(self.p, k_sub, self.modulus, powers,
                                                 label=f"F_{q_sub}<{self.label}")
        return self._subfields[k_sub]

    def rebased(self, j: int) -> "FiniteField":
        """Same field with generator g^j"""
        if gcd(j, self.order) != 1:
            raise InvalidParametersError(f"g^{j} does not generate {self.label}")
        powers = [self._exp[(e * j) % self.order] for e in range(self.order)]
        return FiniteField(self.p, self.k, self.modulus, powers, label=self.label)

    def isomorphism_exponent(self, other: "FiniteField") -> int:
        """
        Smallest j such that g_self^e -> g_other^(e*j) is a field isomorphism.
        Addition is preserved exactly when the Zech tables correspond.
        """
        if (self.p, self.k) != (other.p, other.k):
            raise FieldMismatchError(f"{self.label} and {other.label} are not isomorphic")
        n = self.order
        for j in range(1, n + 1):
            if gcd(j, n) != 1:
                continue
            if all(
                (z is None and other._zech[(e * j) % n] is None)
                or (z is not None and other._zech[(e * j) % n] == (z * j) % n)
                for e, z in enumerate(self._zech)
            ):
                return j
        raise ConsistencyError(f"no isomorphism found between {self.label} and {other.label}")

    # ---- verification ---------------------------------------------------

    def verify(self, samples: int = 100, seed: int = 0) -> None:
        """Spot-check distributivity on random triples"""
        rng = random.Random(seed)
        pool = list(self.elements())
        for _ in range(samples):
            a, b, c = (rng.choice(pool) for _ in range(3))
            if a * (b + c) != a * b + a * c:
                raise ConsistencyError(f"distributivity fails in {self.label}",
                                       {"a": a.exp, "b": b.exp, "c": c.exp})


@dataclass(frozen=True)
class FFElem:
    """Finite field element: ZERO (exp None) or generator**exp"""

    field: FiniteField
    exp: Optional[int]

    def __post_init__(self):
        if self.exp is not None:
            object.__setattr__(self, "exp", self.exp % self.field.order)

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    def __add__(self, other: "FFElem") -> "FFElem":
        return self.field.add(self, other)

    def __sub__(self, other: "FFElem") -> "FFElem":
        return self.field.add(self, self.field.neg(other))

    def __neg__(self) -> "FFElem":
        return self.field.neg(self)

    def __mul__(self, other: "FFElem") -> "FFElem":
        return self.field.mul(self, other)

    def __truediv__(self, other: "FFElem") -> "FFElem":
        return self.field.mul(self, self.field.inv(other))

    def __pow__(self, k: int) -> "FFElem":
        if self.exp is None:
            if k <= 0:
                raise ZeroInverseError("zero raised to a non-positive power")
            return self
        return FFElem(self.field, self.exp * k)

    def inverse(self) -> "FFElem":
        return self.field.inv(self)

    def dlog(self) -> int:
        return self.field.dlog(self)

    def __repr__(self) -> str:
        return f"{self.field.label}(0)" if self.exp is None else f"{self.field.label}(g^{self.exp})"


# Module-level operations

def add(x: FFElem, y: FFElem) -> FFElem:
    return x.field.add(x, y)


def mul(x: FFElem, y: FFElem) -> FFElem:
    return x.field.mul(x, y)


def neg(x: FFElem) -> FFElem:
    return x.field.neg(x)


def inv(x: FFElem) -> FFElem:
    return x.field.inv(x)


def dlog(x: FFElem) -> int:
    return x.field.dlog(x)


def _first_irreducible(p: int, k: int) -> List[int]:
    lower = [0] * k
    for _ in range(p ** k):
        candidate = [1] + lower
        if gf_irreducible_p(candidate, p, ZZ):
            return candidate
        # next coefficient vector, last entry varies fastest
        i = k - 1
        while i >= 0:
            lower[i] += 1
            if lower[i] < p:
                break
            lower[i] = 0
            i -= 1
    raise ConsistencyError(f"no irreducible polynomial of degree {k} over F_{p}")


def _first_primitive(p: int, k: int, modulus: List[int]) -> List[int]:
    q = p ** k
    primes = list(factorint(q - 1))
    for a in range(1, q):
        g = _digits_to_poly(a, p)
        if all(_key(gf_pow_mod(g, (q - 1) // ell, modulus, p, ZZ)) != (1,) for ell in primes):
            return g
    raise ConsistencyError(f"no primitive element in F_{q}")


def make_field(p: int, k: int = 1, max_q: Optional[int] = None, seed: int = 0) -> FiniteField:
    """Build F_{p^k} with a verified primitive generator and Zech table"""
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime", {"p": p})
    if k < 1:
        raise InvalidParametersError("extension degree must be positive", {"k": k})
    if max_q is None:
        from factory import MAX_Q
        max_q = MAX_Q
    q = p ** k
    if q > max_q:
        raise FieldTooLargeError(f"q = {q} exceeds the configured bound {max_q}",
                                 {"q": q, "max_q": max_q})

    modulus = _first_irreducible(p, k)
    g = _first_primitive(p, k, modulus)
    powers = []
    x = [1]
    for _ in range(q - 1):
        powers.append(_key(x))
        x = gf_rem(gf_mul(x, g, p, ZZ), modulus, p, ZZ)
    if _key(x) != (1,):
        raise ConsistencyError(f"generator order check failed for F_{q}")

    field = FiniteField(p, k, modulus, powers)
    field.verify(seed=seed)
    logger.debug("built %r with generator %s", field, list(reversed(g)))
    return field
