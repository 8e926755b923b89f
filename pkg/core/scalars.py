"""
Scalars of the Hecke algebras: rational functions in v over the integers, z = v^2
"""

import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Union

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.fields import field

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import InvalidParametersError, SpecializationPoleError

K, V = field("v", ZZ)
# matrix domain over Q(v)
RV = K.to_domain()
Z = V ** 2

Scalar = type(V)

_v, _z = sympy.symbols("v z")


def from_fraction(x: Union[int, Fraction]) -> Scalar:
    x = Fraction(x)
    return K(x.numerator) / K(x.denominator)


def scalar(x) -> Scalar:
    """Coerce ints, Fractions, strings and scalars into K"""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return from_fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise InvalidParametersError(f"cannot interpret {x!r} as a scalar")


def _poly_to_scalar(expr) -> Scalar:
    poly = sympy.Poly(expr, _v, domain="QQ")
    result = K.zero
    for (k,), coeff in poly.terms():
        result += from_fraction(Fraction(int(coeff.p), int(coeff.q))) * V ** k
    return result


def parse_scalar(text: str) -> Scalar:
    """Parse an expression in v and z such as "z-1", "v^3/(z+1)" or "3/5" """
    try:
        expr = sympy.sympify(text, locals={"v": _v, "z": _z})
    except (sympy.SympifyError, SyntaxError, TypeError) as e:
        raise ValueError(f"unparsable scalar {text!r}: {e}") from e
    expr = sympy.together(expr.subs(_z, _v ** 2))
    if expr.free_symbols - {_v}:
        raise ValueError(f"scalar {text!r} uses symbols other than v and z")
    numer, denom = sympy.fraction(expr)
    if denom == 0:
        raise ValueError(f"scalar {text!r} has a zero denominator")
    return _poly_to_scalar(sympy.expand(numer)) / _poly_to_scalar(sympy.expand(denom))


def _coeffs(poly) -> List[int]:
    """Ascending coefficient list of a polynomial in v"""
    terms = dict((m[0], int(c)) for m, c in poly.terms())
    if not terms:
        return [0]
    return [terms.get(k, 0) for k in range(max(terms) + 1)]


def _even(poly) -> bool:
    return all(m[0] % 2 == 0 for m, _ in poly.terms())


def format_scalar(x: Scalar) -> str:
    """Human form, written in z when only even powers of v occur"""
    expr = x.as_expr()
    if _even(x.numer) and _even(x.denom):
        expr = sympy.together(expr.subs(_v, sympy.sqrt(_z)))
    return str(expr).replace("**", "^").replace(" ", "")


def scalar_to_dict(x: Scalar) -> Dict:
    return {"num": _coeffs(x.numer), "den": _coeffs(x.denom), "text": format_scalar(x)}


def _evaluate(poly, value: Fraction) -> Fraction:
    return sum((Fraction(int(c)) * value ** m[0] for m, c in poly.terms()), Fraction(0))


def specialize(x: Scalar, value: Union[int, Fraction]) -> Fraction:
    """Evaluate at v = value"""
    value = Fraction(value)
    denom = _evaluate(x.denom, value)
    if denom == 0:
        raise SpecializationPoleError(f"{format_scalar(x)} has a pole at v = {value}",
                                      {"v": str(value)})
    return _evaluate(x.numer, value) / denom
