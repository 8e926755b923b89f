"""
Tests for tame local fields and the n-th Hilbert symbol
"""

from itertools import product

import pytest

from core.errors import ConsistencyError, DegreeMismatchError, FieldMismatchError, ModulusMismatchError
from core.hilbert import LocalField, MuN, hilbert_symbol, hilbert_symbol_unramified, one_minus, tame_symbol
from factory import get_finite_field, get_local_field

VALUATIONS = range(-2, 3)
RESIDUES = [(5, 1), (7, 1), (3, 2)]


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def _elements(K):
    return [K.element(v, e) for v in VALUATIONS for e in range(K.residue.order)]


@pytest.mark.parametrize("p,k", RESIDUES)
def test_bimultiplicativity_exhaustive(p, k):
    F = get_finite_field(p, k)
    K = get_local_field(p, k, F.order)
    elems = _elements(K)
    for x1, x2, y in product(elems, elems, elems[::3]):
        assert hilbert_symbol(x1 * x2, y, K) == hilbert_symbol(x1, y, K) + hilbert_symbol(x2, y, K)
        assert hilbert_symbol(y, x1 * x2, K) == hilbert_symbol(y, x1, K) + hilbert_symbol(y, x2, K)


@pytest.mark.parametrize("p,k", RESIDUES)
def test_symbol_laws_for_every_n(p, k):
    F = get_finite_field(p, k)
    for n in _divisors(F.order):
        K = get_local_field(p, k, n)
        elems = _elements(K)
        for x in elems:
            for y in elems:
                assert (hilbert_symbol(x, y, K) + hilbert_symbol(y, x, K)).is_trivial
                assert hilbert_symbol(x, y ** n, K).is_trivial
                if x.is_unit and y.is_unit:
                    assert hilbert_symbol(x, y, K).is_trivial
            if x.valuation != 0 or x.unit != F.one:
                assert hilbert_symbol(x, one_minus(x, K), K).is_trivial


@pytest.mark.parametrize("p,k", RESIDUES)
def test_symbol_reduces_from_q_minus_one(p, k):
    F = get_finite_field(p, k)
    full = get_local_field(p, k, F.order)
    for n in _divisors(F.order):
        K = get_local_field(p, k, n)
        for x, y in product(_elements(K)[::2], _elements(K)[::5]):
            assert hilbert_symbol(x, y, K).e == hilbert_symbol(x, y, full).e % n


def test_reference_values(k7):
    g = k7.element(0, 1)
    assert hilbert_symbol(k7.uniformizer, g, k7) == MuN(6, 5)
    assert hilbert_symbol(g, k7.uniformizer, k7) == MuN(6, 1)
    # (varpi, varpi) = (varpi, -1)
    assert hilbert_symbol(k7.uniformizer, k7.uniformizer, k7) == MuN(6, 3)
    assert tame_symbol(k7.uniformizer, k7.uniformizer, k7) == k7.residue.minus_one


def test_quadratic_symbol_at_p5():
    K = get_local_field(5, 1, 2)
    two = K.unit(K.residue.from_int(2))
    # 2 is not a square mod 5, so (varpi, 2)_2 = -1
    assert hilbert_symbol(K.uniformizer, two, K) == MuN(2, 1)
    assert hilbert_symbol(K.uniformizer, K.unit(K.residue.from_int(4)), K).is_trivial


def test_mu_n_value_in_residue(k7):
    zeta = MuN(6, 1).value_in(k7.residue)
    assert zeta == k7.residue.generator
    assert MuN(2, 1).value_in(k7.residue) == k7.residue.minus_one


def test_unramified_symbol_routes_agree():
    F = get_local_field(5, 1, 4)
    for f in (2, 3):
        E = F.unramified_extension(f)
        for x, y in product(_elements(F)[::3], _elements(E)[:: max(1, E.residue.order // 7)]):
            symbol = hilbert_symbol_unramified(x, y, f, F)
            assert symbol == hilbert_symbol(x, E.norm(y), F)


def test_unramified_embedding_is_compatible():
    F = get_local_field(3, 1, 2)
    E = F.unramified_extension(2)
    for a, b in product(F.residue.units(), F.residue.units()):
        lhs = E.embed(F.unit(a + b)) if not (a + b).is_zero else None
        if lhs is not None:
            assert lhs.unit == E.embed(F.unit(a)).unit + E.embed(F.unit(b)).unit
    assert E.norm(E.embed(F.element(1, 1))) == F.element(1, 1) ** 2


def test_ramified_extension_norm_and_embed(k7):
    E = k7.ramified_extension(2)
    assert E.embed(k7.uniformizer) == E.element(2, 0)
    # N(varpi_E) = -varpi_F for x^2 - varpi_F
    assert E.norm(E.uniformizer) == k7.element(1, 3)
    for y in _elements(E):
        for x in _elements(k7)[::4]:
            assert hilbert_symbol(E.embed(x), y, E) == hilbert_symbol(x, E.norm(y), k7)


def test_errors(k7):
    with pytest.raises(ModulusMismatchError):
        LocalField(get_finite_field(7, 1), 4)
    with pytest.raises(DegreeMismatchError):
        F = get_local_field(5, 1, 4)
        hilbert_symbol_unramified(F.uniformizer, F.uniformizer, 2, F)
    with pytest.raises(FieldMismatchError):
        hilbert_symbol(k7.uniformizer, get_local_field(5, 1, 2).uniformizer, k7)


def test_consistency_error_is_never_raised_on_grid():
    F = get_local_field(7, 1, 3)
    E = F.unramified_extension(2)
    try:
        for y in _elements(E):
            hilbert_symbol_unramified(F.uniformizer, y, 2, F)
    except ConsistencyError as e:  # pragma: no cover
        pytest.fail(f"routes disagree: {e.details}")
