"""
Tests for cocycle and commutator formulas
"""

import random

import pytest
from sympy import isprime

from core.cocycle import (
    Block, BlockTorusElem, CoverParams, LeviDetData, block_correction, chi_h, chi_h_exponents,
    commutator_center, commutator_diagonal, commutator_field_torus, commutator_levi,
    commutator_levi_expanded, sigma_block_diagonal, sigma_det,
)
from core.errors import BlockMismatchError, ModulusMismatchError, NonUnitDeterminantError
from core.hilbert import MuN, hilbert_symbol
from core.typeparams import solve_congruence
from factory import get_local_field


def _prime_for(n):
    p = n + 1
    while not (isprime(p) and (p - 1) % n == 0):
        p += 1
    return p


def _random_elem(K, rng, lo=-2, hi=2):
    return K.element(rng.randint(lo, hi), rng.randrange(K.residue.order))


@pytest.mark.parametrize("n", range(1, 9))
def test_diagonal_expansion_matches_field_torus(n):
    rng = random.Random(n)
    K = get_local_field(_prime_for(n), 1, n)
    for _ in range(1000):
        P = CoverParams(n, rng.randrange(n), rng.randrange(n))
        t = rng.randint(1, 3)
        xs = [_random_elem(K, rng) for _ in range(t)]
        ys = [_random_elem(K, rng) for _ in range(t)]
        u = BlockTorusElem(K, [Block(1, True, x) for x in xs])
        v = BlockTorusElem(K, [Block(1, True, y) for y in ys])
        assert commutator_diagonal(xs, ys, P, K) == commutator_field_torus(u, v, P)


def _mixed_shape(rng):
    return rng.sample([(1, True), (2, True), (2, False), (3, False)], 3)


def test_levi_forms_agree_on_mixed_blocks():
    rng = random.Random(7)
    K = get_local_field(5, 1, 4)
    for _ in range(200):
        P = CoverParams(4, rng.randrange(4), rng.randrange(4))
        shape = _mixed_shape(rng)
        u = BlockTorusElem(K, [Block(d, un, _random_elem(K.extension(d, un), rng)) for d, un in shape])
        v = LeviDetData(K, [Block(d, un, _random_elem(K.extension(d, un), rng)) for d, un in shape])
        assert commutator_levi(u, v, P) == commutator_levi_expanded(u, v, P)


def test_field_torus_antisymmetric_and_bimultiplicative():
    rng = random.Random(3)
    K = get_local_field(7, 1, 6)
    for _ in range(300):
        P = CoverParams(6, rng.randrange(6), rng.randrange(6))
        shape = [(1, True), (2, True), (2, False)]
        def torus():
            return [_random_elem(K.extension(d, un), rng) for d, un in shape]
        a, b, c = torus(), torus(), torus()
        make = lambda xs: BlockTorusElem(K, [Block(d, un, x) for (d, un), x in zip(shape, xs)])
        ab = [x * y for x, y in zip(a, b)]
        assert (commutator_field_torus(make(a), make(c), P)
                + commutator_field_torus(make(c), make(a), P)).is_trivial
        assert commutator_field_torus(make(ab), make(c), P) == (
            commutator_field_torus(make(a), make(c), P) + commutator_field_torus(make(b), make(c), P))


def test_center_commutator_collapses_to_2c_for_rank_one(k7):
    rng = random.Random(11)
    for _ in range(200):
        P = CoverParams(6, rng.randrange(6), rng.randrange(6))
        lam, det = _random_elem(k7, rng), _random_elem(k7, rng)
        assert commutator_center(lam, det, 1, P, k7) == 2 * P.c * hilbert_symbol(lam, det, k7)
        assert commutator_center(lam, det, 1, P, k7) == commutator_diagonal([lam], [det], P, k7)
        assert commutator_center(lam, det, 3, P, k7) == (3 * P.twist - P.d) * hilbert_symbol(lam, det, k7)


def test_sigma_det_and_block_correction(k7):
    P = CoverParams(6, 2, 1)
    a1, a2 = k7.element(1, 0), k7.element(0, 1)
    b1, b2 = k7.element(0, 2), k7.element(1, 1)
    assert sigma_det(a1, b1, P, k7) == 2 * hilbert_symbol(a1, b1, k7)
    expected = 3 * hilbert_symbol(a1, b2, k7) + 2 * hilbert_symbol(a2, b1, k7)
    assert block_correction([a1, a2], [b1, b2], P, k7) == expected
    per_block = [MuN(6, 1), MuN(6, 2)]
    assert sigma_block_diagonal(per_block, [a1, a2], [b1, b2], P, k7) == MuN(6, 3) + expected


def test_chi_h_vanishes_exactly_on_congruence_lattice(k7):
    E = k7
    units = [E.element(0, e) for e in range(E.residue.order)]
    for c, d in [(0, 1), (5, 2), (1, 3)]:
        P = CoverParams(6, c, d)
        lattice = solve_congruence(6, c, d, [1, 1], [2, 2])
        for s1 in range(-3, 4):
            for s2 in range(-3, 4):
                s = [s1, s2]
                vanishes = all(chi_h(s, [g1, g2], 2, P, E).is_trivial for g1 in units for g2 in units)
                assert vanishes == (s in lattice)
                assert vanishes == all(x == 0 for x in chi_h_exponents(s, 2, P))


def test_chi_h_reference_value():
    K = get_local_field(5, 1, 4)
    P = CoverParams(4, 0, 1)
    g = [K.element(0, 1), K.element(0, 0)]
    # exponents for s = (1, 0), r0 = 1: (1 - 1, 1 - 0) = (0, 1)
    assert chi_h_exponents([1, 0], 1, P) == [0, 1]
    assert chi_h([1, 0], g, 1, P, K).is_trivial
    assert chi_h([1, 0], g[::-1], 1, P, K) == hilbert_symbol(K.uniformizer, K.element(0, 1), K)


def test_errors(k7):
    P = CoverParams(4, 0, 1)
    with pytest.raises(ModulusMismatchError):
        sigma_det(k7.uniformizer, k7.uniformizer, P, k7)
    Q = CoverParams(6, 0, 1)
    u = BlockTorusElem(k7, [Block(1, True, k7.uniformizer)])
    v = BlockTorusElem(k7, [Block(2, False, k7.ramified_extension(2).uniformizer)])
    with pytest.raises(BlockMismatchError):
        commutator_field_torus(u, v, Q)
    with pytest.raises(NonUnitDeterminantError):
        chi_h([1], [k7.uniformizer], 1, Q, k7)
    with pytest.raises(BlockMismatchError):
        BlockTorusElem(k7, [Block(2, True, k7.uniformizer)])
