"""
Tests for the Iwahori-Matsumoto presentation of the Hecke algebras
"""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from core.errors import AlgebraMismatchError, FlavorMismatchError, InvalidParametersError
from core.hecke import HeckeAlgebra
from core.scalars import Z, scalar
from core.weyl import (
    TwistedAffineWeylElem, all_perms, cayley_ball, length, permutation_element, pi_element, reduced_word,
    translation,
)
from factory import get_hecke_algebra

AFFINE_2 = get_hecke_algebra(2)
TWISTED_2 = get_hecke_algebra(2, 2, "twisted")
AFFINE_3 = get_hecke_algebra(3)
TWISTED_3 = get_hecke_algebra(3, 2, "twisted")

# (t, s) grid; s = 1 is the affine algebra
RANKS = [(3, 1), (3, 2), (4, 1), (4, 3)]


def _basis_pool(H, radius=2):
    if H.flavor == "finite":
        return [permutation_element(sigma, H.s) for sigma in all_perms(H.t)]
    pool = []
    pi = pi_element(H.t, H.s)
    for w in cayley_ball(H.t, radius, H.s):
        for a in (-1, 0, 1):
            pool.append((pi ** a) * w)
    if H.flavor == "twisted":
        pool += [H.weyl_generator("zeta") * w for w in list(pool)[:6]]
    return pool


@st.composite
def hecke_elements(draw, H, radius=2):
    pool = _basis_pool(H, radius)
    terms = draw(st.lists(st.tuples(st.sampled_from(pool), st.integers(-2, 2).filter(bool)),
                          min_size=1, max_size=3))
    x = H.zero()
    for w, c in terms:
        x = x + c * H.basis_elem(w)
    return x


@pytest.mark.parametrize("H", [AFFINE_2, get_hecke_algebra(3), TWISTED_2, get_hecke_algebra(3, 3, "twisted")])
def test_quadratic_relation(H):
    one = H.one()
    for name in H.generator_names():
        if not name.startswith("s"):
            continue
        g = H.generator(name)
        assert g * g == one * Z + g * (Z - 1)
        assert H.generator_inverse(name) * g == one
        assert g * H.generator_inverse(name) == one


def test_quadratic_relation_text_form():
    square = AFFINE_2.parse("s1*s1")
    texts = sorted(term["coeff"]["text"] for term in square.to_list())
    assert texts == ["z", "z-1"]


def test_finite_algebra():
    H = get_hecke_algebra(3, 1, "finite")
    assert H.generator_names() == ["s1", "s2"]
    s1, s2 = H.generator("s1"), H.generator("s2")
    assert s1 * s2 * s1 == s2 * s1 * s2
    with pytest.raises(FlavorMismatchError):
        H.theta([1, 0, 0])
    with pytest.raises(FlavorMismatchError):
        H.generator("pi")


def test_pi_conjugates_simple_reflections():
    H = AFFINE_2
    pi, pi_inv = H.generator("pi"), H.generator_inverse("pi")
    assert pi * H.generator("s1") * pi_inv == H.generator("s0")
    assert pi * H.generator("s0") * pi_inv == H.generator("s1")


@pytest.mark.parametrize("t,s", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_pi_power_is_zeta_power(t, s):
    H = get_hecke_algebra(t, s, "twisted")
    assert H.generator("pi") ** t == H.generator("zeta") ** s


def _algebra(t, s):
    return get_hecke_algebra(t, s, "affine" if s == 1 else "twisted")


def _embed(x, H):
    """Image of an element of H(t) in the twisted algebra H"""
    out = H.zero()
    for w, c in x.coeffs.items():
        out = out + H.basis_elem(TwistedAffineWeylElem(H.s, tuple(a * H.s for a in w.num), w.perm)) * c
    return out


@pytest.mark.parametrize("t,s", RANKS)
def test_zeta_and_pi_power_are_central(t, s):
    H = _algebra(t, s)
    central = [H.generator("pi") ** t]
    if s > 1:
        central.append(H.generator("zeta"))
    for c in central:
        for name in H.generator_names():
            g = H.generator(name)
            assert c * g == g * c


@pytest.mark.parametrize("t,s", RANKS)
def test_affine_braid_relations(t, s):
    H = _algebra(t, s)
    gens = [H.generator(f"s{i}") for i in range(t)]
    for i in range(t):
        for j in range(i + 1, t):
            a, b = gens[i], gens[j]
            if (j - i) % t in (1, t - 1):
                assert a * b * a == b * a * b
            else:
                assert a * b == b * a


@pytest.mark.parametrize("t,s", RANKS)
def test_pi_conjugation_cycles_all_reflections(t, s):
    H = _algebra(t, s)
    pi, pi_inv = H.generator("pi"), H.generator_inverse("pi")
    for i in range(t):
        assert pi * H.generator(f"s{i}") * pi_inv == H.generator(f"s{(i - 1) % t}")


@pytest.mark.parametrize("H", [get_hecke_algebra(3, 1, "finite"), get_hecke_algebra(4, 1, "finite"),
                               AFFINE_3, get_hecke_algebra(4)])
@settings(max_examples=30)
@given(data=st.data())
def test_associativity(H, data):
    x, y, w = (data.draw(hecke_elements(H)) for _ in range(3))
    assert (x * y) * w == x * (y * w)


@pytest.mark.parametrize("t,s", [(t, s) for t, s in RANKS if s > 1])
@settings(max_examples=25)
@given(data=st.data())
def test_affine_algebra_embeds_in_twisted(t, s, data):
    H, H_tw = get_hecke_algebra(t), get_hecke_algebra(t, s, "twisted")
    x = data.draw(hecke_elements(H))
    y = data.draw(hecke_elements(H))
    assert _embed(x * y, H_tw) == _embed(x, H_tw) * _embed(y, H_tw)
    assert set(H_tw.graded_components(_embed(x, H_tw))) <= {0}


@pytest.mark.parametrize("t,s", [(t, s) for t, s in RANKS if s > 1])
@settings(max_examples=25)
@given(data=st.data())
def test_graded_components_multiply_consistently(t, s, data):
    H = get_hecke_algebra(t, s, "twisted")
    x = data.draw(hecke_elements(H))
    y = data.draw(hecke_elements(H))
    px, py = H.graded_components(x), H.graded_components(y)
    expected = {}
    for bx, part_x in px.items():
        for by, part_y in py.items():
            b = (bx + by) % s
            expected[b] = expected.get(b, H.zero()) + part_x * part_y
    product_parts = H.graded_components(x * y)
    for b in range(s):
        assert product_parts.get(b, H.zero()) == expected.get(b, H.zero())


@pytest.mark.parametrize("t", [2, 3])
def test_hermitian_form_on_basis(t):
    H = get_hecke_algebra(t)
    ball = list(cayley_ball(t, 5))
    for w in ball:
        assert H.hermitian_form(H.basis_elem(w), H.basis_elem(w)) == Z ** length(w)
    for w, u in zip(ball, ball[1:]):
        assert not H.hermitian_form(H.basis_elem(w), H.basis_elem(u))


def test_theta_in_terms_of_generators():
    H = AFFINE_2
    assert H.theta([1, 0]) == H.generator("s1") * H.generator("pi")
    assert H.theta([0, 1]) == H.generator("pi") * H.generator_inverse("s1")
    assert H.theta([1, 1]) == H.basis_elem(translation([1, 1]))
    assert H.theta([0, 0]) == H.one()


def test_theta_multiplicative_rank_two():
    H = AFFINE_2
    box = list(product(range(-2, 3), repeat=2))
    for lam in box:
        for mu in box:
            total = [a + b for a, b in zip(lam, mu)]
            assert H.theta(lam) * H.theta(mu) == H.theta(total)


@settings(max_examples=40)
@given(st.lists(st.integers(-2, 2), min_size=3, max_size=3),
       st.lists(st.integers(-2, 2), min_size=3, max_size=3))
def test_theta_multiplicative_rank_three(lam, mu):
    H = get_hecke_algebra(3)
    total = [a + b for a, b in zip(lam, mu)]
    assert H.theta(lam) * H.theta(mu) == H.theta(total) == H.theta(mu) * H.theta(lam)


def test_translation_basis_elements_do_not_commute():
    H = AFFINE_2
    x, y = H.basis_elem(translation([1, 0])), H.basis_elem(translation([0, 1]))
    assert x * y != y * x
    assert H.theta([1, 0]) * H.theta([0, 1]) == H.theta([0, 1]) * H.theta([1, 0])


def test_theta_does_not_depend_on_dominant_split():
    H = AFFINE_2
    assert H.theta([0, 1]) == H.theta([0, 1], nu=[2, 0]) == H.theta([0, 1], nu=[3, 1])


def test_twisted_theta_with_fractional_translation():
    H = TWISTED_2
    half = ["1/2", "1/2"]
    assert H.theta(half) == H.generator("zeta")
    assert H.theta(half) * H.theta([1, 0]) == H.theta(["3/2", "1/2"])
    with pytest.raises(InvalidParametersError):
        AFFINE_2.theta(half)


@pytest.mark.parametrize("H", [AFFINE_3, TWISTED_3])
def test_radius_three_pool_has_elements_with_two_reduced_words(H):
    ambiguous = [w for w in _basis_pool(H, radius=3)
                 if reduced_word(w, "smallest") != reduced_word(w, "largest")]
    assert ambiguous
    x = H.generator("s1") + H.generator("pi") * Z
    if H.flavor == "twisted":
        x = x + 2 * H.generator("zeta")
    for u in ambiguous:
        y = H.basis_elem(u)
        assert H.multiply(x, y, "smallest") == H.multiply(x, y, "largest")
        assert H.multiply(y, x, "smallest") == H.multiply(y, x, "largest")


@settings(max_examples=100)
@given(hecke_elements(AFFINE_2), hecke_elements(AFFINE_2))
def test_product_independent_of_reduced_word(x, y):
    H = AFFINE_2
    assert H.multiply(x, y, "smallest") == H.multiply(x, y, "largest")


@pytest.mark.parametrize("H", [AFFINE_3, TWISTED_3])
@settings(max_examples=40)
@given(data=st.data())
def test_product_independent_of_reduced_word_rank_three(H, data):
    x = data.draw(hecke_elements(H, radius=3))
    y = data.draw(hecke_elements(H, radius=3))
    assert H.multiply(x, y, "smallest") == H.multiply(x, y, "largest")


@settings(max_examples=200)
@given(hecke_elements(TWISTED_2), hecke_elements(TWISTED_2), hecke_elements(TWISTED_2))
def test_associativity_twisted(x, y, w):
    assert (x * y) * w == x * (y * w)


@settings(max_examples=30)
@given(hecke_elements(AFFINE_2), hecke_elements(AFFINE_2), hecke_elements(AFFINE_2))
def test_distributivity(x, y, w):
    assert x * (y + w) == x * y + x * w


def test_parse():
    H = AFFINE_2
    assert H.parse("theta(1,0)*theta(0,1)") == H.basis_elem(translation([1, 1]))
    assert H.parse("[z-1]*pi^-1 + 1") == H.generator_inverse("pi") * (Z - 1) + H.one()
    assert H.parse("s1^-1") == H.generator_inverse("s1")
    assert H.parse("[v^2]*s0") == H.parse("[z]*s0") == H.generator("s0") * Z
    for bad in ("", "s1*", "s1**s0", "q1"):
        with pytest.raises(ValueError):
            H.parse(bad)
    with pytest.raises(FlavorMismatchError):
        H.parse("s7")
    with pytest.raises(FlavorMismatchError):
        H.parse("zeta")


def test_graded_components():
    H = TWISTED_2
    x = H.one() + 3 * H.generator("zeta") + H.generator("s1")
    parts = H.graded_components(x)
    assert sorted(parts) == [0, 1]
    assert parts[0] == H.one() + H.generator("s1")
    assert parts[1] == 3 * H.generator("zeta")


def test_mixing_algebras_fails():
    with pytest.raises(AlgebraMismatchError):
        AFFINE_2.one() + TWISTED_2.one()
    with pytest.raises(AlgebraMismatchError):
        AFFINE_2.multiply(AFFINE_2.one(), get_hecke_algebra(3).one())


def test_scalar_coercion():
    assert scalar("z") == Z
    assert AFFINE_2.one() * scalar(2) == AFFINE_2.parse("[2]")
    with pytest.raises(FlavorMismatchError):
        HeckeAlgebra(2, 2, "affine")
