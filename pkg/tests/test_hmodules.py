"""
Tests for induced modules, irreducibility and reducibility points
"""

from fractions import Fraction

import pytest
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from core.cocycle import CoverParams
from core.errors import (
    BoxOverflowError, ConsistencyError, FlavorMismatchError, InvalidParametersError, ZeroArgumentError,
)
from core.hmodules import (
    CharacterPoint, InducedModule, character_point, generated_algebra_dimension, induce, irreducible,
    one_dim_constituents, proper_submodule, rank_one_point, reducibility_point, spin, verify_relations,
)
from core.scalars import RV, V, Z, scalar
from core.typeparams import TypeParams
from factory import SEED, get_hecke_algebra

TWO = Fraction(2)


def _ratio_point(k):
    """x2 / x1 = z^k"""
    return CharacterPoint((V ** 0, V ** (2 * k)))


def _rows(m):
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in m.to_list()]


def _rational_rows(actions):
    return {name: _rows(m) for name, m in actions.items()}


def test_rank_one_module():
    module = induce(CharacterPoint((3,)), v=TWO)
    assert module.dim == 1
    assert _rational_rows(module.actions) == {"pi": [[3]]}
    assert irreducible(module)
    constituents = one_dim_constituents(module)
    assert [c.kind for c in constituents] == ["sub", "quotient"]
    assert all(c.pi_value == 3 for c in constituents)


def test_symbolic_module_specializes():
    module = induce(CharacterPoint((V ** 0, V ** 4)))
    assert module.v_value is None and module.dim == 2
    assert module.domain == RV and module.actions["s1"].domain == RV
    at_two = induce(CharacterPoint((V ** 0, V ** 4)), v=TWO)
    assert at_two.domain == QQ
    assert _rational_rows(module.rational_actions(TWO)) == _rational_rows(at_two.actions)
    assert at_two.rational_actions() is at_two.actions
    with pytest.raises(InvalidParametersError):
        at_two.rational_actions(Fraction(3))


def test_symbolic_module_document():
    module = induce(CharacterPoint((V ** 0, V ** 4)))
    doc = module.to_dict()
    assert doc["v"] is None and doc["basis"] == [[0, 1], [1, 0]]
    assert all(isinstance(c, str) for row in doc["actions"]["pi"] for c in row)
    assert induce(CharacterPoint((3,)), v=TWO).to_dict()["actions"] == {"pi": [["3"]]}


def test_quadratic_relation_on_module():
    module = induce(CharacterPoint((1, V ** 4)), v=TWO)
    ident = DomainMatrix.eye(2, QQ)
    for name in ("s0", "s1"):
        m = module.actions[name]
        assert ((m - ident * QQ(4)) * (m + ident)).is_zero_matrix
    pi = module.actions["pi"]
    assert _rows(pi * pi) == [[16, 0], [0, 16]]


def test_pi_conjugates_s0_to_last_reflection():
    module = induce(CharacterPoint((1, 3, 7)), v=TWO)
    acts = module.actions
    pi = acts["pi"]
    assert _rows(pi * acts["s0"]) == _rows(acts["s2"] * pi)
    assert _rows(pi * acts["s1"]) == _rows(acts["s0"] * pi)


def test_broken_pi_relation_is_reported():
    module = induce(CharacterPoint((1, 7)), v=TWO)
    acts = dict(module.actions)
    acts["s0"] = acts["s1"]
    broken = InducedModule(module.algebra, module.point, module.labels, acts, module.v_value, module.box)
    with pytest.raises(ConsistencyError) as info:
        verify_relations(broken)
    assert "pi s0 = s1 pi" in info.value.to_dict()["details"]["relations"]


@pytest.mark.parametrize("k", range(-3, 4))
def test_reducible_exactly_when_ratio_is_z_to_plus_minus_one(k):
    module = induce(_ratio_point(k), v=TWO)
    expected = k not in (-1, 1)
    assert irreducible(module) == expected
    assert irreducible(module, method="burnside") == expected
    assert (proper_submodule(module) is None) == expected
    assert (generated_algebra_dimension(module.actions) == 4) == expected


@pytest.mark.parametrize("seed", [0, 1, 5, 1234])
def test_submodule_search_is_reproducible_per_seed(seed):
    module = induce(_ratio_point(-1), v=TWO)
    first = proper_submodule(module, seed=seed)
    assert first is not None and 0 < len(first) < module.dim
    assert proper_submodule(module, seed=seed) == first
    assert len(spin(module.actions, first)) == len(first)
    assert proper_submodule(module) == proper_submodule(module, seed=SEED)


def test_trivial_sub_at_ratio_z():
    module = induce(_ratio_point(1), v=TWO)
    subs = [c for c in one_dim_constituents(module) if c.kind == "sub"]
    quotients = [c for c in one_dim_constituents(module) if c.kind == "quotient"]
    assert [c.sigma_value for c in subs] == [4]
    assert [c.sigma_value for c in quotients] == [-1]


def test_steinberg_sub_at_inverse_ratio():
    module = induce(CharacterPoint((3 * V, 3 / V)), v=TWO)
    constituents = one_dim_constituents(module)
    assert sorted(c.kind for c in constituents) == ["quotient", "sub"]
    assert {c.sigma_value for c in constituents} == {4, -1}
    sub = next(c for c in constituents if c.kind == "sub")
    assert sub.sigma_value == -1 and sub.eigenspace_dimension == 1
    assert sub.to_dict()["eigenspace_dimension"] == 1
    assert sub.pi_value ** 2 == 9
    assert len(spin(module.actions, sub.basis)) == 1


def test_scalar_action_gives_a_plane_without_pi_value():
    H = get_hecke_algebra(2)
    acts = {"s1": DomainMatrix.eye(2, QQ) * QQ(4), "s0": DomainMatrix.eye(2, QQ) * QQ(4),
            "pi": DomainMatrix.from_list([[0, 1], [1, 0]], QQ)}
    module = InducedModule(H, CharacterPoint((1, 1)), [(0, 1), (1, 0)], acts, TWO)
    planes = [c for c in one_dim_constituents(module) if c.sigma_value == 4]
    assert [c.eigenspace_dimension for c in planes] == [2, 2]
    assert all(c.pi_value is None and len(c.basis) == 2 for c in planes)


def test_generic_point_has_no_lines():
    module = induce(CharacterPoint((1, 7)), v=TWO)
    assert irreducible(module)
    assert one_dim_constituents(module) == []


def test_twisted_restriction_matches_affine():
    H = get_hecke_algebra(2, 2, "twisted")
    point = CharacterPoint((Z, Z), zval=Z)
    twisted = induce(point, H, v=TWO)
    affine = induce(CharacterPoint((Z, Z)), v=TWO)
    restricted = twisted.restrict()
    assert restricted.algebra is get_hecke_algebra(2)
    assert _rational_rows(restricted.actions) == _rational_rows(affine.actions)
    assert _rows(twisted.actions["zeta"]) == [[4, 0], [0, 4]]


@pytest.mark.parametrize("k", range(-3, 4))
def test_twisted_reducibility_follows_the_affine_restriction(k):
    # Z^2 = X_1 X_2 = z^k
    H = get_hecke_algebra(2, 2, "twisted")
    twisted = induce(CharacterPoint((V ** 0, V ** (2 * k)), zval=V ** k), H, v=TWO)
    restricted = twisted.restrict()
    affine = induce(_ratio_point(k), v=TWO)
    assert _rational_rows(restricted.actions) == _rational_rows(affine.actions)
    assert _rows(twisted.actions["zeta"]) == [[TWO ** k, 0], [0, TWO ** k]]
    expected = k not in (-1, 1)
    assert irreducible(twisted) == irreducible(restricted) == irreducible(affine) == expected
    assert irreducible(twisted, method="burnside") == expected


def test_rank_three_modules():
    generic = induce(CharacterPoint((1, 3, 7)), v=TWO)
    assert generic.dim == 6
    assert irreducible(generic)
    reducible = induce(CharacterPoint((1, 4, 7)), v=TWO)
    assert not irreducible(reducible)
    with pytest.raises(InvalidParametersError):
        irreducible(generic, method="eigen")


def test_character_point_errors():
    with pytest.raises(ZeroArgumentError):
        CharacterPoint((1, 0))
    with pytest.raises(ZeroArgumentError):
        CharacterPoint((1, 1), zval=0)
    with pytest.raises(InvalidParametersError):
        CharacterPoint((1, 1)).check_for(get_hecke_algebra(3))
    with pytest.raises(FlavorMismatchError):
        CharacterPoint((1, 1)).check_for(get_hecke_algebra(2, 1, "finite"))
    with pytest.raises(InvalidParametersError):
        CharacterPoint((1, 1)).check_for(get_hecke_algebra(2, 2, "twisted"))
    with pytest.raises(InvalidParametersError):
        CharacterPoint((1, 4), zval=3).check_for(get_hecke_algebra(2, 2, "twisted"))


def test_box_cap():
    with pytest.raises(BoxOverflowError):
        induce(CharacterPoint((1, 7)), v=TWO, box_cap=1)


def test_character_point_from_exponents():
    point = character_point([0, Fraction(-1, 2)], 1)
    assert point.x == (scalar(1), V)
    assert character_point([1], 2, unit=3).x == (3 / V ** 4,)
    with pytest.raises(InvalidParametersError):
        character_point([Fraction(1, 3)], 1)
    assert rank_one_point(Fraction(1, 6), 3).x == (scalar(1), Z)
    with pytest.raises(InvalidParametersError):
        rank_one_point(Fraction(1, 8), 1)


def test_theta_values_are_normalized():
    point = CharacterPoint((2, 5, 7))
    assert point.theta_value([1, 0, 0]) == 2 * Z
    assert point.theta_value([0, 1, 0]) == scalar(5)
    assert point.theta_value([0, 0, -1]) == Z / 7


def test_reducibility_points():
    kp = reducibility_point(TypeParams(CoverParams.kp(3), 2, 2, 1, 2))
    assert kp.s_star == Fraction(1, 6) and kp.n0 == 3
    assert [c["reducible"] for c in kp.checks] == [True, False, False]
    savin = reducibility_point(TypeParams(CoverParams.savin(6), 1, None, 3, 2), unit=5)
    assert savin.s_star == Fraction(1, 2)
    assert savin.to_dict()["checks"][0]["ratio_q0_power"] == "1"
