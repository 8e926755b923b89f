#!/usr/bin/env python3
"""
metahecke Demo
Walks through symbols, lattices, Hecke products and a reducibility point
"""

import sys
from fractions import Fraction
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from core.cocycle import CoverParams
from core.hmodules import CharacterPoint, induce, irreducible, one_dim_constituents, reducibility_point
from core.hilbert import hilbert_symbol
from core.scalars import V
from core.typeparams import TypeParams, invariants_n0_d0_s0, solve_congruence, w0_equals_w0prime
from factory import get_hecke_algebra, get_local_field


def demo_hilbert():
    """Tame Hilbert symbols over a field with residue field F_7"""
    print("=== Hilbert Symbol Demo ===")
    F = get_local_field(7, 1, 6)
    pairs = [(F.uniformizer, F.element(0, 1)), (F.element(1, 2), F.element(-1, 3)),
             (F.element(0, 2), F.element(0, 5))]
    for x, y in pairs:
        print(f"  ({x.to_dict()}, {y.to_dict()})_6 = zeta^{hilbert_symbol(x, y, F).e}")


def demo_lattices():
    """Congruence lattices and the invariants n0, d0, s0"""
    print("\n=== Congruence Lattice Demo ===")
    print(f"  n=4, c=0, d=1, l=(1,1), r=(1,1): {solve_congruence(4, 0, 1, [1, 1], [1, 1]).basis}")
    for P in (TypeParams(CoverParams.savin(6), 1, None, 3, 2),
              TypeParams(CoverParams.kp(3), 2, 2, 1, 2)):
        n0, d0, s0 = invariants_n0_d0_s0(P)
        equal, index = w0_equals_w0prime(P)
        print(f"  {P.to_dict()}: n0={n0}, d0={d0}, s0={s0}, W0 = W0' {equal} (index {index})")


def demo_hecke():
    """Products in the Iwahori-Matsumoto basis"""
    print("\n=== Hecke Algebra Demo ===")
    H = get_hecke_algebra(2)
    for text in ("s1*s1", "pi*s1*pi^-1", "theta(1,0)*theta(0,1)"):
        print(f"  {text} = {H.parse(text)}")


def demo_modules():
    """Induced modules around the reducibility locus"""
    print("\n=== Induced Module Demo ===")
    v = Fraction(2)
    for k in range(-2, 3):
        module = induce(CharacterPoint((V ** 0, V ** (2 * k))), v=v)
        print(f"  x2/x1 = z^{k}: irreducible = {irreducible(module)}")
    special = induce(CharacterPoint((3 * V, 3 / V)), v=v)
    for c in one_dim_constituents(special):
        print(f"  point (3v, 3/v): {c.kind} with [s_i] -> {c.sigma_value}")
    report = reducibility_point(TypeParams(CoverParams.kp(3), 2, 2, 1, 2))
    print(f"  KP n=3, r0=2: s* = {report.s_star}, witnesses {report.checks}")


def main():
    """Run the complete demo"""
    print("metahecke Demo")
    print("=" * 50)

    demo_hilbert()
    demo_lattices()
    demo_hecke()
    demo_modules()

    print("\n" + "=" * 50)
    print("Demo completed!")
    print("\nCLI: python cli.py params --cover savin --n 6 --l0 3 --r0 1 --t 2")
    print("API: python main.py, then POST to /api/v1/params")


if __name__ == "__main__":
    main()
