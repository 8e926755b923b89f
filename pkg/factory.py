# factory.py

"""
Configuration and factory methods for shared resources like
finite fields, local fields and Hecke algebras.
"""

import os
from fractions import Fraction
from functools import lru_cache

from dotenv import load_dotenv
load_dotenv()
# ----------------------------------------------------------------
# Global/Environment Config (override with a .env file)
# ----------------------------------------------------------------

MAX_Q = int(os.getenv("METAHECKE_MAX_Q", str(2 ** 16)))
SEED = int(os.getenv("METAHECKE_SEED", "0"))
SPECIALIZE_V = Fraction(os.getenv("METAHECKE_SPECIALIZE_V", "2"))
BOX_CAP = int(os.getenv("METAHECKE_BOX_CAP", "8"))
SCAN_CAP = int(os.getenv("METAHECKE_SCAN_CAP", "24"))
WORKERS = int(os.getenv("METAHECKE_WORKERS", "1"))


def get_finite_field(p: int, k: int = 1):
    """
    Return the finite field F_{p^k}, built once per (p, k).
    Construction scans for an irreducible polynomial and a primitive
    element and fills the Zech table, so sharing the instance matters.
    """
    return _finite_field(p, k)


@lru_cache(maxsize=None)
def _finite_field(p: int, k: int):
    from core.ffield import make_field
    return make_field(p, k, max_q=MAX_Q, seed=SEED)


@lru_cache(maxsize=None)
def get_local_field(p: int, k: int, n: int):
    """Return the tame local field with residue field F_{p^k} and symbol degree n."""
    from core.hilbert import LocalField
    return LocalField(get_finite_field(p, k), n)


def get_hecke_algebra(t: int, s: int = 1, flavor: str = "affine"):
    """Return the Hecke algebra H0(t,z), H(t,z) or H~(t,s,z)."""
    return _hecke_algebra(t, s, flavor)


@lru_cache(maxsize=None)
def _hecke_algebra(t: int, s: int, flavor: str):
    from core.hecke import HeckeAlgebra
    return HeckeAlgebra(t, s, flavor)
