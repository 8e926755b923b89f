"""
metahecke
Exact computer algebra for tame metaplectic covers of GL_r and their Hecke algebras
"""

__version__ = "1.0.0"
__author__ = "metahecke developers"
__description__ = "Hilbert symbols, cocycles, twisted affine Hecke algebras and induced modules"
