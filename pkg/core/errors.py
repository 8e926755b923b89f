"""
Domain exceptions for metahecke
Every error carries a stable code so the CLI and the API can report it as JSON
"""

from typing import Any, Dict, Optional


class MetaHeckeError(Exception):
    """Base class for all domain errors"""

    code = "domain_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}


class InvalidParametersError(MetaHeckeError):
    code = "invalid_parameters"


class ConsistencyError(MetaHeckeError):
    """Two independent evaluation routes disagree"""
    code = "consistency"


# ffield
class NotPrimeError(MetaHeckeError):
    code = "not_prime"


class FieldTooLargeError(MetaHeckeError):
    code = "field_too_large"


class ZeroInverseError(MetaHeckeError):
    code = "zero_inverse"


class FieldMismatchError(MetaHeckeError):
    code = "field_mismatch"


class ZeroArgumentError(MetaHeckeError):
    code = "zero_argument"


# hilbert / cocycle
class ModulusMismatchError(MetaHeckeError):
    code = "modulus_mismatch"


class DegreeMismatchError(MetaHeckeError):
    code = "degree_mismatch"


class BlockMismatchError(MetaHeckeError):
    code = "block_mismatch"


class NonUnitDeterminantError(MetaHeckeError):
    code = "non_unit_determinant"


# weyl / hecke
class RankMismatchError(MetaHeckeError):
    code = "rank_mismatch"


class TwistMismatchError(MetaHeckeError):
    code = "twist_mismatch"


class FlavorMismatchError(MetaHeckeError):
    code = "flavor_mismatch"


class AlgebraMismatchError(MetaHeckeError):
    code = "algebra_mismatch"


# typeparams
class BoundExceededError(MetaHeckeError):
    code = "bound_exceeded"


class DivisibilityViolationError(MetaHeckeError):
    code = "divisibility_violation"


class NotRegularError(MetaHeckeError):
    code = "not_regular"


class NotSublatticeError(MetaHeckeError):
    code = "not_sublattice"


# hmodules
class BoxOverflowError(MetaHeckeError):
    code = "box_overflow"


class SingularSolveError(MetaHeckeError):
    code = "singular_solve"


class SpecializationPoleError(MetaHeckeError):
    code = "specialization_pole"
