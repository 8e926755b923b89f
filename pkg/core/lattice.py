"""
Integer lattices in Z^t with a row-style Hermite normal form
"""

import sys
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.errors import InvalidParametersError


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(x, y, g) with x*a + y*b = g = gcd(a, b) >= 0"""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        quotient, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - quotient * x1
        y0, y1 = y1, y0 - quotient * y1
    if a < 0:
        return -x0, -y0, -a
    return x0, y0, a


class IntegerLattice:
    """
    Sublattice of Z^dim grown one generator at a time.
    Rows are kept in echelon form keyed by pivot column.
    """

    def __init__(self, dim: int, generators: Iterable[Sequence[int]] = ()):
        if dim < 0:
            raise InvalidParametersError("dimension must be nonnegative")
        self.dim = dim
        self._rows: Dict[int, List[int]] = {}
        for vec in generators:
            self.add_vector(vec)

    def _reduce(self, vec: Sequence[int], update: bool) -> List[int]:
        vec = [int(x) for x in vec]
        if len(vec) != self.dim:
            raise InvalidParametersError(f"vector of length {len(vec)} in dimension {self.dim}")
        for j in range(self.dim):
            if vec[j] == 0:
                continue
            row = self._rows.get(j)
            if row is None:
                if update:
                    self._rows[j] = vec
                    return [0] * self.dim
                return vec
            a, b = row[j], vec[j]
            if b % a == 0:
                k = b // a
                vec = [v - k * r for v, r in zip(vec, row)]
            elif update:
                x, y, g = xgcd(a, b)
                new_row = [x * r + y * v for r, v in zip(row, vec)]
                vec = [(a // g) * v - (b // g) * r for r, v in zip(row, vec)]
                self._rows[j] = new_row
            else:
                return vec
        return vec

    def add_vector(self, vec: Sequence[int]) -> bool:
        """Add a generator; True when the lattice grew"""
        if vec in self:
            return False
        self._reduce(vec, update=True)
        return True

    def __contains__(self, vec: Sequence[int]) -> bool:
        return not any(self._reduce(vec, update=False))

    @property
    def rank(self) -> int:
        return len(self._rows)

    def hnf(self) -> List[List[int]]:
        """Rows sorted by pivot, pivots positive, entries above each pivot in [0, pivot)"""
        rows = [list(self._rows[j]) for j in sorted(self._rows)]
        pivots = sorted(self._rows)
        for k, (row, j) in enumerate(zip(rows, pivots)):
            if row[j] < 0:
                rows[k] = row = [-x for x in row]
            for i in range(k):
                factor = rows[i][j] // row[j]
                if factor:
                    rows[i] = [a - factor * b for a, b in zip(rows[i], row)]
        return rows

    def determinant(self) -> int:
        """Index in Z^dim for full-rank lattices, 0 otherwise"""
        if self.rank < self.dim:
            return 0
        det = 1
        for j, row in self._rows.items():
            det *= abs(row[j])
        return det

    def is_sublattice_of(self, other: "IntegerLattice") -> bool:
        return all(row in other for row in self._rows.values())

    def index_in(self, other: "IntegerLattice") -> int:
        """[other : self] for full-rank lattices with self inside other"""
        small, big = self.determinant(), other.determinant()
        if not small or not big or small % big:
            raise InvalidParametersError("index needs nested full-rank lattices")
        return small // big

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.dim == other.dim and self.hnf() == other.hnf()

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.hnf()))

    def __repr__(self) -> str:
        return f"IntegerLattice({self.hnf()})"


def diagonal_lattice(diag: Sequence[int]) -> IntegerLattice:
    t = len(diag)
    return IntegerLattice(t, ([d if i == j else 0 for j in range(t)] for i, d in enumerate(diag)))
