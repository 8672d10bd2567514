"""Circulant NHT matrices built from coefficient vectors.

Matrices are stored as ``(n, m, coeffs)``; the dense form is only
materialised for verification through :func:`gram`.
"""

from dataclasses import dataclass

from nhtkit.conditions import as_coeffs
from nhtkit.errors import InvalidCoefficientsError, NhtError
from nhtkit.residue import check_modulus

DEFAULT_DENSE_BOUND = 64


def build_first_row(u):
    """Alternating row ``0, u0, 0, u1, ...`` of length ``2 * len(u)``."""
    row = [0] * (2 * len(u))
    row[1::2] = u
    return row


@dataclass(frozen=True)
class NhtMatrix:
    n: int
    m: int
    coeffs: tuple

    def __post_init__(self):
        check_modulus(self.m)
        coeffs = as_coeffs(self.coeffs, self.m)
        if self.n % 2 or self.n < 4:
            raise InvalidCoefficientsError(f"n must be even and >= 4, got {self.n}")
        if len(coeffs) != self.n // 2:
            raise InvalidCoefficientsError(
                f"n={self.n} needs {self.n // 2} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs, m):
        return cls(2 * len(coeffs), m, tuple(coeffs))

    @property
    def h(self):
        return self.n // 2

    def first_row(self):
        return build_first_row(self.coeffs)

    def row(self, j):
        return row_of(self, j)

    def column(self, j):
        """Column ``j`` of N, i.e. row ``j`` of N^T."""
        if not 0 <= j < self.n:
            raise NhtError(f"column index {j} outside [0, {self.n})")
        row0 = self.first_row()
        return [row0[(j - i) % self.n] for i in range(self.n)]

    def dense(self):
        return [row_of(self, j) for j in range(self.n)]


def row_of(N, j):
    """Row ``j``: the first row cyclically shifted right by ``j``."""
    if not 0 <= j < N.n:
        raise NhtError(f"row index {j} outside [0, {N.n})")
    row0 = N.first_row()
    return row0[N.n - j:] + row0[:N.n - j]


def gram(N, dense_bound=DEFAULT_DENSE_BOUND):
    """Dense product ``N N^T mod m`` computed by explicit multiplication."""
    if N.n > dense_bound:
        raise NhtError(f"n={N.n} exceeds dense bound {dense_bound}")
    rows = N.dense()
    m = N.m
    return [
        [sum(x * y for x, y in zip(rows[j], rows[l])) % m for l in range(N.n)]
        for j in range(N.n)
    ]


def is_identity(matrix, m):
    check_modulus(m)
    return all(
        value == (1 if j == l else 0)
        for j, row in enumerate(matrix)
        for l, value in enumerate(row)
    ) and all(len(row) == len(matrix) for row in matrix) and len(matrix) > 0
