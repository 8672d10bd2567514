"""Exact arithmetic in Z_m.

Python integers are arbitrary precision, so products never overflow; the
modulus bound only exists so that moduli fit the 64-bit container header.
"""

import operator

from nhtkit.errors import InvalidModulusError, NhtError

MAX_MODULUS = 1 << 63


def check_modulus(m):
    """Return ``m`` as an int, raising InvalidModulusError unless 2 <= m < 2**63."""
    if isinstance(m, bool):
        raise InvalidModulusError(f"modulus must be an integer, got {m!r}")
    try:
        m = operator.index(m)
    except TypeError:
        raise InvalidModulusError(f"modulus must be an integer, got {m!r}") from None
    if m < 2 or m >= MAX_MODULUS:
        raise InvalidModulusError(f"modulus must satisfy 2 <= m < 2**63, got {m}")
    return m


def reduce(x, m):
    """Canonical representative of ``x`` in ``[0, m)``; negative ``x`` allowed."""
    return operator.index(x) % check_modulus(m)


def mul_mod(a, b, m):
    return (operator.index(a) * operator.index(b)) % check_modulus(m)


def dot_mod(u, v, m):
    """Sum of ``u[i] * v[i]`` reduced mod ``m``."""
    check_modulus(m)
    if len(u) != len(v):
        raise NhtError(f"length mismatch: {len(u)} != {len(v)}")
    return sum(int(x) * int(y) for x, y in zip(u, v)) % m


def is_reduced(values, m):
    return all(0 <= x < m for x in values)
