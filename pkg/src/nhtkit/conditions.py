"""Orthogonality conditions for NHT coefficient vectors.

An NHT matrix of size n = 2h has first row ``0, u0, 0, u1, ..., 0, u_{h-1}``.
Because zeros and coefficients interleave, every odd-lag entry of N N^T
vanishes, and the entry at matrix lag 2l is the cyclic autocorrelation of
``u`` at lag l.  N N^T = I mod m therefore reduces to

    sum(u_i^2)            == 1  (mod m)
    sum(u_i * u_{i+l})    == 0  (mod m)   for l = 1 .. h // 2

Lags above h // 2 mirror lags below it and are not checked separately.
"""

import operator
from collections import Counter
from dataclasses import dataclass

from nhtkit.errors import InvalidCoefficientsError
from nhtkit.residue import check_modulus

COEFF_NAMES = "abcdefghijklmnopqrstuvwxyz"


def as_coeffs(u, m=None):
    """Validate a coefficient vector and return it as a tuple of ints.

    With ``m`` given, every entry must already be reduced into ``[0, m)``.
    """
    try:
        u = tuple(operator.index(x) for x in u)
    except TypeError:
        raise InvalidCoefficientsError(f"coefficients must be integers: {u!r}") from None
    if len(u) < 2:
        raise InvalidCoefficientsError(
            f"need at least 2 coefficients (n >= 4), got {len(u)}")
    if m is not None:
        m = check_modulus(m)
        bad = [x for x in u if not 0 <= x < m]
        if bad:
            raise InvalidCoefficientsError(
                f"coefficients must lie in [0, {m}); offending values {bad}")
    return u


@dataclass(frozen=True)
class ConditionSet:
    """Index-pair terms of every distinct condition for half-size ``h``.

    ``lags[l - 1]`` holds the h ordered pairs ``(i, (i + l) % h)`` whose
    products sum to the lag-l autocorrelation.
    """

    h: int
    diagonal: tuple
    lags: tuple

    def multiset(self, lag):
        """Unordered-pair multiset of the terms at ``lag`` (0 = diagonal)."""
        pairs = self.diagonal if lag == 0 else self.lags[lag - 1]
        return Counter(tuple(sorted(p)) for p in pairs)

    def expression(self, lag, names=COEFF_NAMES):
        """Render the terms at ``lag`` as a readable polynomial string."""
        terms = []
        for (i, j), count in sorted(self.multiset(lag).items()):
            mono = f"{names[i]}^2" if i == j else f"{names[i]}{names[j]}"
            terms.append(mono if count == 1 else f"{count}{mono}")
        return " + ".join(terms)


def condition_set(h):
    h = operator.index(h)
    if h < 2:
        raise InvalidCoefficientsError(f"h must be >= 2, got {h}")
    diagonal = tuple((i, i) for i in range(h))
    lags = tuple(
        tuple((i, (i + lag) % h) for i in range(h))
        for lag in range(1, h // 2 + 1)
    )
    return ConditionSet(h, diagonal, lags)


def autocorrelation(u, lag, m):
    """Cyclic autocorrelation ``sum(u[i] * u[(i + lag) % h]) mod m``."""
    m = check_modulus(m)
    h = len(u)
    if not 0 <= lag < h:
        raise InvalidCoefficientsError(f"lag must lie in [0, {h}), got {lag}")
    return sum(int(u[i]) * int(u[(i + lag) % h]) for i in range(h)) % m


@dataclass(frozen=True)
class Verdict:
    passed: bool
    diagonal_residual: int
    lag_residuals: tuple

    def __bool__(self):
        return self.passed

    def failing_lags(self):
        return [lag for lag, r in enumerate(self.lag_residuals, start=1) if r]

    def describe(self):
        parts = [f"diag-1={self.diagonal_residual}"]
        parts += [f"lag{lag}={r}" for lag, r in enumerate(self.lag_residuals, start=1)]
        return ("PASS " if self.passed else "FAIL ") + " ".join(parts)


def check_solution(u, m):
    """Evaluate every orthogonality condition for ``u`` modulo ``m``."""
    m = check_modulus(m)
    u = as_coeffs(u, m)
    h = len(u)
    diag = (autocorrelation(u, 0, m) - 1) % m
    lag_res = tuple(autocorrelation(u, lag, m) for lag in range(1, h // 2 + 1))
    passed = diag == 0 and not any(lag_res)
    return Verdict(passed, diag, lag_res)


def rotate(u, r):
    r %= len(u)
    return tuple(u[r:]) + tuple(u[:r])


def reverse(u):
    return tuple(reversed(u))


def scale(u, t, m):
    return tuple((t * x) % m for x in u)
