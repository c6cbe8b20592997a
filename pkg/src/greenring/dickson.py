"""Dickson polynomials of the second type in ``Y, Z``.

``F_1 = 1``, ``F_2 = Z`` and ``F_k = Z F_{k-1} - Y F_{k-2}``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from math import comb

from .errors import DomainError, IntegralityError
from .poly import Poly

__all__ = [
    "dickson_f",
    "dickson_closed",
    "monomial_to_f_basis",
    "inverse_coefficient",
    "q_eval",
    "q_values",
]

_lock = threading.Lock()
_table: list[Poly] = [Poly.zero(), Poly.const(1), Poly.Z()]


def dickson_f(k: int) -> Poly:
    """Return ``F_k(Y, Z)`` by the three-term recursion (memoized)."""
    if k < 1:
        raise DomainError(f"Dickson index must be >= 1, got {k}")
    if k >= len(_table):
        with _lock:
            y, z = Poly.Y(), Poly.Z()
            while len(_table) <= k:
                _table.append(z * _table[-1] - y * _table[-2])
    return _table[k]


def dickson_closed(k: int) -> Poly:
    """``F_k`` from the binomial sum over ``i = 0 .. (k-1)//2``."""
    if k < 1:
        raise DomainError(f"Dickson index must be >= 1, got {k}")
    return Poly(
        {
            (i, k - 1 - 2 * i, ()): (-1) ** i * comb(k - 1 - i, i)
            for i in range((k - 1) // 2 + 1)
        }
    )


def inverse_coefficient(j: int, k: int) -> int:
    """Integer ``C(j,k) (j+1-2k) / (j+1-k)`` from the expansion of ``Z^j``."""
    c = Fraction(comb(j, k) * (j + 1 - 2 * k), j + 1 - k)
    if c.denominator != 1:
        raise IntegralityError(f"non-integral inverse Dickson coefficient for j={j}, k={k}")
    return c.numerator


def monomial_to_f_basis(j: int) -> list[tuple[int, Poly]]:
    """Expand ``Z^j`` as ``sum_k c_k Y^k F_{j+1-2k}``.

    Returns ``(index, coefficient polynomial in Y)`` pairs, ``k`` ascending.
    """
    if j < 0:
        raise DomainError(f"exponent must be >= 0, got {j}")
    return [
        (j + 1 - 2 * k, Poly.monomial(y=k, coeff=inverse_coefficient(j, k)))
        for k in range(j // 2 + 1)
    ]


def q_values(n: int) -> list[float]:
    """``[q_1, ..., q_n]`` with ``q_j = F_j(1, 2cos(pi/n))``.

    Scalar recursion; entries ``1..n-1`` are positive and ``q_n`` vanishes
    up to rounding.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    c = 2.0 * math.cos(math.pi / n)
    q = [1.0, c]
    while len(q) < n:
        q.append(c * q[-1] - q[-2])
    return q[:n]


def q_eval(n: int, j: int) -> float:
    if not 1 <= j <= n:
        raise DomainError(f"j must lie in 1..{n}, got {j}")
    return q_values(n)[j - 1]
