"""Exact integer primitives shared by the rest of the package.

Python ``int`` is already arbitrary precision, so non-negative and signed
quantities are plain ints; the helpers here only check the contracts.
"""

from __future__ import annotations

import math
from typing import Optional, Tuple


def _check_nat(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"{name} must be non-negative, got {n}")


def isqrt(n: int) -> int:
    """Return the largest ``s`` with ``s*s <= n``."""
    _check_nat(n)
    return math.isqrt(n)


def perfect_square(n: int) -> Optional[int]:
    """Return ``s`` with ``s*s == n``, or None if ``n`` is not a square."""
    _check_nat(n)
    s = math.isqrt(n)
    return s if s * s == n else None


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Iterative extended Euclid.

    Returns ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``. The
    coefficients are the ones produced by the textbook iteration, so they are
    deterministic: ``ext_gcd(367, 1187) == (1, 207, -64)``.
    """
    _check_nat(a, "a")
    _check_nat(b, "b")
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def mod_inverse(a: int, m: int) -> int:
    g, s, _ = ext_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return s % m


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base**exp mod modulus`` by square-and-multiply (builtin ``pow``)."""
    _check_nat(exp, "exp")
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    return pow(base, exp, modulus)
