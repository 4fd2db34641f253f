"""Square roots modulo primes, prime powers and composite moduli.

Single-root helpers return either member of ``{r, p - r}``; only
:func:`normalize_root` picks a representative, namely the one in
``[m/2, m)``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from .factor import Factorization, factorize, is_prime
from .integer import ext_gcd

MAX_ENUM_TWO_EXPONENT = 6


class Residuosity(str, enum.Enum):
    RESIDUE = "residue"
    NONRESIDUE = "nonresidue"
    ZERO = "zero"


class NonResidueError(ValueError):
    """The requested square root does not exist."""


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def euler_residue(a: int, p: int) -> Residuosity:
    """Classify ``a`` modulo the odd prime ``p`` by Euler's criterion."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return Residuosity.ZERO
    return Residuosity.RESIDUE if pow(a, (p - 1) // 2, p) == 1 else Residuosity.NONRESIDUE


def _checked(r: int, a: int, p: int) -> int:
    if (r * r - a) % p:
        raise NonResidueError(f"{a % p} is not a square modulo {p}")
    return r


def sqrt_3mod4(a: int, p: int) -> int:
    """Root of ``a`` modulo a prime ``p = 3 (mod 4)`` as ``a**((p+1)/4)``."""
    if p % 4 != 3:
        raise ValueError(f"{p} is not 3 mod 4")
    return _checked(pow(a % p, (p + 1) // 4, p), a, p)


def tonelli(a: int, p: int) -> int:
    """Tonelli-Shanks square root of ``a`` modulo the odd prime ``p``."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise NonResidueError(f"{a} is not a square modulo {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        # least i with t**(2**i) == 1
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return _checked(r, a, p)


def sqrt_mod_prime(a: int, p: int) -> int:
    """Lagrange's shortcut when ``p = 3 (mod 4)``, Tonelli-Shanks otherwise."""
    if p % 4 == 3:
        return sqrt_3mod4(a, p)
    return tonelli(a, p)


def hensel_lift(r: int, a: int, p: int, e: int) -> int:
    """Lift a root ``r`` of ``a`` modulo ``p`` to a root modulo ``p**e``.

    Each step is one Newton correction ``r -> r - (r*r - a) / (2r)`` carried
    out modulo the next power of ``p``. Needs ``p`` odd and ``p`` not
    dividing ``r``.
    """
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    if p % 2 == 0 or r % p == 0:
        raise ValueError(f"cannot lift root {r} modulo {p}: p divides 2r")
    if (r * r - a) % p:
        raise NonResidueError(f"{r}^2 is not {a} modulo {p}")
    r %= p
    pk = p
    for _ in range(e - 1):
        pk *= p
        inv = pow(2 * r, -1, pk)
        r = (r - (r * r - a) * inv) % pk
    assert (r * r - a) % pk == 0
    return r


def sqrt_mod_2power(a: int, e: int) -> Set[int]:
    """All ``r`` in ``[0, 2**e)`` with ``r*r = a (mod 2**e)``.

    Small exponents are enumerated directly. Larger ones extend the roots
    found modulo ``2**(e-1)``: every root modulo ``2**e`` reduces to one
    there, so testing ``r`` and ``r + 2**(e-1)`` is exhaustive.
    """
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    start = min(e, MAX_ENUM_TWO_EXPONENT)
    mod = 1 << start
    roots = {r for r in range(mod) if (r * r - a) % mod == 0}
    for _ in range(start + 1, e + 1):
        half, mod = mod, mod << 1
        roots = {c for r in roots for c in (r, r + half) if (c * c - a) % mod == 0}
    return roots


def sqrt_mod_prime_power(a: int, p: int, e: int) -> Set[int]:
    """All roots of ``a`` modulo ``p**e`` for ``a`` prime to ``p``."""
    if p == 2:
        return sqrt_mod_2power(a, e)
    if a % p == 0:
        raise ValueError(f"{a} is not prime to {p}")
    if euler_residue(a, p) is not Residuosity.RESIDUE:
        return set()
    r = hensel_lift(sqrt_mod_prime(a, p), a, p, e)
    pe = p**e
    return {r, pe - r}


def normalize_root(r: int, m: int) -> int:
    """Representative of ``{r, m - r}`` lying in ``[m/2, m)``."""
    r %= m
    if r == 0 and m > 1:
        raise ValueError("zero is not a normalizable root")
    return r if 2 * r >= m else m - r


def crt(residues: Sequence[int], moduli: Sequence[int]) -> Tuple[int, int]:
    """Combine ``x = r_i (mod m_i)`` for pairwise coprime moduli."""
    x, mod = 0, 1
    for r, m in zip(residues, moduli):
        g, s, t = ext_gcd(mod, m)
        if g != 1:
            raise ValueError(f"moduli {mod} and {m} are not coprime")
        # s*mod + t*m = 1
        x = (x * t * m + r * s * mod) % (mod * m)
        mod *= m
    return x, mod


@dataclass(frozen=True)
class RootSet:
    """Normalized square roots of ``target`` modulo ``modulus``."""

    modulus: int
    target: int
    roots: Tuple[int, ...]

    def __post_init__(self):
        m = self.modulus
        for w in self.roots:
            if (w * w - self.target) % m or not (2 * w >= m and w < m):
                raise ValueError(f"{w} is not a normalized root of {self.target} mod {m}")
        if len(set(self.roots)) != len(self.roots):
            raise ValueError("duplicate roots")

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, w) -> bool:
        return w in self.roots


def sqrt_mod(a: int, m: int, f: Optional[Factorization] = None) -> List[int]:
    """Every root of ``a`` modulo ``m`` in ``[0, m)``, sorted.

    Requires ``gcd(a, m) == 1``; roots modulo each prime power are glued
    together by CRT.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return [0]
    if f is None:
        f = factorize(m)
    elif f.n != m:
        raise ValueError(f"factorization is of {f.n}, not {m}")
    per_factor = []
    moduli = []
    for p, e in f.factors:
        if a % p == 0:
            raise ValueError(f"{a} and {m} share the factor {p}")
        roots = sqrt_mod_prime_power(a, p, e)
        if not roots:
            return []
        per_factor.append(sorted(roots))
        moduli.append(p**e)
    out = {crt(combo, moduli)[0] for combo in itertools.product(*per_factor)}
    return sorted(out)


def sqrt_minus_d_mod_m(d: int, m: int, f: Optional[Factorization] = None) -> RootSet:
    """All normalized ``w`` with ``w*w = -d (mod m)`` and ``m/2 <= w < m``.

    >>> sqrt_minus_d_mod_m(5, 435629).roots
    (231183, 386057)
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    roots = sqrt_mod(-d, m, f)
    return RootSet(m, -d, tuple(sorted({normalize_root(r, m) for r in roots})))

