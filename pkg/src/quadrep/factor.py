"""Primality testing and integer factorization at desk scale.

Trial division by small primes, perfect-power detection, then Pollard's rho
with Brent's cycle finding on the remaining cofactors. Everything is
deterministic: rho walks the polynomials ``x**2 + c`` for ``c = 1, 2, ...``
starting from ``x0 = 2``.
"""

from __future__ import annotations

import enum
import math
import os
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .integer import mod_pow

TRIAL_BOUND = 10_000

# (bound, bases): Miller-Rabin with the first few prime bases is exact below bound.
_MR_TABLE = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (3_317_044_064_679_887_385_961_981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)
DETERMINISTIC_BOUND = _MR_TABLE[-1][0]
_MR_BASES = _MR_TABLE[-1][1]
_MR_EXTRA_ROUNDS = 20
_MR_SEED = 0x5EED

DEFAULT_EFFORT = 1_000_000
EFFORT_ENV = "QUADREP_FACTOR_EFFORT"


class FactorizationError(ArithmeticError):
    """Raised when the effort bound runs out before ``n`` is fully factored."""

    def __init__(self, n: int, unfactored: int, found: List[Tuple[int, int]]):
        self.n = n
        self.unfactored = unfactored
        self.found = found
        super().__init__(f"could not factor {n}: unfactored part {unfactored}")


class FermatResult(str, enum.Enum):
    COMPOSITE = "composite"
    PROBABLE_PRIME = "probable_prime"


def _small_primes(bound: int) -> List[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


SMALL_PRIMES = _small_primes(TRIAL_BOUND)
_SMALL_PRIME_SET = frozenset(SMALL_PRIMES)


def fermat_base2(m: int) -> FermatResult:
    """Fermat test to base 2: composite iff ``2**(m-1) != 1 (mod m)``.

    Base-2 pseudoprimes such as 341 = 11*31 pass as ``PROBABLE_PRIME``; use
    ``is_prime`` when the answer matters.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"fermat_base2 needs an odd m >= 3, got {m}")
    return FermatResult.COMPOSITE if mod_pow(2, m - 1, m) != 1 else FermatResult.PROBABLE_PRIME


def _mr_round(n: int, a: int, u: int, t: int) -> bool:
    """One Miller-Rabin round; True means ``a`` witnesses compositeness."""
    x = pow(a, u, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(t - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin, deterministic below ``DETERMINISTIC_BOUND`` (about 3.3e24).

    Above the bound 20 extra rounds with bases drawn from a generator seeded
    by ``n`` are run, so the answer is reproducible.
    """
    if n <= TRIAL_BOUND:
        return n in _SMALL_PRIME_SET
    for p in _MR_BASES:
        if n % p == 0:
            return False
    u, t = n - 1, 0
    while u % 2 == 0:
        u //= 2
        t += 1
    bases = next((b for bound, b in _MR_TABLE if n < bound), _MR_BASES)
    if any(_mr_round(n, a, u, t) for a in bases):
        return False
    if n < DETERMINISTIC_BOUND:
        return True
    rng = random.Random(_MR_SEED ^ n)
    return not any(_mr_round(n, rng.randrange(2, n - 1), u, t) for _ in range(_MR_EXTRA_ROUNDS))


def _brent(n: int, c: int, max_steps: int) -> Tuple[Optional[int], int]:
    """Brent's variant of rho on ``x -> x**2 + c`` from ``x0 = 2``.

    Returns ``(divisor or None, steps used)``; ``None`` when the cycle closed
    on ``n`` itself or the step budget ran out.
    """
    y, r, q, g = 2, 1, 1, 1
    batch = 128
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        steps += r
        j = 0
        while j < r and g == 1:
            ys = y
            for _ in range(min(batch, r - j)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            j += batch
        steps += min(j, r)
        r *= 2
        if steps > max_steps:
            return None, steps
    if g == n:
        # Batched product overshot; backtrack one step at a time.
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if 1 < g < n else None), steps


def pollard_rho(m: int, max_steps: int = DEFAULT_EFFORT) -> int:
    """Return a nontrivial divisor of the odd composite ``m``.

    >>> pollard_rho(435629) in (367, 1187)
    True
    """
    if m < 4 or m % 2 == 0:
        raise ValueError(f"pollard_rho needs an odd composite, got {m}")
    if is_prime(m):
        raise ValueError(f"{m} is prime")
    d, _ = _rho(m, max_steps)
    if d is None:
        raise FactorizationError(m, m, [])
    return d


def _rho(m: int, budget: int) -> Tuple[Optional[int], int]:
    used = 0
    c = 1
    while used < budget:
        d, steps = _brent(m, c, budget - used)
        used += steps
        if d is not None:
            return d, used
        c += 1
    return None, used


def _integer_root(n: int, k: int) -> Optional[int]:
    """Exact k-th root of n, or None."""
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid**k
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def perfect_power(n: int) -> Tuple[int, int]:
    """Return ``(b, k)`` with ``b**k == n`` and ``k`` as large as possible."""
    for k in range(n.bit_length(), 1, -1):
        b = _integer_root(n, k)
        if b is not None:
            return b, k
    return n, 1


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``n = prod(p**e)`` with primes in increasing order.

    ``certified`` is True when every prime lies below the bound where
    ``is_prime`` is deterministic.
    """

    n: int
    factors: Tuple[Tuple[int, int], ...]
    certified: bool = True

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors {self.factors} multiply to {prod}, not {self.n}")

    @classmethod
    def from_dict(cls, n: int, exps: Dict[int, int]) -> "Factorization":
        factors = tuple(sorted(exps.items()))
        for p, _ in factors:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        certified = all(p < DETERMINISTIC_BOUND for p, _ in factors)
        return cls(n, factors, certified)

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def prime_powers(self) -> List[int]:
        return [p**e for p, e in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def _effort_from_env() -> int:
    raw = os.environ.get(EFFORT_ENV)
    if not raw:
        return DEFAULT_EFFORT
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{EFFORT_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{EFFORT_ENV} must be positive, got {value}")
    return value


def factorize(m: int, effort: Optional[int] = None) -> Factorization:
    """Fully factor ``m >= 1``.

    ``effort`` bounds the total number of rho iterations (default from the
    ``QUADREP_FACTOR_EFFORT`` environment variable, else one million). When it
    runs out a :class:`FactorizationError` carrying the unfactored part is
    raised.

    >>> str(factorize(58674434381))
    '367^3 * 1187'
    """
    if m < 1:
        raise ValueError(f"factorize needs m >= 1, got {m}")
    budget = _effort_from_env() if effort is None else effort
    exps: Dict[int, int] = {}
    n = m
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            exps[p] = e
    stack = [(n, 1)] if n > 1 else []
    while stack:
        n, mult = stack.pop()
        if n < TRIAL_BOUND**2 or is_prime(n):
            # Anything left below TRIAL_BOUND**2 after trial division is prime.
            exps[n] = exps.get(n, 0) + mult
            continue
        base, k = perfect_power(n)
        if k > 1:
            stack.append((base, mult * k))
            continue
        d, used = _rho(n, budget)
        budget -= used
        if d is None:
            raise FactorizationError(m, n, sorted(exps.items()))
        stack.append((d, mult))
        stack.append((n // d, mult))
    return Factorization.from_dict(m, exps)
