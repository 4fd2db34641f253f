"""Representations of composite ``m`` assembled from smaller pieces.

Two representations multiply through the norm identity

    (a^2 + d b^2)(c^2 + d e^2) = (ac -+ d be)^2 + d (ae +- bc)^2,

one result per sign choice. :func:`solve_general` splits ``m`` into blocks
(the whole of ``m``, its prime powers, and a square-free part next to the
even prime powers), solves each block, multiplies the pieces over every sign
choice and finally adds the scaled solutions ``f*(x, y)`` of ``m / f**2``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .contfrac import expand, is_palindromic
from .cornacchia import ProblemSpec, Representation, solve_d1_for_root, solve_for_root, solve_proper
from .factor import Factorization, factorize, is_prime
from .modsqrt import normalize_root, sqrt_mod_prime_power


class RepKind(str, enum.Enum):
    CORNACCHIA = "cornacchia"
    LIFTED = "lifted"
    TRIVIAL_SQUARE = "trivial_square"
    TWO_POWER_ENUM = "two_power_enum"


@dataclass(frozen=True)
class PrimePowerRep:
    """A representation of ``p**e``, with how it was found.

    ``root`` is the normalized root of ``-d`` modulo ``p**e`` handed to the
    continued-fraction step (None for the trivial and enumerated kinds).
    """

    p: int
    e: int
    rep: Representation
    kind: RepKind
    root: Optional[int] = None

    def __post_init__(self):
        if self.rep.m != self.p**self.e:
            raise ValueError(f"{self.rep} does not represent {self.p}^{self.e}")
        if self.kind is RepKind.TRIVIAL_SQUARE:
            if self.e % 2 or (self.rep.x, self.rep.y) != (self.p ** (self.e // 2), 0):
                raise ValueError("trivial square must be (p^(e/2), 0) with e even")


def compose_pair(r1: Representation, r2: Representation, sign: str) -> Representation:
    """Multiply two representations with the same ``d``.

    ``sign="+"`` gives ``(x1 x2 - d y1 y2, x1 y2 + x2 y1)``; ``sign="-"``
    gives ``(x1 x2 + d y1 y2, x1 y2 - x2 y1)``. Components are returned as
    absolute values and the proper flag is recomputed.

    >>> d = 5
    >>> r1, r2 = Representation.of(362, 27, d), Representation.of(228, 277, d)
    >>> c = compose_pair(r1, r2, "-")
    >>> (c.x, c.y, c.m, c.proper)
    (119931, 94118, 58674434381, True)
    """
    if r1.d != r2.d:
        raise ValueError(f"cannot compose d={r1.d} with d={r2.d}")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    d = r1.d
    s = 1 if sign == "+" else -1
    x = r1.x * r2.x - s * d * r1.y * r2.y
    y = r1.x * r2.y + s * r2.x * r1.y
    out = Representation.of(x, y, d)
    assert out.m == r1.m * r2.m
    return out


def prime_power_rep(p: int, e: int, d: int) -> List[PrimePowerRep]:
    """Representations of ``p**e`` by ``x**2 + d*y**2``.

    Odd ``p``: the proper ones come from lifting a root of ``-d`` to
    ``p**e`` and running Cornacchia on it; if ``e`` is even the trivial
    ``(p**(e/2), 0)`` is added. ``p = 2`` is handled by enumeration.

    >>> [(r.rep.x, r.rep.y, r.root) for r in prime_power_rep(367, 2, 5)]
    [(362, 27, 109760), (367, 0, None)]
    """
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d % p == 0:
        raise ValueError(f"{p} divides d={d}")
    pe = p**e
    if p == 2:
        out = []
        for y in range(math.isqrt(pe // d) + 1):
            rest = pe - d * y * y
            x = math.isqrt(rest)
            if x * x == rest:
                out.append(PrimePowerRep(p, e, Representation.of(x, y, d), RepKind.TWO_POWER_ENUM))
        return out

    out = []
    kind = RepKind.CORNACCHIA if e == 1 else RepKind.LIFTED
    spec = ProblemSpec(d, pe)
    roots = sorted({normalize_root(r, pe) for r in sqrt_mod_prime_power(-d, p, e)})
    seen = set()
    for w in roots:
        rep = solve_d1_for_root(w, pe) if d == 1 else solve_for_root(w, spec)
        if rep is not None and rep.key not in seen:
            seen.add(rep.key)
            out.append(PrimePowerRep(p, e, rep, kind, w))
    if e % 2 == 0:
        out.append(PrimePowerRep(p, e, Representation.of(p ** (e // 2), 0, d), RepKind.TRIVIAL_SQUARE))
    return out


def _sub_factorization(f: Factorization, n: int) -> Factorization:
    exps = {}
    for p, _ in f.factors:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            exps[p] = e
    assert n == 1
    return Factorization(math.prod(p**e for p, e in exps.items()), tuple(sorted(exps.items())), f.certified)


def _decompositions(f: Factorization) -> Iterator[List[Tuple[int, ...]]]:
    """Ways to split ``n`` into blocks, each a list of ``(p, e)`` factors.

    Yields the whole number, then the separate prime powers, then the split
    into a square-free block times the largest even prime powers.
    """
    factors = list(f.factors)
    seen = []

    def fresh(blocks):
        key = sorted(tuple(sorted(b)) for b in blocks)
        if key in seen:
            return False
        seen.append(key)
        return True

    whole = [tuple(factors)]
    if fresh(whole):
        yield whole
    separate = [((p, e),) for p, e in factors]
    if fresh(separate):
        yield separate
    squarefree = tuple((p, 1) for p, e in factors if e % 2)
    evens = [((p, e - e % 2),) for p, e in factors if e >= 2]
    split = ([squarefree] if squarefree else []) + evens
    if fresh(split):
        yield split


def _block_reps(block: Sequence[Tuple[int, int]], d: int) -> List[Representation]:
    if len(block) == 1:
        p, e = block[0]
        return [ppr.rep for ppr in prime_power_rep(p, e, d)]
    n = math.prod(p**e for p, e in block)
    return solve_proper(ProblemSpec(d, n), Factorization(n, tuple(sorted(block))))


def _fold(pieces: List[List[Representation]]) -> Dict[Tuple[int, int], Representation]:
    acc: Dict[Tuple[int, int], Representation] = {r.key: r for r in pieces[0]}
    for nxt in pieces[1:]:
        out: Dict[Tuple[int, int], Representation] = {}
        for a, b, s in itertools.product(acc.values(), nxt, "+-"):
            c = compose_pair(a, b, s)
            out.setdefault(c.key, c)
        acc = out
    return acc


def _general(d: int, n: int, f: Factorization, memo: Dict[int, Dict]) -> Dict[Tuple[int, int], Representation]:
    if n in memo:
        return memo[n]
    found: Dict[Tuple[int, int], Representation] = {}
    if n == 1:
        found[(1, 0)] = Representation.of(1, 0, d)
    else:
        for blocks in _decompositions(f):
            pieces = [_block_reps(b, d) for b in blocks]
            if all(pieces):
                for key, rep in _fold(pieces).items():
                    found.setdefault(key, rep)
        # every solution is g * (proper solution of n / g^2) with g = gcd(x, y)
        for g in range(2, math.isqrt(n) + 1):
            if n % (g * g) == 0:
                sub = n // (g * g)
                for rep in _general(d, sub, _sub_factorization(f, sub), memo).values():
                    scaled = Representation.of(g * rep.x, g * rep.y, d)
                    found.setdefault(scaled.key, scaled)
    memo[n] = found
    return found


def solve_general(spec: ProblemSpec, f: Optional[Factorization] = None) -> List[Representation]:
    """Proper and improper solutions of ``x**2 + d*y**2 = m``, one per class,
    sorted by ``(x, y)``.

    >>> [str(r) for r in solve_general(ProblemSpec(7, 36964))]
    ['36964 = 26^2 + 7*72^2 (improper)']
    """
    d, m = spec.d, spec.m
    if f is None:
        f = factorize(m)
    elif f.n != m:
        raise ValueError(f"factorization is of {f.n}, not {m}")
    reps = _general(d, m, f, {})
    return [reps[k] for k in sorted(reps)]


def _quotients(a: int, b: int) -> List[int]:
    qs = []
    while b:
        q, r = divmod(a, b)
        qs.append(q)
        a, b = b, r
    return qs


def smith_two_squares(p: int) -> Tuple[int, int, int]:
    """Write a prime ``p = 1 (mod 4)`` as ``x**2 + y**2`` without a square
    root of -1.

    Scans ``h = 2, 3, ...`` below ``p/2`` for a palindromic expansion of
    ``p/h``. For an even-length palindrome the product of the quotient
    matrices is ``N N^T`` where ``N`` is the product over the first half, so
    ``p`` is the sum of the squares of the two numerators in ``N``.

    >>> smith_two_squares(13)
    (5, 3, 2)
    """
    if p % 4 != 1 or not is_prime(p):
        raise ValueError(f"{p} is not a prime congruent to 1 mod 4")
    for h in range(2, (p + 1) // 2):
        qs = _quotients(p, h)
        if qs != qs[::-1] or len(qs) % 2:
            continue
        exp = expand(p, h)
        assert is_palindromic(exp)
        half = len(qs) // 2
        x, y = exp.A(half - 1), exp.A(half - 2)
        if x * x + y * y == p:
            return h, x, y
    raise ArithmeticError(f"no palindromic expansion found for {p}")
