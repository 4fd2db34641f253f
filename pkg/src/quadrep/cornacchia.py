"""Cornacchia's algorithm for ``x**2 + d*y**2 = m``, with Hermite's ``d = 1`` variant.

Given a normalized root ``w`` of ``-d`` modulo ``m`` (``m/2 <= w < m``), run
the Euclidean division chain on ``w/m`` with remainders ``t`` and convergent
denominators ``D``. For ``d >= 2`` stop at the first remainder below
``sqrt(m)``; the candidate ``(t[nu+1], D[nu])`` either solves the equation
properly or no proper solution belongs to ``w``. For ``d = 1`` stop on the
denominators instead, which always succeeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .contfrac import Antenaresis, expand, find_mu, find_nu
from .factor import Factorization, factorize
from .integer import perfect_square
from .modsqrt import sqrt_minus_d_mod_m


@dataclass(frozen=True)
class Representation:
    """A solution ``x**2 + d*y**2 == m`` with ``x, y >= 0``.

    ``w`` records the normalized root the solution came from, when there is
    one; it does not take part in equality.
    """

    x: int
    y: int
    d: int
    m: int
    proper: bool
    w: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        x, y, d, m = self.x, self.y, self.d, self.m
        if x < 0 or y < 0:
            raise ValueError(f"components must be non-negative, got ({x}, {y})")
        if x * x + d * y * y != m:
            raise ValueError(f"{x}^2 + {d}*{y}^2 != {m}")
        if self.proper != (math.gcd(x, y) == 1):
            raise ValueError(f"proper flag {self.proper} wrong for ({x}, {y})")

    @classmethod
    def of(cls, x: int, y: int, d: int, w: Optional[int] = None) -> "Representation":
        x, y = abs(x), abs(y)
        return cls(x, y, d, x * x + d * y * y, math.gcd(x, y) == 1, w)

    @property
    def key(self) -> Tuple[int, int]:
        """Class key: signs dropped, and for ``d = 1`` the pair is unordered."""
        if self.d == 1 and self.y > self.x:
            return (self.y, self.x)
        return (self.x, self.y)

    def __str__(self) -> str:
        kind = "proper" if self.proper else "improper"
        coef = "" if self.d == 1 else f"{self.d}*"
        return f"{self.m} = {self.x}^2 + {coef}{self.y}^2 ({kind})"


@dataclass(frozen=True)
class ProblemSpec:
    """The equation ``x**2 + d*y**2 = m`` with ``d >= 1``, ``m >= 2``, ``gcd(d, m) = 1``."""

    d: int
    m: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if math.gcd(self.d, self.m) != 1:
            raise ValueError(f"gcd(d, m) must be 1, got gcd({self.d}, {self.m}) = {math.gcd(self.d, self.m)}")


@dataclass(frozen=True)
class CornacchiaStep:
    """Stopping data of one run: the quantities ``t[nu]``, ``t[nu+1]``, ``D[nu]``."""

    w: int
    index: int
    t_prev: int
    t: int
    D: int
    accepted: bool
    trace: Antenaresis = field(repr=False, compare=False)


def _check_root(w: int, d: int, m: int) -> None:
    if not (2 * w >= m and w < m):
        raise ValueError(f"root {w} is not in [m/2, m) for m={m}")
    if (w * w + d) % m:
        raise ValueError(f"{w}^2 is not -{d} modulo {m}")


def _assert_congruences(exp: Antenaresis, d: int, m: int) -> None:
    # t[j+1]^2 + d*D[j]^2 = 0 (mod m) along the whole chain
    for j in range(-1, exp.k + 1):
        assert (exp.r(j + 1) ** 2 + d * exp.B(j) ** 2) % m == 0, j


def cornacchia_step(w: int, spec: ProblemSpec) -> CornacchiaStep:
    """Run the algorithm on one root and report where it stopped.

    >>> s = cornacchia_step(231183, ProblemSpec(5, 435629))
    >>> (s.t_prev, s.t, s.D, s.accepted)
    (1385, 228, 277, True)
    """
    d, m = spec.d, spec.m
    if d < 2:
        raise ValueError("cornacchia_step needs d >= 2; use solve_d1_for_root")
    _check_root(w, d, m)
    exp = expand(w, m)
    if __debug__:
        _assert_congruences(exp, d, m)
    nu = find_nu(exp, m)
    t, D = exp.r(nu + 1), exp.B(nu)
    accepted = t * t + d * D * D == m
    # Cross-check: the same D comes out of (m - t^2)/d whenever it is a square.
    rest, rem = divmod(m - t * t, d)
    assert accepted == (rem == 0 and perfect_square(rest) == D)
    if accepted:
        assert math.gcd(t, D) == 1, (t, D)
    return CornacchiaStep(w, nu, exp.r(nu), t, D, accepted, exp)


def solve_for_root(w: int, spec: ProblemSpec) -> Optional[Representation]:
    """The proper solution belonging to ``w``, or None if there is none."""
    step = cornacchia_step(w, spec)
    if not step.accepted:
        return None
    return Representation(step.t, step.D, spec.d, spec.m, True, w)


def solve_d1_for_root(w: int, m: int) -> Representation:
    """Hermite's variant: a root of ``-1`` modulo ``m`` always yields ``m`` as a
    sum of two coprime squares.

    The pair is returned as ``(t[mu+1], D[mu])``; any proper solution equals it
    up to order and signs.

    >>> solve_d1_for_root(8, 13)
    Representation(x=2, y=3, d=1, m=13, proper=True, w=8)
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    _check_root(w, 1, m)
    exp = expand(w, m)
    if __debug__:
        _assert_congruences(exp, 1, m)
    mu = find_mu(exp, m)
    t, D = exp.r(mu + 1), exp.B(mu)
    if t * t + D * D != m or math.gcd(t, D) != 1:
        raise ArithmeticError(f"Hermite step failed for w={w}, m={m}: ({t}, {D})")
    return Representation(t, D, 1, m, True, w)


def solve_proper(spec: ProblemSpec, f: Optional[Factorization] = None) -> List[Representation]:
    """All proper solutions, one per normalized root that admits one, in
    ascending order of the root.

    >>> [(r.x, r.y) for r in solve_proper(ProblemSpec(5, 435629))]
    [(228, 277), (123, 290)]
    """
    d, m = spec.d, spec.m
    if d >= 2 and m < d + 1:
        return []
    roots = sqrt_minus_d_mod_m(d, m, f if f is not None else factorize(m))
    out: List[Representation] = []
    seen = set()
    for w in roots:
        rep = solve_d1_for_root(w, m) if d == 1 else solve_for_root(w, spec)
        if rep is not None and rep.key not in seen:
            seen.add(rep.key)
            out.append(rep)
    return out
