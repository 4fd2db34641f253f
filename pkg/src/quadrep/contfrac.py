"""Finite continued fractions: the Euclidean trace of a pair and its convergents.

Indices follow the classical subscripts. For ``a/b`` the division chain is

    r[j-1] = q[j] * r[j] + r[j+1],   0 <= r[j+1] < r[j],   0 <= j <= k

with ``r[-1] = a``, ``r[0] = b`` and ``r[k+1] = 0``. Convergents obey
``A[j] = q[j] A[j-1] + A[j-2]`` (likewise ``B``) from the seeds
``A[-2], B[-2] = 0, 1`` and ``A[-1], B[-1] = 1, 0``. The sentinel entries are
stored explicitly, so ``Antenaresis.r(-1)`` and ``Antenaresis.B(-2)`` work.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Tuple


class Antenaresis(NamedTuple):
    """Full Euclidean trace of ``(a, b)``.

    Attributes
    ----------
    a, b : int
        Numerator and denominator (``r[-1]`` and ``r[0]``).
    quotients : tuple of int
        ``q[0] .. q[k]``.
    remainders : tuple of int
        ``r[-1] .. r[k+1]``.
    conv_num : tuple of int
        ``A[-2] .. A[k]``.
    conv_den : tuple of int
        ``B[-2] .. B[k]``.
    """

    a: int
    b: int
    quotients: Tuple[int, ...]
    remainders: Tuple[int, ...]
    conv_num: Tuple[int, ...]
    conv_den: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.quotients) - 1

    def _check(self, j: int, lo: int, hi: int) -> None:
        if not lo <= j <= hi:
            raise IndexError(f"index {j} outside [{lo}, {hi}]")

    def q(self, j: int) -> int:
        self._check(j, 0, self.k)
        return self.quotients[j]

    def r(self, j: int) -> int:
        self._check(j, -1, self.k + 1)
        return self.remainders[j + 1]

    def A(self, j: int) -> int:
        self._check(j, -2, self.k)
        return self.conv_num[j + 2]

    def B(self, j: int) -> int:
        self._check(j, -2, self.k)
        return self.conv_den[j + 2]

    @property
    def gcd(self) -> int:
        return self.r(self.k)


def expand(a: int, b: int) -> Antenaresis:
    """Run the division chain on ``a/b`` and record every step.

    >>> expand(367, 1187).quotients
    (0, 3, 4, 3, 1, 2, 1, 5)
    """
    if b < 2:
        raise ValueError(f"denominator must be >= 2, got {b}")
    if a < 0:
        raise ValueError(f"numerator must be non-negative, got {a}")
    quotients = []
    remainders = [a, b]
    A = [0, 1]
    B = [1, 0]
    # bound appends: this loop is the hot path of every solver
    push_q, push_r, push_a, push_b = quotients.append, remainders.append, A.append, B.append
    a0, a1, b0, b1 = 0, 1, 1, 0
    prev, cur = a, b
    while cur:
        q = prev // cur
        prev, cur = cur, prev - q * cur
        a0, a1 = a1, q * a1 + a0
        b0, b1 = b1, q * b1 + b0
        push_q(q)
        push_r(cur)
        push_a(a1)
        push_b(b1)
    return Antenaresis(a, b, tuple(quotients), tuple(remainders), tuple(A), tuple(B))


def find_nu(exp: Antenaresis, m: int) -> int:
    """Index ``nu`` with ``r[nu+1]**2 <= m < r[nu]**2``.

    The remainders strictly decrease from ``r[0] = m`` down to ``r[k] = 1``
    when the trace was built from a unit ``w`` modulo ``m``, so the index is
    unique.
    """
    for j in range(0, exp.k + 1):
        if exp.r(j + 1) ** 2 <= m < exp.r(j) ** 2:
            return j
    raise ValueError(f"no index nu with r[nu+1]^2 <= {m} < r[nu]^2 in this trace")


def find_mu(exp: Antenaresis, m: int) -> int:
    """Index ``mu`` with ``B[mu]**2 <= m < B[mu+1]**2``."""
    for j in range(0, exp.k):
        if exp.B(j) ** 2 <= m < exp.B(j + 1) ** 2:
            return j
    raise ValueError(f"no index mu with B[mu]^2 <= {m} < B[mu+1]^2 in this trace")


_expand_cached = lru_cache(maxsize=4096)(expand)


def lemma_bound_check(a: int, b: int, P: int, Q: int, lam: int) -> bool:
    """Check the best-approximation bound for one instance.

    If ``|a*Q - b*P| < r[lam]`` and ``Q != 0`` then ``B[lam] <= |Q|`` must hold.
    Returns whether the implication holds (it always should).
    """
    exp = _expand_cached(a, b)
    if not -1 <= lam <= exp.k:
        raise IndexError(f"lambda={lam} outside [-1, {exp.k}]")
    premise = abs(a * Q - b * P) < exp.r(lam) and Q != 0
    return not premise or exp.B(lam) <= abs(Q)


def is_palindromic(exp: Antenaresis) -> bool:
    """True iff the quotient sequence reads the same reversed.

    A leading zero quotient (value below 1) is ignored.
    """
    qs = exp.quotients
    if qs and qs[0] == 0:
        qs = qs[1:]
    return qs == qs[::-1]


def bezout_from_trace(exp: Antenaresis) -> Tuple[int, int]:
    """Return ``(s, t)`` with ``s*a - t*b == gcd(a, b)``, read off the
    penultimate convergent.

    For 367/1187 this is ``(207, 64)``: ``207*367 - 64*1187 == 1``.
    """
    k = exp.k
    # a*B[k-1] - b*A[k-1] = (-1)**(k-1) * gcd
    s, t = exp.B(k - 1), exp.A(k - 1)
    if (k - 1) % 2:
        s, t = -s, -t
    return s, t
