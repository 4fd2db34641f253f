"""Brute-force ground truth for ``x**2 + d*y**2 = m``.

Nothing here touches continued fractions or modular roots; it only scans
``y`` and tests whether the rest is a perfect square. Slow by design.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Dict, List

from .cornacchia import Representation


def brute_solutions(d: int, m: int) -> List[Representation]:
    """Every ``(x, y)`` with ``x, y >= 0`` and ``x**2 + d*y**2 == m``, sorted."""
    if d < 1 or m < 1:
        raise ValueError(f"need d >= 1 and m >= 1, got d={d}, m={m}")
    out = []
    for y in range(math.isqrt(m // d) + 1):
        rest = m - d * y * y
        x = math.isqrt(rest)
        if x * x == rest:
            out.append(Representation(x, y, d, m, math.gcd(x, y) == 1))
    return sorted(out, key=lambda r: (r.x, r.y))


def brute_proper(d: int, m: int) -> List[Representation]:
    return [r for r in brute_solutions(d, m) if r.proper]


def brute_table(d: int, limit: int) -> Dict[int, List[Representation]]:
    """``brute_solutions(d, m)`` for every ``1 <= m <= limit`` at once, by
    walking the lattice points under the ellipse instead of scanning each m.
    """
    table: Dict[int, List[Representation]] = defaultdict(list)
    for y in range(math.isqrt(limit // d) + 1):
        dy2 = d * y * y
        for x in range(math.isqrt(limit - dy2) + 1):
            m = x * x + dy2
            if m:
                table[m].append(Representation(x, y, d, m, math.gcd(x, y) == 1))
    for reps in table.values():
        reps.sort(key=lambda r: (r.x, r.y))
    return dict(table)
