"""Exhaustive sweeps shared by the property tests and the acceptance suite."""

from __future__ import annotations

import contextlib
import gc
import itertools
import random

import numpy as np

from quadrep.contfrac import expand, lemma_bound_check


def check_traces(b_max: int = 2000, chunk: int = 100) -> int:
    """Check the division chain, the determinant identity and remainder
    recovery on ``expand(a, b)`` for all ``2 <= b <= b_max``, ``0 <= a < b``.

    The traces come from the library; only the bookkeeping is vectorized.
    Returns the number of traces checked.
    """
    with _gc_paused():
        return _check_traces(b_max, chunk)


@contextlib.contextmanager
def _gc_paused():
    # millions of short tuples alive at once make the cyclic GC rescan constantly
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def _check_traces(b_max: int, chunk: int) -> int:
    count = 0
    for lo in range(2, b_max + 1, chunk):
        # stream each trace into flat buffers so no trace outlives its step
        qs, rs, As, Bs, lens, rec_a, rec_b = [], [], [], [], [], [], []
        ext_q, ext_r, ext_a, ext_b = qs.extend, rs.extend, As.extend, Bs.extend
        push_len, push_a, push_b = lens.append, rec_a.append, rec_b.append
        for bb in range(lo, min(lo + chunk, b_max + 1)):
            for aa in range(bb):
                _, _, tq, tr, ta, tb = expand(aa, bb)
                ext_q(tq)
                ext_r(tr)
                ext_a(ta)
                ext_b(tb)
                push_len(len(ta))
                push_a(aa)
                push_b(bb)
        n_rec = len(lens)
        lengths = np.array(lens, dtype=np.int64)
        rec_a = np.array(rec_a, dtype=np.int64)
        rec_b = np.array(rec_b, dtype=np.int64)
        A = np.array(As, dtype=np.int64)
        B = np.array(Bs, dtype=np.int64)
        r = np.array(rs, dtype=np.int64)
        q = np.array(qs, dtype=np.int64)
        del qs, rs, As, Bs
        rec_start = np.cumsum(lengths) - lengths
        pos = np.arange(len(A)) - np.repeat(rec_start, lengths)
        # stored index i holds A_{i-2}, B_{i-2} and r_{i-1}
        a = np.repeat(rec_a, lengths)
        b = np.repeat(rec_b, lengths)
        sign = np.where(pos % 2 == 0, 1, -1)
        first = pos == 0

        # seeds
        assert np.all(A[first] == 0) and np.all(B[first] == 1)
        assert np.all(A[pos == 1] == 1) and np.all(B[pos == 1] == 0)
        assert np.all(r[first] == rec_a) and np.all(r[pos == 1] == rec_b)

        # A_j B_{j-1} - A_{j-1} B_j = (-1)^(j-1) for -1 <= j <= k
        tail = ~first
        det = A[1:] * B[:-1] - A[:-1] * B[1:]
        assert np.all(det[tail[1:]] == -sign[1:][tail[1:]])

        # r_{j+1} = (-1)^j (a B_j - b A_j) for -1 <= j <= k
        assert np.all(r[tail] == sign[tail] * (a[tail] * B[tail] - b[tail] * A[tail]))

        # r_{j-1} = q_j r_j + r_{j+1}, 0 <= r_{j+1} < r_j, for 0 <= j <= k
        steps = lengths - 2
        j = np.arange(len(q)) - np.repeat(np.cumsum(steps) - steps, steps)
        base = np.repeat(rec_start, steps) + j
        r_prev, r_cur, r_next = r[base], r[base + 1], r[base + 2]
        assert np.all(r_prev == q * r_cur + r_next)
        assert np.all((0 <= r_next) & (r_next < r_cur))

        # r_{k+1} = 0, r_k = gcd(a, b), and A_k / B_k is a/b in lowest terms
        ends = rec_start + lengths - 1
        gcds = np.gcd(rec_a, rec_b)
        assert np.all(r[ends] == 0)
        assert np.all(r[ends - 1] == gcds)
        assert np.all(A[ends] == rec_a // gcds) and np.all(B[ends] == rec_b // gcds)
        count += n_rec
    return count


def check_lemma(b_max: int = 40, q_max: int = 40) -> int:
    """Run ``lemma_bound_check`` over every ``2 <= b <= b_max``,
    ``0 <= a <= 2b``, ``0 < |Q| <= q_max`` and every index.

    For indices ``>= 0`` the premise ``|aQ - bP| < r_lam <= b`` can only hold
    for ``P`` within one of ``aQ/b``, so those two values of ``P`` cover all
    non-vacuous cases; one far-off ``P`` is added as a vacuous control.
    Returns the number of instances checked.
    """
    n = 0
    for b in range(2, b_max + 1):
        for a in range(0, 2 * b + 1):
            k = len(expand(a, b).quotients) - 1
            for Q in itertools.chain(range(-q_max, 0), range(1, q_max + 1)):
                base = (a * Q) // b
                for P in (base, base + 1, base + 2 * b):
                    for lam in range(-1, k + 1):
                        assert lemma_bound_check(a, b, P, Q, lam), (a, b, P, Q, lam)
                        n += 1
    return n


def check_lemma_random(samples: int = 20000, seed: int = 1) -> int:
    """Seeded draws with ``2 <= b <= 10**4``, ``0 <= a <= 10**4`` and
    ``|P|, |Q| <= 10**3``, checked at every index.

    Half the draws take ``P`` next to ``aQ/b`` (clipped to the box) so the
    premise is not almost always vacuous.
    """
    rng = random.Random(seed)
    n = 0
    for i in range(samples):
        a, b = rng.randint(0, 10**4), rng.randint(2, 10**4)
        Q = rng.randint(-(10**3), 10**3)
        if i % 2:
            P = max(-(10**3), min(10**3, (a * Q) // b + rng.randint(0, 1)))
        else:
            P = rng.randint(-(10**3), 10**3)
        k = len(expand(a, b).quotients) - 1
        for lam in range(-1, k + 1):
            assert lemma_bound_check(a, b, P, Q, lam), (a, b, P, Q, lam)
            n += 1
    return n
