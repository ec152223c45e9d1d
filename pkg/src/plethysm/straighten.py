"""Garnir straightening of column tabloids.

Tableaux are handled here as tuples of columns (each an increasing tuple of
entries). For a fixed shape, comparing these tuples lexicographically is the
same as comparing column-reading words, which is the canonical tableau order.

The rewrite rule: at the first violation ``t(i,j) > t(i,j+1)`` in
column-reading order, take ``A`` = boxes ``(i..end, j)`` and ``B`` = boxes
``(1..i, j+1)``. The Garnir relation sums ``sgn(sigma) |t.sigma|`` over the
exchanges of equal-size subsets of ``A`` and ``B``; solving for the identity
term writes ``e(t)`` through strictly smaller tableaux.
"""

from __future__ import annotations

import heapq
import itertools
from functools import lru_cache

from .shapes import permutation_sign


def cols_is_semistandard(cols) -> bool:
    """Rows weakly increasing (columns are assumed strictly increasing)."""
    return first_violation(cols) is None


def first_violation(cols):
    """First ``(j, i)`` (0-based column, row) with ``t(i,j) > t(i,j+1)``."""
    for j in range(len(cols) - 1):
        left, right = cols[j], cols[j + 1]
        for i in range(len(right)):
            if left[i] > right[i]:
                return j, i
    return None


def sort_columns(cols):
    """Sort each column; return ``(sorted cols, sign)`` or ``(None, 0)`` on a repeat."""
    sign = 1
    out = []
    for col in cols:
        s = tuple(sorted(col))
        for a, b in zip(s, s[1:]):
            if a == b:
                return None, 0
        if s != col:
            sign *= permutation_sign(col)
        out.append(s)
    return tuple(out), sign


def garnir_exchanges(cols, j: int, i: int):
    """All ``(tableau, sign)`` pairs of the Garnir relation at ``(j, i)``.

    The identity exchange comes first with sign +1. Tableaux are returned as
    raw (unsorted) column tuples.
    """
    left, right = cols[j], cols[j + 1]
    a_pos = list(range(i, len(left)))
    b_pos = list(range(0, i + 1))
    out = []
    for k in range(0, min(len(a_pos), len(b_pos)) + 1):
        for a_sub in itertools.combinations(a_pos, k):
            for b_sub in itertools.combinations(b_pos, k):
                new_left = list(left)
                new_right = list(right)
                for x, y in zip(a_sub, b_sub):
                    new_left[x], new_right[y] = right[y], left[x]
                new = cols[:j] + (tuple(new_left), tuple(new_right)) + cols[j + 2:]
                out.append((new, -1 if k % 2 else 1))
    return out


def garnir_relation(cols, j: int, i: int) -> dict:
    """The Garnir relation as a combination of column-standard tableaux."""
    out: dict = {}
    for new, sign in garnir_exchanges(cols, j, i):
        srt, s = sort_columns(new)
        if srt is None:
            continue
        out[srt] = out.get(srt, 0) + sign * s
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=1 << 20)
def garnir_rewrite(cols) -> tuple:
    """One straightening step for a column-standard, non-semistandard tableau.

    Returns ``((smaller tableau, integer coefficient), ...)`` with
    ``e(cols) = sum coefficient * e(smaller tableau)``.
    """
    v = first_violation(cols)
    if v is None:
        raise ValueError("tableau is already semistandard")
    j, i = v
    rel = garnir_relation(cols, j, i)
    own = rel.pop(cols)
    if own != 1:  # the identity exchange is the only way to reproduce cols
        raise AssertionError("unexpected Garnir relation")
    out = []
    for new, c in sorted(rel.items()):
        if not new < cols:
            raise AssertionError("straightening step failed to decrease the order")
        out.append((new, -c))
    return tuple(out)


def _neg_word(cols):
    return tuple(-x for col in cols for x in col)


def straighten(combo: dict, ring) -> dict:
    """Rewrite a combination of column-standard tableaux in the SSYT basis.

    ``combo`` maps column tuples to raw coefficients of ``ring``. The result
    maps semistandard column tuples to nonzero coefficients.
    """
    is_zero, add, mul, neg, from_int = ring.is_zero, ring.add, ring.mul, ring.neg, ring.from_int
    pending = {k: v for k, v in combo.items() if not is_zero(v)}
    heap = [(_neg_word(k), k) for k in pending]
    heapq.heapify(heap)
    out = {}
    int_cache: dict = {}
    while heap:
        _, cols = heapq.heappop(heap)
        c = pending.pop(cols)
        if is_zero(c):
            continue
        if first_violation(cols) is None:
            out[cols] = c
            continue
        for new, s in garnir_rewrite(cols):
            if s == 1:
                term = c
            elif s == -1:
                term = neg(c)
            else:
                rs = int_cache.get(s)
                if rs is None:
                    rs = int_cache[s] = from_int(s)
                term = mul(c, rs)
            if new in pending:
                pending[new] = add(pending[new], term)
            else:
                pending[new] = term
                heapq.heappush(heap, (_neg_word(new), new))
    return out


@lru_cache(maxsize=1 << 16)
def straighten_integral(cols) -> tuple:
    """Straightening of a single column-standard tableau over the integers."""
    result = straighten({cols: 1}, _INTEGERS)
    return tuple(sorted(result.items()))


class _IntegerRing:
    zero = 0
    one = 1

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def from_int(n):
        return n


_INTEGERS = _IntegerRing()
