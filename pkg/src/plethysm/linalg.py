"""Sparse exact linear algebra on column-stored matrices.

A matrix is a list of columns; column ``j`` is a dict ``{row: raw value}``
with no stored zeros. Values live in a field or in a :class:`PolyRing`.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .field import PrimeField

DENSE_LIMIT = 4_000_000


def sparse_add_into(target: dict, source: dict, scale, ring):
    """``target += scale * source`` in place, dropping zeros."""
    if ring.is_zero(scale):
        return target
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    one = ring.one
    for k, v in source.items():
        term = v if scale == one else mul(scale, v)
        if k in target:
            s = add(target[k], term)
            if is_zero(s):
                del target[k]
            else:
                target[k] = s
        elif not is_zero(term):
            target[k] = term
    return target


def sparse_scale(vec: dict, scale, ring) -> dict:
    if ring.is_zero(scale):
        return {}
    mul, is_zero = ring.mul, ring.is_zero
    out = {}
    for k, v in vec.items():
        w = mul(scale, v)
        if not is_zero(w):
            out[k] = w
    return out


def identity(n: int, ring) -> list:
    return [{j: ring.one} for j in range(n)]


def matvec(matrix: list, vec: dict, ring) -> dict:
    out: dict = {}
    for j, c in vec.items():
        sparse_add_into(out, matrix[j], c, ring)
    return out


def matmul(a: list, b: list, ring) -> list:
    """The product ``a @ b`` of column-stored matrices."""
    return [matvec(a, col, ring) for col in b]


def transpose(matrix: list, nrows: int) -> list:
    out = [dict() for _ in range(nrows)]
    for j, col in enumerate(matrix):
        for i, v in col.items():
            out[i][j] = v
    return out


def map_ring(matrix: list, func, ring) -> list:
    """Apply ``func`` to every entry, moving to ``ring`` (drops zeros)."""
    out = []
    for col in matrix:
        new = {}
        for i, v in col.items():
            w = func(v)
            if not ring.is_zero(w):
                new[i] = w
        out.append(new)
    return out


def first_difference(a: list, b: list):
    """First ``(column, row)`` where two matrices differ, or None."""
    for j, (ca, cb) in enumerate(zip(a, b)):
        if ca != cb:
            for r in sorted(set(ca) | set(cb)):
                if ca.get(r) != cb.get(r):
                    return j, r
    if len(a) != len(b):
        return min(len(a), len(b)), None
    return None


def to_dense(matrix: list, nrows: int, field) -> np.ndarray:
    dense = np.zeros((nrows, len(matrix)), dtype=np.int64)
    for j, col in enumerate(matrix):
        for i, v in col.items():
            dense[i, j] = v
    return dense


class Echelon:
    """Incrementally reduced set of sparse vectors over a field.

    Each stored vector has a pivot key with coefficient one; ``reduce``
    returns the remainder of a vector modulo the span together with the
    combination of inserted vectors that was subtracted.
    """

    def __init__(self, field, track: bool = False):
        self.field = field
        self.pivots: dict = {}
        self.track = track
        self.combos: dict = {}
        self.count = 0

    def _reduce(self, vec: dict):
        F = self.field
        vec = dict(vec)
        combo: dict = {}
        pivots = self.pivots
        done = set()
        while True:
            keys = [k for k in vec if k in pivots and k not in done]
            if not keys:
                break
            k = min(keys)
            c = vec[k]
            sparse_add_into(vec, pivots[k], F.neg(c), F)
            if self.track:
                sparse_add_into(combo, self.combos[k], F.neg(c), F)
            done.add(k)
        return vec, combo

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True if it was independent."""
        F = self.field
        index = self.count
        self.count += 1
        rem, combo = self._reduce(vec)
        if not rem:
            return False
        k = min(rem)
        inv = F.inv(rem[k])
        rem = sparse_scale(rem, inv, F)
        if self.track:
            combo = dict(combo)
            sparse_add_into(combo, {index: F.one}, F.one, F)
            combo = sparse_scale(combo, inv, F)
        # keep the pivot column clean in the other stored vectors
        for other_key, other in self.pivots.items():
            if k in other:
                c = other[k]
                sparse_add_into(other, rem, F.neg(c), F)
                if self.track:
                    sparse_add_into(self.combos[other_key], combo, F.neg(c), F)
        self.pivots[k] = rem
        if self.track:
            self.combos[k] = combo
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def express(self, vec: dict):
        """Coordinates of ``vec`` in the inserted vectors, or None if outside the span."""
        if not self.track:
            raise ValueError("construct with track=True to express vectors")
        F = self.field
        rem, combo = self._reduce(vec)
        if rem:
            return None
        return sparse_scale(combo, F.neg(F.one), F)


def rank(matrix: list, nrows: int, field) -> int:
    """Rank over ``field`` of a column-stored matrix with ``nrows`` rows."""
    if not matrix or nrows == 0:
        return 0
    if isinstance(field, PrimeField) and nrows * len(matrix) <= DENSE_LIMIT:
        return int(kernels.rank_mod_p(to_dense(matrix, nrows, field), field.p))
    ech = Echelon(field)
    for col in matrix:
        ech.add(col)
    return ech.rank
