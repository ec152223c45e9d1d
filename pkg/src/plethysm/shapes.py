"""Partitions, tableaux and the permutation combinatorics built on them.

Boxes are addressed ``(row, column)``, 1-based, in the English convention.
Tableaux of a fixed shape are totally ordered by their column-reading word
(columns left to right, each read top to bottom), compared lexicographically;
every basis indexed by tableaux uses this order.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterator, NamedTuple

from .errors import (
    DoesNotFitRectangle,
    EntryOutOfRange,
    NotColumnStandard,
    ParseError,
)


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1,1"``, ``"1^4"`` or mixtures such as ``"3,1^4"``."""
        body = text.strip()
        if body.startswith(("(", "[")) and body.endswith((")", "]")):
            body = body[1:-1]
        body = body.strip()
        if body in ("", "∅"):
            return cls(())
        parts = []
        for chunk in body.split(","):
            chunk = chunk.strip()
            m = re.fullmatch(r"(\d+)(?:\s*\^\s*(\d+))?", chunk)
            if not m:
                raise ParseError(f"bad partition component {chunk!r}", text, text.find(chunk))
            parts.extend([int(m.group(1))] * int(m.group(2) or 1))
        try:
            return cls(parts)
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from exc

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def boxes(self):
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def __str__(self):
        return ",".join(str(x) for x in self) if self else "∅"

    def __repr__(self):
        return f"Partition({tuple(self)})"


def conjugate(shape) -> Partition:
    """Conjugate partition: ``λ'_j = max{i : λ_i >= j}``."""
    shape = tuple(shape)
    if not shape:
        return Partition(())
    return Partition(sum(1 for r in shape if r >= j) for j in range(1, shape[0] + 1))


def complement_partition(shape, d: int, s: int) -> Partition:
    """Complement of ``shape`` in the ``d x s`` rectangle, rotated by 180 degrees."""
    shape = tuple(shape)
    if len(shape) > d or (shape and shape[0] > s):
        raise DoesNotFitRectangle(f"{shape} does not fit in a {d} x {s} rectangle")
    padded = list(shape) + [0] * (d - len(shape))
    return Partition(s - padded[d - 1 - i] for i in range(d))


class Tableau:
    """A filling of a Young diagram by positive integers (stored by rows)."""

    __slots__ = ("shape", "rows", "_cols", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        self.shape = Partition(len(r) for r in rows)
        self.rows = rows
        self._cols = None
        self._hash = None

    @classmethod
    def from_columns(cls, columns) -> "Tableau":
        columns = [tuple(c) for c in columns]
        height = max((len(c) for c in columns), default=0)
        rows = [[c[i] for c in columns if len(c) > i] for i in range(height)]
        t = cls(rows)
        if len(t.columns) != len([c for c in columns if c]):
            raise ValueError("columns do not form a Young diagram")
        return t

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """Parse the ``"1 2 2 / 3 3"`` text format."""
        body = text.strip()
        if body.startswith("|") and body.endswith("|") and len(body) >= 2:
            body = body[1:-1].strip()
        if body in ("", "∅"):
            return cls(())
        rows = []
        for chunk in body.split("/"):
            items = chunk.replace(",", " ").split()
            try:
                rows.append([int(x) for x in items])
            except ValueError as exc:
                raise ParseError(f"bad tableau row {chunk!r}", text, text.find(chunk)) from exc
        try:
            return cls(rows)
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from exc

    @property
    def columns(self) -> tuple:
        if self._cols is None:
            rows = self.rows
            width = len(rows[0]) if rows else 0
            self._cols = tuple(
                tuple(row[j] for row in rows if len(row) > j) for j in range(width)
            )
        return self._cols

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def items(self):
        for i, row in enumerate(self.rows, start=1):
            for j, x in enumerate(row, start=1):
                yield (i, j), x

    def entries(self) -> list:
        return [x for row in self.rows for x in row]

    def column_word(self) -> tuple:
        return tuple(x for col in self.columns for x in col)

    def sort_key(self):
        return (tuple(self.shape), self.column_word())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __str__(self):
        if not self.rows:
            return "∅"
        return " / ".join(" ".join(str(x) for x in row) for row in self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"


class TableauClass(NamedTuple):
    row_semistandard: bool
    column_standard: bool
    semistandard: bool


def is_column_standard(t: Tableau) -> bool:
    return all(all(a < b for a, b in zip(c, c[1:])) for c in t.columns)


def is_row_semistandard(t: Tableau) -> bool:
    return all(all(a <= b for a, b in zip(r, r[1:])) for r in t.rows)


def classify_tableau(t: Tableau) -> TableauClass:
    row = is_row_semistandard(t)
    col = is_column_standard(t)
    return TableauClass(row, col, row and col)


def _increasing_columns(length: int, n: int):
    return list(itertools.combinations(range(1, n + 1), length))


def enumerate_tableaux(shape, n: int, kind: str = "SSYT") -> list:
    """All SSYT or CSYT of ``shape`` with entries in ``{1..n}``, canonically ordered."""
    if kind not in ("SSYT", "CSYT"):
        raise ValueError(f"unknown tableau kind {kind!r}")
    shape = Partition(shape)
    colshape = conjugate(shape)
    if not shape:
        return [Tableau(())]
    if colshape[0] > n:
        return []
    candidates = {c: _increasing_columns(c, n) for c in set(colshape)}
    out = []

    if kind == "CSYT":
        for cols in itertools.product(*(candidates[c] for c in colshape)):
            out.append(Tableau.from_columns(cols))
        return out

    def extend(prefix):
        j = len(prefix)
        if j == len(colshape):
            out.append(Tableau.from_columns(prefix))
            return
        prev = prefix[-1] if prefix else None
        for col in candidates[colshape[j]]:
            if prev is not None and any(col[i] < prev[i] for i in range(len(col))):
                continue
            prefix.append(col)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def count_ssyt(shape, n: int) -> int:
    """Number of SSYT via the hook-content formula."""
    shape = Partition(shape)
    colshape = conjugate(shape)
    num, den = 1, 1
    for i, row in enumerate(shape):
        for j in range(row):
            num *= n + j - i
            den *= (row - j - 1) + (colshape[j] - i - 1) + 1
    return num // den


def complement_tableau(t: Tableau, d: int, s: int) -> Tableau:
    """The tableau whose column ``s+1-j`` holds the complement of column j of ``t``."""
    if not is_column_standard(t):
        raise NotColumnStandard(f"{t} is not column standard")
    if any(x < 1 or x > d for x in t.entries()):
        raise EntryOutOfRange(f"entries of {t} must lie in 1..{d}")
    complement_partition(t.shape, d, s)
    cols = list(t.columns) + [()] * (s - len(t.columns))
    full = set(range(1, d + 1))
    new_cols = [tuple(sorted(full - set(cols[s - 1 - j]))) for j in range(s)]
    return Tableau.from_columns([c for c in new_cols if c])


def surplus(t: Tableau) -> int:
    """``S(t) = sum over boxes of (t(i,j) - i)``."""
    return sum(x - i for (i, _), x in t.items())


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (entries assumed distinct)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def column_sort(t: Tableau):
    """Sort every column ascending.

    Returns ``(sorted tableau, sign, ok)``; ``ok`` is False (and the sign 0)
    when some column has a repeated entry.
    """
    sign = 1
    cols = []
    for col in t.columns:
        if len(set(col)) != len(col):
            return t, 0, False
        sign *= permutation_sign(col)
        cols.append(tuple(sorted(col)))
    return Tableau.from_columns(cols), sign, True


def distinct_permutations(seq) -> Iterator[tuple]:
    """Distinct rearrangements of ``seq`` in lexicographic order."""
    items = sorted(seq)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


def stabilizer_coset_reps(index) -> list:
    """One permutation per coset of the place-permutation stabilizer of ``index``.

    Each permutation ``w`` is a 1-based one-line tuple; acting by it gives the
    rearrangement ``(index[w(1)-1], ..., index[w(m)-1])``. Distinct
    representatives give distinct rearrangements, and every rearrangement
    occurs, so there are ``m! / |Stab(index)|`` of them.
    """
    index = tuple(index)
    reps = []
    for arrangement in distinct_permutations(index):
        used = [False] * len(index)
        w = []
        for value in arrangement:
            for k, x in enumerate(index):
                if not used[k] and x == value:
                    used[k] = True
                    w.append(k + 1)
                    break
        reps.append(tuple(w))
    return reps


def act_on_multiindex(index, w) -> tuple:
    return tuple(index[k - 1] for k in w)


class BoxPermutation(NamedTuple):
    """A permutation of boxes; ``mapping`` sends a box to its image."""

    mapping: dict
    sign: int


def column_place_permutations(shape) -> Iterator[BoxPermutation]:
    """All permutations of boxes preserving every column, with signs."""
    colshape = conjugate(shape)
    per_column = [list(itertools.permutations(range(1, h + 1))) for h in colshape]
    for choice in itertools.product(*per_column):
        mapping = {}
        sign = 1
        for j, perm in enumerate(choice, start=1):
            sign *= permutation_sign(perm)
            for i, image in enumerate(perm, start=1):
                mapping[(i, j)] = (image, j)
        yield BoxPermutation(mapping, sign)


def apply_box_permutation(t: Tableau, sigma: BoxPermutation) -> Tableau:
    """The filling ``t . sigma``: box b receives the entry of ``sigma(b)``."""
    rows = [list(r) for r in t.rows]
    for (i, j), (k, l) in sigma.mapping.items():
        rows[i - 1][j - 1] = t.entry(k, l)
    return Tableau(rows)
