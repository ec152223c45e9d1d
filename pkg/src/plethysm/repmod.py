"""Representations of GL2 and SL2 described by constructor trees.

Every :class:`Rep` has an ordered canonical basis of torus eigenvectors. Group
elements act on column coordinate vectors: column ``j`` of ``matrix(g)`` is
``g . basis[j]``. On the natural module ``E`` with basis ``[Y, X]``,
``(a, b; c, d)`` sends ``X`` to ``aX + cY`` and ``Y`` to ``bX + dY``.

Basis labels:

* ``E``: the strings ``"Y"`` and ``"X"`` (in this order);
* ``SymUpper``/``SymLower``/``Wedge``: weakly/weakly/strictly decreasing tuples
  of indices into the inner basis, sorted lexicographically; for
  ``SymUpper(l, E)`` the index ``i`` is the monomial ``X^i Y^(l-i)``;
* ``Tensor``: pairs of inner indices; ``TensorPower``: tuples of indices;
* ``Nabla``: semistandard :class:`Tableau` with entries ``1..dim`` (entry ``e``
  is inner basis vector ``e-1``); ``Tabloids``: column-standard tableaux;
* ``Dual``/``ContraDual``/``Delta``: the labels of the underlying basis;
* ``DetPower``: the empty tuple.

Coefficients are raw field values (see :mod:`plethysm.field`); acting with
an element over ``PolyRing(field)`` yields polynomial coefficients.
"""

from __future__ import annotations

import bisect
import itertools
import re
import threading
from math import comb

from . import kernels
from .errors import (
    EntryOutOfRange,
    FieldMismatch,
    ParseError,
    SingularMatrix,
    UnsupportedConstructor,
)
from .field import Field, FieldElement, PolyRing, Polynomial, PrimeField
from .linalg import sparse_add_into, transpose
from .shapes import (
    Partition,
    Tableau,
    apply_box_permutation,
    column_place_permutations,
    enumerate_tableaux,
    permutation_sign,
)
from .straighten import sort_columns, straighten

# ---------------------------------------------------------------------------
# Group elements


class GroupElement:
    """A 2x2 matrix ``(a, b; c, d)`` over a field or a polynomial ring."""

    __slots__ = ("ring", "a", "b", "c", "d", "det", "key")

    def __init__(self, ring, a, b, c, d):
        self.ring = ring
        self.a, self.b, self.c, self.d = a, b, c, d
        self.det = ring.sub(ring.mul(a, d), ring.mul(b, c))
        if ring.is_zero(self.det):
            raise SingularMatrix("group elements need a nonzero determinant")
        self.key = (ring.key, a, b, c, d)

    @classmethod
    def of(cls, field: Field, a, b, c, d) -> "GroupElement":
        return cls(field, *(field.coerce(x) for x in (a, b, c, d)))

    @classmethod
    def identity(cls, ring) -> "GroupElement":
        return cls(ring, ring.one, ring.zero, ring.zero, ring.one)

    @classmethod
    def J(cls, ring) -> "GroupElement":
        return cls(ring, ring.zero, ring.one, ring.neg(ring.one), ring.zero)

    @classmethod
    def M(cls, ring, gamma) -> "GroupElement":
        """The lower unitriangular matrix ``(1, 0; gamma, 1)``."""
        if isinstance(gamma, (FieldElement, Polynomial)):
            gamma = gamma.raw if isinstance(gamma, FieldElement) else gamma.coeffs
        elif isinstance(gamma, int):
            gamma = ring.from_int(gamma)
        return cls(ring, ring.one, ring.zero, gamma, ring.one)

    @classmethod
    def M_symbolic(cls, field: Field) -> "GroupElement":
        ring = PolyRing(field)
        return cls(ring, ring.one, ring.zero, ring.gen, ring.one)

    @classmethod
    def torus(cls, ring, alpha) -> "GroupElement":
        return cls(ring, alpha, ring.zero, ring.zero, ring.inv(alpha))

    @property
    def field(self):
        return self.ring.field if isinstance(self.ring, PolyRing) else self.ring

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def is_special(self) -> bool:
        return self.det == self.ring.one

    def inverse(self) -> "GroupElement":
        R = self.ring
        try:
            inv = R.inv(self.det)
        except ZeroDivisionError as exc:
            raise SingularMatrix("determinant is not invertible") from exc
        return GroupElement(
            R, R.mul(self.d, inv), R.neg(R.mul(self.b, inv)), R.neg(R.mul(self.c, inv)), R.mul(self.a, inv)
        )

    def transpose(self) -> "GroupElement":
        return GroupElement(self.ring, self.a, self.c, self.b, self.d)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.ring != self.ring:
            raise FieldMismatch("group elements over different rings")
        R = self.ring
        a = R.add(R.mul(self.a, other.a), R.mul(self.b, other.c))
        b = R.add(R.mul(self.a, other.b), R.mul(self.b, other.d))
        c = R.add(R.mul(self.c, other.a), R.mul(self.d, other.c))
        d = R.add(R.mul(self.c, other.b), R.mul(self.d, other.d))
        return GroupElement(R, a, b, c, d)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        f = self.ring.format_raw
        return f"{f(self.a)},{f(self.b)};{f(self.c)},{f(self.d)}"

    def __repr__(self):
        return f"GroupElement({self})"


# ---------------------------------------------------------------------------
# label rendering helpers

_OPS = set("⊗∧·")


def _top_level_has(s: str, chars=_OPS) -> bool:
    depth = 0
    for ch in s:
        if ch in "([|":
            depth += 1 if ch != "|" else 0
        if ch in ")]":
            depth -= 1
        if depth == 0 and ch in chars:
            return True
    return False


def _wrap(s: str) -> str:
    return f"({s})" if _top_level_has(s) else s


def _enclosed(s: str) -> bool:
    if not s.startswith("("):
        return False
    depth = 0
    for k, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return k == len(s) - 1 or s[k + 1:] == "_sym"
    return False


def _postfix(s: str, mark: str) -> str:
    if re.fullmatch(r"[A-Za-z]", s) or _enclosed(s) or re.fullmatch(r"e\(.*\)", s):
        return s + mark
    return f"({s}){mark}"


def _monomial(exponents) -> str:
    """Render ``[("X", 2), ("Y", 1)]`` as ``X^2Y``."""
    parts = []
    for name, e in exponents:
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts) or "1"


# ---------------------------------------------------------------------------
# expansion helpers shared by the functorial constructors


def _insert_desc(mono: tuple, j: int) -> tuple:
    k = 0
    while k < len(mono) and mono[k] >= j:
        k += 1
    return mono[:k] + (j,) + mono[k:]


def sym_product(vectors, ring) -> dict:
    """Product of vectors in the symmetric algebra, keyed by decreasing tuples."""
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    cur = {(): ring.one}
    for vec in vectors:
        nxt: dict = {}
        for mono, c in cur.items():
            for j, a in vec.items():
                key = _insert_desc(mono, j)
                t = mul(c, a)
                if key in nxt:
                    s = add(nxt[key], t)
                    if is_zero(s):
                        del nxt[key]
                    else:
                        nxt[key] = s
                elif not is_zero(t):
                    nxt[key] = t
        cur = nxt
        if not cur:
            break
    return cur


def _counts(mono: tuple) -> dict:
    out: dict = {}
    for x in mono:
        out[x] = out.get(x, 0) + 1
    return out


def _from_counts(counts: dict) -> tuple:
    return tuple(x for x in sorted(counts, reverse=True) for _ in range(counts[x]))


def divided_mul(p: dict, q: dict, ring) -> dict:
    """Product of divided-power polynomials (keys are decreasing tuples)."""
    add, mul, is_zero, from_int = ring.add, ring.mul, ring.is_zero, ring.from_int
    out: dict = {}
    for m1, c1 in p.items():
        k1 = _counts(m1)
        for m2, c2 in q.items():
            k2 = _counts(m2)
            coeff = 1
            merged = dict(k1)
            for x, n in k2.items():
                if x in merged:
                    coeff *= comb(merged[x] + n, n)
                    merged[x] += n
                else:
                    merged[x] = n
            t = mul(mul(c1, c2), from_int(coeff)) if coeff != 1 else mul(c1, c2)
            if is_zero(t):
                continue
            key = _from_counts(merged)
            s = add(out[key], t) if key in out else t
            if is_zero(s):
                out.pop(key, None)
            else:
                out[key] = s
    return out


def divided_power(vec: dict, c: int, ring) -> dict:
    """``vec^(c)`` in the divided power algebra."""
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    support = sorted(vec, reverse=True)
    out: dict = {}
    for choice in itertools.combinations_with_replacement(support, c):
        coeff = ring.one
        for x in choice:
            coeff = mul(coeff, vec[x])
        if is_zero(coeff):
            continue
        out[choice] = add(out[choice], coeff) if choice in out else coeff
    return {k: v for k, v in out.items() if not is_zero(v)}


def wedge_product(vectors, ring, increasing: bool = False) -> dict:
    """Exterior product of vectors in order, normalised to sorted index tuples.

    Keys are strictly decreasing tuples, or strictly increasing ones when
    ``increasing`` is set; the basis wedge lists its indices in key order.
    """
    if isinstance(ring, PrimeField) and all(max(v, default=0) < 62 for v in vectors):
        packed = [(list(v.keys()), list(v.values())) for v in vectors]
        raw = kernels.wedge_expand_mod_p(packed, ring.p)
        r = len(vectors)
        flip = -1 if (r * (r - 1) // 2) % 2 else 1
        out = {}
        for mask, c in raw.items():
            idx = tuple(k for k in range(mask.bit_length()) if mask >> k & 1)
            if increasing:
                out[idx] = c
            else:
                out[idx[::-1]] = c if flip == 1 else (-c) % ring.p
        return out
    add, mul, neg, is_zero = ring.add, ring.mul, ring.neg, ring.is_zero
    cur = {(): ring.one}
    for vec in vectors:
        nxt: dict = {}
        for mono, c in cur.items():
            for j, a in vec.items():
                if j in mono:
                    continue
                if increasing:
                    pos = bisect.bisect_left(mono, j)
                    moves = len(mono) - pos
                    key = mono[:pos] + (j,) + mono[pos:]
                else:
                    pos = 0
                    while pos < len(mono) and mono[pos] > j:
                        pos += 1
                    moves = len(mono) - pos
                    key = mono[:pos] + (j,) + mono[pos:]
                t = mul(c, a)
                if moves % 2:
                    t = neg(t)
                if key in nxt:
                    s = add(nxt[key], t)
                    if is_zero(s):
                        del nxt[key]
                    else:
                        nxt[key] = s
                elif not is_zero(t):
                    nxt[key] = t
        cur = nxt
        if not cur:
            break
    return cur


# ---------------------------------------------------------------------------
# Representations


class Rep:
    """Base class of all representations."""

    kind = "Rep"

    def __init__(self, field: Field):
        self.field = field
        self._basis = None
        self._index = None
        self._weights = None
        self._lock = threading.Lock()
        self._matrices: dict = {}
        self._label_lookup = None

    # structure ------------------------------------------------------------
    def children(self) -> tuple:
        return ()

    def spec(self) -> str:
        raise NotImplementedError

    def key(self):
        return (self.spec(), self.field.key)

    def __eq__(self, other):
        return isinstance(other, Rep) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<Rep {self.spec()} over {self.field}>"

    def __str__(self):
        return self.spec()

    # basis ---------------------------------------------------------------
    def _compute_basis(self) -> list:
        raise NotImplementedError

    def basis(self) -> list:
        if self._basis is None:
            with self._lock:
                if self._basis is None:
                    labels = self._compute_basis()
                    self._index = {lab: k for k, lab in enumerate(labels)}
                    self._basis = labels
        return self._basis

    def index(self, label) -> int:
        self.basis()
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a basis label of {self.spec()}") from None

    @property
    def dim(self) -> int:
        return len(self.basis())

    def dimension(self) -> int:
        return self.dim

    # weights -------------------------------------------------------------
    def _compute_weights(self) -> list:
        raise NotImplementedError

    def weights(self) -> list:
        """Integer torus weight of every basis vector (``diag(t, 1/t)`` exponent)."""
        if self._weights is None:
            self._weights = self._compute_weights()
        return self._weights

    def degree(self) -> int:
        """Polynomial degree (negative for duals), used for determinant twists."""
        raise NotImplementedError

    def det_exponent(self) -> int:
        """``k`` with ``det(rho(g)) = det(g)^k``."""
        return self.degree() * self.dim // 2

    # action --------------------------------------------------------------
    def _check_ring(self, ring):
        base = ring.field if isinstance(ring, PolyRing) else ring
        if base != self.field:
            raise FieldMismatch(f"group element over {base} acting on a rep over {self.field}")

    def matrix(self, g: GroupElement) -> list:
        """Column-stored matrix of ``g`` on the canonical basis."""
        self._check_ring(g.ring)
        cached = self._matrices.get(g.key)
        if cached is None:
            cached = self._matrix(g)
            if len(self._matrices) > 64:
                self._matrices.clear()
            self._matrices[g.key] = cached
        return cached

    def _matrix(self, g: GroupElement) -> list:
        return [self.act_basis(g, j) for j in range(self.dim)]

    def act_basis(self, g: GroupElement, j: int) -> dict:
        """Coordinates of ``g . basis[j]``."""
        return self.matrix(g)[j]

    def lie_matrix(self, x) -> list:
        """Matrix of the Lie algebra element ``x = (a, b, c, d)`` (raw field values)."""
        raise UnsupportedConstructor(f"{self.kind} has no structural Lie algebra action")

    # labels --------------------------------------------------------------
    def format_label(self, label) -> str:
        raise NotImplementedError

    def label_string(self, j: int) -> str:
        return self.format_label(self.basis()[j])

    def _lookup(self) -> dict:
        if self._label_lookup is None:
            table = {}
            for j, lab in enumerate(self.basis()):
                table[normalize_label_text(self.format_label(lab))] = j
            self._label_lookup = table
        return self._label_lookup

    def parse_label(self, text: str):
        """Return ``(sign, index)`` for a label string (possibly reordered)."""
        norm = normalize_label_text(text)
        j = self._lookup().get(norm)
        if j is not None:
            return 1, j
        try:
            found = self._parse_label_structural(norm)
        except (KeyError, ValueError):
            found = None
        if found is None:
            raise ParseError(f"{text!r} is not a basis label of {self.spec()}", text, 0)
        return found

    def _parse_label_structural(self, norm: str):
        return None


def normalize_label_text(text: str) -> str:
    sup = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
    out = []
    run = ""
    for ch in text:
        if ch in "⁰¹²³⁴⁵⁶⁷⁸⁹":
            run += ch.translate(sup)
            continue
        if run:
            out.append("^" + run)
            run = ""
        out.append(ch)
    if run:
        out.append("^" + run)
    s = "".join(out)
    s = s.replace("&", "∧").replace("%", "⊗").replace("^*", "^∨").replace("^v", "^∨")
    s = s.replace(".", "·").replace("−", "-")
    if not s.startswith("|") and not s.startswith("e("):
        s = re.sub(r"\s+", "", s)
    else:
        s = re.sub(r"\s+", " ", s.strip())
    s = re.sub(r"\^1(?!\d)", "", s)
    return s


class NaturalE(Rep):
    """The natural two-dimensional module with basis ``[Y, X]``."""

    kind = "E"

    def spec(self):
        return "E"

    def _compute_basis(self):
        return ["Y", "X"]

    def _compute_weights(self):
        return [-1, 1]

    def degree(self):
        return 1

    def _matrix(self, g):
        R = g.ring

        def col(top, bottom):  # coefficients of X and Y
            out = {}
            if not R.is_zero(bottom):
                out[0] = bottom
            if not R.is_zero(top):
                out[1] = top
            return out

        return [col(g.b, g.d), col(g.a, g.c)]

    def lie_matrix(self, x):
        a, b, c, d = x
        F = self.field
        return [
            {k: v for k, v in ((0, d), (1, b)) if not F.is_zero(v)},
            {k: v for k, v in ((0, c), (1, a)) if not F.is_zero(v)},
        ]

    def format_label(self, label):
        return label


class _Functor(Rep):
    """Constructors applying a functor to one inner representation."""

    def __init__(self, r: int, inner: Rep):
        super().__init__(inner.field)
        if r < 0:
            raise ValueError("powers must be non-negative")
        self.r = r
        self.inner = inner

    def children(self):
        return (self.inner,)

    def _compute_weights(self):
        w = self.inner.weights()
        return [sum(w[i] for i in lab) for lab in self.basis()]

    def degree(self):
        return self.r * self.inner.degree()


class SymUpper(_Functor):
    """Symmetric power ``Sym^r`` (coinvariants); basis = monomials."""

    kind = "SymUpper"

    def spec(self):
        return f"sym^{self.r}({self.inner.spec()})"

    def _compute_basis(self):
        n = self.inner.dim
        labels = [tuple(sorted(c, reverse=True)) for c in itertools.combinations_with_replacement(range(n), self.r)]
        return sorted(labels)

    def _matrix(self, g):
        return self.induced(self.inner.matrix(g), self, g.ring)

    def induced(self, A, target, ring) -> list:
        """Columns of ``Sym^r(phi)`` into ``target`` for an inner matrix ``A``."""
        target.basis()
        idx = target._index
        out = []
        for lab in self.basis():
            prod = sym_product([A[i] for i in lab], ring)
            out.append({idx[k]: v for k, v in prod.items()})
        return out

    def lie_matrix(self, x):
        A = self.inner.lie_matrix(x)
        F = self.field
        self.basis()
        idx = self._index
        out = []
        for lab in self.basis():
            col: dict = {}
            for k in range(len(lab)):
                rest = lab[:k] + lab[k + 1:]
                for j, a in A[lab[k]].items():
                    key = _insert_desc(rest, j)
                    sparse_add_into(col, {idx[key]: a}, F.one, F)
            out.append(col)
        return out

    def format_label(self, label):
        if isinstance(self.inner, NaturalE):
            x = sum(1 for i in label if i == 1)
            return _monomial([("X", x), ("Y", len(label) - x)])
        if not label:
            return "1"
        return "·".join(_wrap(self.inner.format_label(self.inner.basis()[i])) for i in label)

    def _parse_label_structural(self, norm):
        if isinstance(self.inner, NaturalE):
            m = re.fullmatch(r"((?:[XY](?:\^\d+)?)*)", norm)
            if m:
                xs = sum(int(e or 1) for e in re.findall(r"X(?:\^(\d+))?", norm))
                ys = sum(int(e or 1) for e in re.findall(r"Y(?:\^(\d+))?", norm))
                if xs + ys == self.r:
                    return 1, self.index(tuple([1] * xs + [0] * ys))
            return None
        parts = split_top(norm, "·")
        if len(parts) != self.r:
            return None
        sign, idxs = 1, []
        for part in parts:
            s, j = self.inner.parse_label(_strip_parens(part))
            sign *= s
            idxs.append(j)
        return sign, self.index(tuple(sorted(idxs, reverse=True)))


class SymLower(_Functor):
    """Symmetric tensors ``Sym_r`` (invariants); basis = orbit sums."""

    kind = "SymLower"

    def spec(self):
        return f"sym_{self.r}({self.inner.spec()})"

    def _compute_basis(self):
        n = self.inner.dim
        labels = [tuple(sorted(c, reverse=True)) for c in itertools.combinations_with_replacement(range(n), self.r)]
        return sorted(labels)

    def _matrix(self, g):
        return self.induced(self.inner.matrix(g), self, g.ring)

    def induced(self, A, target, ring) -> list:
        """Columns of ``Sym_r(phi)`` into ``target`` (divided power algebra)."""
        target.basis()
        idx = target._index
        out = []
        for lab in self.basis():
            prod = {(): ring.one}
            for x, c in _counts(lab).items():
                prod = divided_mul(prod, divided_power(A[x], c, ring), ring)
            out.append({idx[k]: v for k, v in prod.items()})
        return out

    def lie_matrix(self, x):
        A = self.inner.lie_matrix(x)
        F = self.field
        self.basis()
        idx = self._index
        out = []
        for lab in self.basis():
            col: dict = {}
            counts = _counts(lab)
            for y in counts:
                rest = dict(counts)
                rest[y] -= 1
                if not rest[y]:
                    del rest[y]
                base = {_from_counts(rest): F.one}
                prod = divided_mul(base, {(j,): a for j, a in A[y].items()}, F)
                for k, v in prod.items():
                    sparse_add_into(col, {idx[k]: v}, F.one, F)
            out.append(col)
        return out

    def format_label(self, label):
        if not label:
            return "1"
        factors = [_wrap(self.inner.format_label(self.inner.basis()[i])) for i in label]
        if len(label) == 1:
            return factors[0]
        body = "⊗".join(factors)
        return f"({body})" if len(set(label)) == 1 else f"({body})_sym"

    def _parse_label_structural(self, norm):
        m = re.fullmatch(r"F_sym\(([\d,]*)\)", norm)
        if m:
            parts = [int(x) for x in m.group(1).split(",") if x]
            if len(parts) != self.r or any(i >= self.inner.dim for i in parts):
                return None
            return 1, self.index(tuple(sorted(parts, reverse=True)))
        body = norm
        if body.endswith("_sym"):
            body = body[:-4]
        body = _strip_parens(body)
        parts = split_top(body, "⊗")
        if len(parts) != self.r:
            return None
        idxs = []
        for part in parts:
            s, j = self.inner.parse_label(_strip_parens(part))
            if s != 1:
                return None
            idxs.append(j)
        return 1, self.index(tuple(sorted(idxs, reverse=True)))


class Wedge(_Functor):
    """Exterior power; the label ``(i_1 > ... > i_r)`` is ``v_{i_1} ∧ ... ∧ v_{i_r}``."""

    kind = "Wedge"

    def spec(self):
        return f"wedge^{self.r}({self.inner.spec()})"

    def _compute_basis(self):
        n = self.inner.dim
        return sorted(tuple(sorted(c, reverse=True)) for c in itertools.combinations(range(n), self.r))

    def _matrix(self, g):
        return self.induced(self.inner.matrix(g), self, g.ring)

    def induced(self, A, target, ring) -> list:
        """Columns of ``⋀^r(phi)`` into ``target``."""
        target.basis()
        idx = target._index
        return [
            {idx[k]: v for k, v in wedge_product([A[i] for i in lab], ring).items()}
            for lab in self.basis()
        ]

    def lie_matrix(self, x):
        A = self.inner.lie_matrix(x)
        F = self.field
        self.basis()
        idx = self._index
        out = []
        for lab in self.basis():
            col: dict = {}
            for k in range(len(lab)):
                vecs = [A[i] if n == k else {i: F.one} for n, i in enumerate(lab)]
                for key, v in wedge_product(vecs, F).items():
                    sparse_add_into(col, {idx[key]: v}, F.one, F)
            out.append(col)
        return out

    def format_label(self, label):
        if not label:
            return "1"
        return "∧".join(_wrap(self.inner.format_label(self.inner.basis()[i])) for i in label)

    def _parse_label_structural(self, norm):
        m = re.fullmatch(r"F_∧\(([\d,]*)\)", norm)
        if m:
            idxs = [int(x) for x in m.group(1).split(",") if x]
            if any(i >= self.inner.dim for i in idxs):
                return None
        else:
            parts = split_top(norm, "∧")
            if len(parts) != self.r:
                return None
            idxs, sign = [], 1
            for part in parts:
                s, j = self.inner.parse_label(_strip_parens(part))
                sign *= s
                idxs.append(j)
            if sign != 1:
                return None
        if len(idxs) != self.r or len(set(idxs)) != len(idxs):
            return None
        # permutation_sign gives the parity of sorting ascending; reversal adds r(r-1)/2
        r = self.r
        sign = permutation_sign(idxs) * (-1 if (r * (r - 1) // 2) % 2 else 1)
        return sign, self.index(tuple(sorted(idxs, reverse=True)))


class TensorPower(_Functor):
    """``R^{⊗r}`` with labels ``(i_1, ..., i_r)`` in lexicographic order."""

    kind = "TensorPower"

    def spec(self):
        return f"tensor^{self.r}({self.inner.spec()})"

    def _compute_basis(self):
        return list(itertools.product(range(self.inner.dim), repeat=self.r))

    def _matrix(self, g):
        A = self.inner.matrix(g)
        R = g.ring
        self.basis()
        idx = self._index
        out = []
        for lab in self.basis():
            cur = {(): R.one}
            for i in lab:
                nxt = {}
                for key, c in cur.items():
                    for j, a in A[i].items():
                        t = R.mul(c, a)
                        if not R.is_zero(t):
                            nxt[key + (j,)] = t
                cur = nxt
            out.append({idx[k]: v for k, v in cur.items()})
        return out

    def lie_matrix(self, x):
        A = self.inner.lie_matrix(x)
        self.basis()
        idx = self._index
        out = []
        for lab in self.basis():
            col: dict = {}
            for k in range(len(lab)):
                for j, a in A[lab[k]].items():
                    key = lab[:k] + (j,) + lab[k + 1:]
                    sparse_add_into(col, {idx[key]: a}, self.field.one, self.field)
            out.append(col)
        return out

    def format_label(self, label):
        if not label:
            return "1"
        return "⊗".join(_wrap(self.inner.format_label(self.inner.basis()[i])) for i in label)

    def _parse_label_structural(self, norm):
        m = re.fullmatch(r"F_⊗\(([\d,]*)\)", norm)
        if m:
            idxs = tuple(int(x) for x in m.group(1).split(",") if x)
        else:
            idxs = []
            for part in split_top(norm, "⊗"):
                s, j = self.inner.parse_label(_strip_parens(part))
                if s != 1:
                    return None
                idxs.append(j)
            idxs = tuple(idxs)
        if len(idxs) != self.r or any(i >= self.inner.dim for i in idxs):
            return None
        return 1, self.index(idxs)


class Tensor(Rep):
    """``R1 ⊗ R2`` with labels ``(i, j)`` in lexicographic order."""

    kind = "Tensor"

    def __init__(self, left: Rep, right: Rep):
        if left.field != right.field:
            raise FieldMismatch("tensor factors over different fields")
        super().__init__(left.field)
        self.left = left
        self.right = right

    def children(self):
        return (self.left, self.right)

    def spec(self):
        return f"tensor({self.left.spec()},{self.right.spec()})"

    def _compute_basis(self):
        return list(itertools.product(range(self.left.dim), range(self.right.dim)))

    def _compute_weights(self):
        wl, wr = self.left.weights(), self.right.weights()
        return [wl[i] + wr[j] for i, j in self.basis()]

    def degree(self):
        return self.left.degree() + self.right.degree()

    def _matrix(self, g):
        A, B = self.left.matrix(g), self.right.matrix(g)
        R = g.ring
        n2 = self.right.dim
        out = []
        for i, j in self.basis():
            col = {}
            for k, a in A[i].items():
                for l, b in B[j].items():
                    t = R.mul(a, b)
                    if not R.is_zero(t):
                        col[k * n2 + l] = t
            out.append(col)
        return out

    def lie_matrix(self, x):
        A, B = self.left.lie_matrix(x), self.right.lie_matrix(x)
        n2 = self.right.dim
        out = []
        for i, j in self.basis():
            col = {}
            for k, a in A[i].items():
                col[k * n2 + j] = a
            for l, b in B[j].items():
                key = i * n2 + l
                sparse_add_into(col, {key: b}, self.field.one, self.field)
            out.append(col)
        return out

    def format_label(self, label):
        i, j = label
        a = self.left.format_label(self.left.basis()[i])
        b = self.right.format_label(self.right.basis()[j])
        if isinstance(self.right, DetPower):
            return f"{_wrap(a)}⊗{b}"
        return f"{_wrap(a)}⊗{_wrap(b)}"

    def _parse_label_structural(self, norm):
        parts = split_top(norm, "⊗")
        for cut in range(1, len(parts)):
            try:
                s1, i = self.left.parse_label(_strip_parens("⊗".join(parts[:cut])))
                s2, j = self.right.parse_label(_strip_parens("⊗".join(parts[cut:])))
            except ParseError:
                continue
            return s1 * s2, self.index((i, j))
        return None


class Dual(Rep):
    """Ordinary dual: ``rho(g) = rho_V(g^{-1})^T``."""

    kind = "Dual"
    mark = "^∨"

    def __init__(self, inner: Rep):
        super().__init__(inner.field)
        self.inner = inner

    def children(self):
        return (self.inner,)

    def spec(self):
        return f"dual({self.inner.spec()})"

    def _compute_basis(self):
        return list(self.inner.basis())

    def _compute_weights(self):
        return [-w for w in self.inner.weights()]

    def degree(self):
        return -self.inner.degree()

    def _matrix(self, g):
        return transpose(self.inner.matrix(g.inverse()), self.inner.dim)

    def format_label(self, label):
        return _postfix(self.inner.format_label(label), self.mark)

    def _parse_label_structural(self, norm):
        mark = self.mark
        if norm.endswith(mark):
            s, j = self.inner.parse_label(_strip_parens(norm[: -len(mark)]))
            return s, j
        return None


class ContraDual(Dual):
    """Contravariant dual: ``rho(g) = rho_V(g^T)^T``."""

    kind = "ContraDual"
    mark = "^°"

    def spec(self):
        return f"cdual({self.inner.spec()})"

    def _compute_weights(self):
        return list(self.inner.weights())

    def degree(self):
        return self.inner.degree()

    def _matrix(self, g):
        return transpose(self.inner.matrix(g.transpose()), self.inner.dim)


class DetPower(Rep):
    """The one-dimensional module ``det^k``."""

    kind = "DetPower"

    def __init__(self, k: int, field: Field):
        super().__init__(field)
        self.k = k

    def spec(self):
        return f"det^{self.k}"

    def _compute_basis(self):
        return [()]

    def _compute_weights(self):
        return [0]

    def degree(self):
        return 2 * self.k

    def _matrix(self, g):
        return [{0: g.ring.power(g.det, self.k)}]

    def lie_matrix(self, x):
        a, _, _, d = x
        F = self.field
        v = F.mul(F.from_int(self.k), F.add(a, d))
        return [{} if F.is_zero(v) else {0: v}]

    def format_label(self, label):
        return f"det^{self.k}"


class _TableauRep(Rep):
    """Shared machinery for reps indexed by tableaux with entries ``1..dim``."""

    def __init__(self, shape, inner: Rep):
        super().__init__(inner.field)
        self.shape = Partition(shape)
        self.inner = inner
        self._cols_index = None

    def children(self):
        return (self.inner,)

    def _compute_weights(self):
        w = self.inner.weights()
        return [sum(w[x - 1] for x in t.entries()) for t in self.basis()]

    def degree(self):
        return self.shape.size * self.inner.degree()

    def cols_index(self) -> dict:
        if self._cols_index is None:
            self._cols_index = {t.columns: k for k, t in enumerate(self.basis())}
        return self._cols_index

    def tabloid_image(self, columns, A, ring, cache=None) -> dict:
        """Apply the inner matrices columnwise to ``|t|`` (no straightening)."""
        per_col = []
        for col in columns:
            key = col
            hit = cache.get(key) if cache is not None else None
            if hit is None:
                vecs = [A[x - 1] for x in col]
                raw = wedge_product(vecs, ring, increasing=True)
                hit = {tuple(i + 1 for i in k): v for k, v in raw.items()}
                if cache is not None:
                    cache[key] = hit
            if not hit:
                return {}
            per_col.append(hit)
        return tensor_columns(per_col, ring)

    def tabloid_derivation(self, columns, A, ring) -> dict:
        out: dict = {}
        for k, col in enumerate(columns):
            vecs = [{x - 1: ring.one} for x in col]
            for n, x in enumerate(col):
                vecs2 = list(vecs)
                vecs2[n] = A[x - 1]
                raw = wedge_product(vecs2, ring, increasing=True)
                for key, v in raw.items():
                    new = columns[:k] + (tuple(i + 1 for i in key),) + columns[k + 1:]
                    sparse_add_into(out, {new: v}, ring.one, ring)
        return out


def tensor_columns(per_col, ring) -> dict:
    """Multiply out per-column expansions into a combination of tableaux."""
    add, mul, is_zero = ring.add, ring.mul, ring.is_zero
    cur = {(): ring.one}
    for expansion in per_col:
        nxt = {}
        for key, c in cur.items():
            for col, a in expansion.items():
                t = mul(c, a)
                if not is_zero(t):
                    k2 = key + (col,)
                    nxt[k2] = add(nxt[k2], t) if k2 in nxt else t
        cur = nxt
    return cur


class Tabloids(_TableauRep):
    """Column-wise exterior power ``⋀^{λ'} R``; basis = column-standard tableaux."""

    kind = "Tabloids"

    def spec(self):
        return f"colwedge[{self.shape}]({self.inner.spec()})"

    def _compute_basis(self):
        return enumerate_tableaux(self.shape, self.inner.dim, "CSYT")

    def act_basis(self, g, j):
        A = self.inner.matrix(g)
        img = self.tabloid_image(self.basis()[j].columns, A, g.ring)
        idx = self.cols_index()
        return {idx[k]: v for k, v in img.items() if not g.ring.is_zero(v)}

    def lie_matrix(self, x):
        A = self.inner.lie_matrix(x)
        idx = self.cols_index()
        F = self.field
        return [
            {idx[k]: v for k, v in self.tabloid_derivation(t.columns, A, F).items()}
            for t in self.basis()
        ]

    def format_label(self, label):
        return f"|{label}|"

    def _parse_label_structural(self, norm):
        if not (norm.startswith("|") and norm.endswith("|")):
            return None
        t = Tableau.parse(norm)
        cols, sign = sort_columns(t.columns)
        if cols is None or cols not in self.cols_index():
            return None
        return sign, self.cols_index()[cols]


class Nabla(_TableauRep):
    """Schur functor ``∇^λ R``; basis = semistandard polytabloids ``e(t)``."""

    kind = "Nabla"

    def spec(self):
        return f"nabla[{self.shape}]({self.inner.spec()})"

    def _compute_basis(self):
        return enumerate_tableaux(self.shape, self.inner.dim, "SSYT")

    def straighten_to_basis(self, combo: dict, ring) -> dict:
        idx = self.cols_index()
        return {idx[k]: v for k, v in straighten(combo, ring).items()}

    def act_basis(self, g, j):
        return self.act_columns(g, self.basis()[j].columns)

    def act_columns(self, g, columns, cache=None) -> dict:
        """Coordinates of ``g . e(t)`` for a column-standard ``t``."""
        A = self.inner.matrix(g)
        img = self.tabloid_image(columns, A, g.ring, cache)
        return self.straighten_to_basis(img, g.ring)

    def _matrix(self, g):
        cache: dict = {}
        return [self.act_columns(g, t.columns, cache) for t in self.basis()]

    def lie_matrix(self, x):
        A = self.inner.lie_matrix(x)
        F = self.field
        return [
            self.straighten_to_basis(self.tabloid_derivation(t.columns, A, F), F)
            for t in self.basis()
        ]

    def format_label(self, label):
        return f"e({label})"

    def _parse_label_structural(self, norm):
        m = re.fullmatch(r"e\((.*)\)", norm)
        if not m:
            return None
        t = Tableau.parse(m.group(1))
        cols, sign = sort_columns(t.columns)
        if cols is None:
            return None
        if cols in self.cols_index():
            return sign, self.cols_index()[cols]
        return None


class Delta(Rep):
    """Weyl functor ``Δ^λ R``, realised as the dual of ``∇^λ(R^∨)``."""

    kind = "Delta"

    def __init__(self, shape, inner: Rep):
        super().__init__(inner.field)
        self.shape = Partition(shape)
        self.inner = inner
        self.realization = Dual(Nabla(self.shape, Dual(inner)))

    def children(self):
        return (self.inner,)

    def spec(self):
        return f"delta[{self.shape}]({self.inner.spec()})"

    def _compute_basis(self):
        return list(self.realization.basis())

    def _compute_weights(self):
        return list(self.realization.weights())

    def degree(self):
        return self.shape.size * self.inner.degree()

    def _matrix(self, g):
        return self.realization.matrix(g)

    def format_label(self, label):
        return f"e({label})^∨"


class SymLambda(Rep):
    """``Sym^{λ_1} R ⊗ ... ⊗ Sym^{λ_k} R``; labels are tuples of sorted rows."""

    kind = "SymLambda"

    def __init__(self, shape, inner: Rep):
        super().__init__(inner.field)
        self.shape = Partition(shape)
        self.inner = inner

    def children(self):
        return (self.inner,)

    def spec(self):
        return f"symrows[{self.shape}]({self.inner.spec()})"

    def _compute_basis(self):
        n = self.inner.dim
        rows = [list(itertools.combinations_with_replacement(range(1, n + 1), r)) for r in self.shape]
        return list(itertools.product(*rows))

    def _compute_weights(self):
        w = self.inner.weights()
        return [sum(w[x - 1] for row in lab for x in row) for lab in self.basis()]

    def degree(self):
        return self.shape.size * self.inner.degree()

    def _matrix(self, g):
        A = self.inner.matrix(g)
        R = g.ring
        self.basis()
        idx = self._index
        out = []
        for lab in self.basis():
            per_row = []
            for row in lab:
                prod = sym_product([A[x - 1] for x in row], R)
                per_row.append({tuple(sorted(i + 1 for i in k)): v for k, v in prod.items()})
            cur = tensor_columns(per_row, R)
            out.append({idx[k]: v for k, v in cur.items()})
        return out

    def format_label(self, label):
        rows = []
        for row in label:
            counts = _counts(row)
            rows.append(_monomial([(f"v{x}", counts[x]) for x in sorted(counts)]))
        return "⊗".join(rows)


def E(field: Field) -> NaturalE:
    return NaturalE(field)


# ---------------------------------------------------------------------------
# parsing helpers


def split_top(s: str, sep: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _strip_parens(s: str) -> str:
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        closes_at_end = True
        for k, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and k != len(s) - 1:
                    closes_at_end = False
                    break
        if not closes_at_end:
            break
        s = s[1:-1]
    return s


# ---------------------------------------------------------------------------
# Vectors


class Vector:
    """A sparse vector over a rep's basis; coefficients are raw ring values."""

    __slots__ = ("rep", "ring", "coeffs")

    def __init__(self, rep: Rep, coeffs=None, ring=None):
        self.rep = rep
        self.ring = ring if ring is not None else rep.field
        R = self.ring
        self.coeffs = {j: c for j, c in (coeffs or {}).items() if not R.is_zero(c)}

    @classmethod
    def basis_vector(cls, rep: Rep, label) -> "Vector":
        return cls(rep, {rep.index(label): rep.field.one})

    @classmethod
    def from_labels(cls, rep: Rep, mapping: dict) -> "Vector":
        F = rep.field
        out: dict = {}
        for lab, c in mapping.items():
            sparse_add_into(out, {rep.index(lab): F.coerce(c)}, F.one, F)
        return cls(rep, out)

    @classmethod
    def parse(cls, rep: Rep, text: str) -> "Vector":
        from .notation import parse_vector

        return parse_vector(rep, text)

    def lift(self, ring) -> "Vector":
        """Move coefficients into ``ring`` (e.g. field -> polynomial ring)."""
        if ring == self.ring:
            return self
        if isinstance(ring, PolyRing) and ring.field == self.ring:
            return Vector(self.rep, {j: ring.constant(c) for j, c in self.coeffs.items()}, ring)
        raise FieldMismatch(f"cannot move coefficients from {self.ring} to {ring}")

    def items(self):
        basis = self.rep.basis()
        for j in sorted(self.coeffs):
            yield basis[j], self._wrap(self.coeffs[j])

    def _wrap(self, raw):
        if isinstance(self.ring, PolyRing):
            return Polynomial._from_raw(self.ring, raw)
        return FieldElement(self.ring, raw)

    def coefficient(self, label):
        j = self.rep.index(label)
        return self._wrap(self.coeffs.get(j, self.ring.zero))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _compatible(self, other: "Vector"):
        if self.rep != other.rep:
            raise FieldMismatch("vectors of different representations")
        if self.ring != other.ring:
            raise FieldMismatch("vectors over different rings")

    def __add__(self, other):
        self._compatible(other)
        out = dict(self.coeffs)
        sparse_add_into(out, other.coeffs, self.ring.one, self.ring)
        return Vector(self.rep, out, self.ring)

    def __sub__(self, other):
        self._compatible(other)
        out = dict(self.coeffs)
        sparse_add_into(out, other.coeffs, self.ring.neg(self.ring.one), self.ring)
        return Vector(self.rep, out, self.ring)

    def __neg__(self):
        R = self.ring
        return Vector(self.rep, {j: R.neg(c) for j, c in self.coeffs.items()}, R)

    def scale(self, raw) -> "Vector":
        R = self.ring
        return Vector(self.rep, {j: R.mul(raw, c) for j, c in self.coeffs.items()}, R)

    def __mul__(self, scalar):
        if isinstance(scalar, FieldElement):
            if scalar.owner != self.rep.field:
                raise FieldMismatch("scalar from another field")
            raw = scalar.raw
            if isinstance(self.ring, PolyRing):
                raw = self.ring.constant(raw)
        elif isinstance(scalar, int):
            raw = self.ring.from_int(scalar)
        else:
            return NotImplemented
        return self.scale(raw)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.rep == other.rep and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.rep.key(), tuple(sorted(self.coeffs.items()))))

    def format(self, style: str = "terms") -> str:
        from .notation import format_vector

        return format_vector(self, style)

    def __str__(self):
        return self.format("terms")

    def __repr__(self):
        return f"Vector({self.format('terms')})"

    def to_json(self) -> dict:
        from .notation import vector_to_json

        return vector_to_json(self)


# ---------------------------------------------------------------------------
# Public operations


def dimension(rep: Rep) -> int:
    return rep.dim


def action_matrix(g: GroupElement, rep: Rep) -> list:
    return rep.matrix(g)


def act(g: GroupElement, rep: Rep, v: Vector) -> Vector:
    """``g . v``; coefficients move to the ring of ``g``."""
    if v.rep != rep:
        raise FieldMismatch("vector does not belong to this representation")
    rep._check_ring(g.ring)
    v = v.lift(g.ring) if v.ring != g.ring else v
    R = g.ring
    out: dict = {}
    for j, c in v.coeffs.items():
        sparse_add_into(out, rep.act_basis(g, j), c, R)
    return Vector(rep, out, R)


def act_f(rep: Rep, v: Vector) -> Vector:
    """Apply the lowering operator ``f = (0, 0; 1, 0)`` by the Leibniz rule."""
    _check_lie_supported(rep)
    F = rep.field
    M = lie_matrix_cached(rep, "f")
    out: dict = {}
    for j, c in v.coeffs.items():
        sparse_add_into(out, M[j], c, F)
    return Vector(rep, out)


_LIE_CACHE: dict = {}


def lie_matrix_cached(rep: Rep, name: str = "f") -> list:
    key = (rep.key(), name)
    hit = _LIE_CACHE.get(key)
    if hit is None:
        F = rep.field
        x = (F.zero, F.zero, F.one, F.zero)
        hit = _LIE_CACHE[key] = rep.lie_matrix(x)
    return hit


def _check_lie_supported(rep: Rep):
    if isinstance(rep, (Dual, Delta)):
        raise UnsupportedConstructor(f"{rep.kind} has no structural Lie algebra action")
    for child in rep.children():
        _check_lie_supported(child)


def polytabloid_expand(t: Tableau, rep: Rep) -> Vector:
    """``e(t) = Σ_{σ ∈ CPP(λ)} sgn(σ) sym(t.σ)`` as a vector of ``Sym^λ rep``."""
    n = rep.dim
    if any(x < 1 or x > n for x in t.entries()):
        raise EntryOutOfRange(f"entries of {t} must lie in 1..{n}")
    target = SymLambda(t.shape, rep)
    F = rep.field
    out: dict = {}
    for sigma in column_place_permutations(t.shape):
        s = apply_box_permutation(t, sigma)
        lab = tuple(tuple(sorted(row)) for row in s.rows)
        sparse_add_into(out, {target.index(lab): F.from_int(sigma.sign)}, F.one, F)
    return Vector(target, out)


def garnir_straighten(combo: dict, shape, dim: int, field: Field) -> Vector:
    """Express a combination of column tabloids in the semistandard basis.

    ``combo`` maps tableaux (any column order; repeats give zero) to field
    values or ints. Returns a vector of ``Nabla(shape, <dim-dimensional rep>)``
    where the inner rep is ``field^dim`` with trivial labels.
    """
    target = Nabla(shape, _Coordinates(dim, field))
    F = field
    raw: dict = {}
    for t, c in combo.items():
        if t.shape != target.shape:
            raise ValueError("tableau of the wrong shape")
        if any(x < 1 or x > dim for x in t.entries()):
            raise EntryOutOfRange(f"entries of {t} must lie in 1..{dim}")
        cols, sign = sort_columns(t.columns)
        if cols is None:
            continue
        val = F.coerce(c)
        if sign < 0:
            val = F.neg(val)
        sparse_add_into(raw, {cols: val}, F.one, F)
    return Vector(target, target.straighten_to_basis(raw, F))


class _Coordinates(Rep):
    """``K^n`` with basis ``v1..vn`` on which only the identity is used."""

    kind = "Coordinates"

    def __init__(self, n: int, field: Field):
        super().__init__(field)
        self.n = n

    def spec(self):
        return f"K^{self.n}"

    def _compute_basis(self):
        return [f"v{i}" for i in range(1, self.n + 1)]

    def _compute_weights(self):
        return [0] * self.n

    def degree(self):
        return 0

    def format_label(self, label):
        return label


def coordinate_space(n: int, field: Field) -> Rep:
    return _Coordinates(n, field)


def is_polynomial(rep: Rep) -> bool:
    if isinstance(rep, (Dual,)) and not isinstance(rep, ContraDual):
        return False
    if isinstance(rep, DetPower):
        return rep.k >= 0
    return all(is_polynomial(c) for c in rep.children())
