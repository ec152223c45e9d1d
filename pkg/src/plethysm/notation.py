"""Text formats: rep specifications, group elements, vectors and matrices.

Rep mini-language::

    E | dual(R) | cdual(R) | sym^r(R) | sym_r(R) | wedge^r(R)
      | nabla[λ](R) | delta[λ](R) | det^k | tensor(R1,R2)
      | tensor^r(R) | colwedge[λ](R)

Group elements: ``"a,b;c,d"``, ``"J"``, ``"M(γ0)"`` (a field literal) or
``"M(γ)"`` for the symbolic lower unitriangular matrix, ``"I"``.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .field import Field, PolyRing, PrimeField
from .linalg import sparse_add_into
from .repmod import (
    ContraDual,
    Delta,
    DetPower,
    Dual,
    GroupElement,
    Nabla,
    NaturalE,
    Rep,
    SymLower,
    SymUpper,
    Tabloids,
    Tensor,
    TensorPower,
    Vector,
    Wedge,
    split_top,
)
from .shapes import Partition


class _RepParser:
    def __init__(self, text: str, field: Field):
        self.text = text
        self.pos = 0
        self.field = field

    def error(self, message):
        raise ParseError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token):
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.error(f"expected {token!r}")
        self.pos += len(token)

    def peek(self, token) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"-?\d+").match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def partition(self) -> Partition:
        self.expect("[")
        end = self.text.find("]", self.pos)
        if end < 0:
            self.error("unterminated partition")
        body = self.text[self.pos:end]
        try:
            shape = Partition.parse(body)
        except ParseError as exc:
            raise ParseError(str(exc), self.text, self.pos) from exc
        self.pos = end + 1
        return shape

    def rep(self) -> Rep:
        self.skip()
        start = self.pos
        m = re.compile(r"[A-Za-z]+").match(self.text, self.pos)
        if not m:
            self.error("expected a constructor name")
        name = m.group()
        self.pos = m.end()
        F = self.field
        if name == "E":
            return NaturalE(F)
        if name in ("dual", "cdual"):
            self.expect("(")
            inner = self.rep()
            self.expect(")")
            return Dual(inner) if name == "dual" else ContraDual(inner)
        if name in ("sym", "wedge", "tensor") and self.peek("^"):
            self.expect("^")
            r = self.integer()
            self.expect("(")
            inner = self.rep()
            self.expect(")")
            if r < 0:
                self.pos = start
                self.error("powers must be non-negative")
            return {"sym": SymUpper, "wedge": Wedge, "tensor": TensorPower}[name](r, inner)
        if name == "sym" and self.peek("_"):
            self.expect("_")
            r = self.integer()
            self.expect("(")
            inner = self.rep()
            self.expect(")")
            if r < 0:
                self.pos = start
                self.error("powers must be non-negative")
            return SymLower(r, inner)
        if name in ("nabla", "delta", "colwedge"):
            shape = self.partition()
            self.expect("(")
            inner = self.rep()
            self.expect(")")
            return {"nabla": Nabla, "delta": Delta, "colwedge": Tabloids}[name](shape, inner)
        if name == "det":
            self.expect("^")
            return DetPower(self.integer(), F)
        if name == "tensor":
            self.expect("(")
            left = self.rep()
            self.expect(",")
            right = self.rep()
            self.expect(")")
            return Tensor(left, right)
        self.pos = start
        self.error(f"unknown constructor {name!r}")


def parse_rep(text: str, field: Field) -> Rep:
    """Build a rep from the mini-language, e.g. ``sym_3(sym^3(E))``."""
    parser = _RepParser(text, field)
    rep = parser.rep()
    parser.skip()
    if parser.pos != len(text):
        parser.error("trailing characters")
    return rep


def parse_group_element(text: str, field: Field) -> GroupElement:
    body = text.strip()
    if body == "J":
        return GroupElement.J(field)
    if body in ("I", "1"):
        return GroupElement.identity(field)
    m = re.fullmatch(r"M\((.*)\)", body)
    if m:
        arg = m.group(1).strip()
        if arg in ("γ", "g", "gamma", "t"):
            return GroupElement.M_symbolic(field)
        return GroupElement.M(field, field.coerce(arg))
    rows = body.split(";")
    if len(rows) != 2:
        raise ParseError("group elements are written a,b;c,d", text, 0)
    entries = []
    for row in rows:
        items = _split_commas(row)
        if len(items) != 2:
            raise ParseError("each row needs two entries", text, text.find(row))
        entries.extend(field.coerce(x.strip()) for x in items)
    return GroupElement(field, *entries)


def _split_commas(text: str) -> list:
    return split_top(text, ",")


# ---------------------------------------------------------------------------
# vectors


def _compact_coefficient(ring, c):
    """Return ``(negative, magnitude string)``; magnitude '' means 1."""
    if isinstance(ring, PrimeField):
        p = ring.p
        if c > p // 2 and p > 2:
            return True, ("" if p - c == 1 else str(p - c))
        return False, ("" if c == 1 else str(c))
    if isinstance(ring, PolyRing):
        s = ring.format_raw(c)
        return False, ("" if c == ring.one else f"({s})")
    text = ring.format_raw(c)
    if ring.characteristic == 0:
        neg = c < 0
        mag = text[1:] if neg else text
        if mag == "1":
            mag = ""
        elif "/" in mag:
            mag = f"({mag})"
        return neg, mag
    return False, ("" if c == ring.one else f"({text})")


def format_vector(v: Vector, style: str = "terms") -> str:
    """``terms``: ``c * label + ...``; ``compact``: ``label − 2label'`` style."""
    if not v.coeffs:
        return "0"
    rep, ring = v.rep, v.ring
    order = sorted(v.coeffs)
    if style == "terms":
        return " + ".join(f"{ring.format_raw(v.coeffs[j])} * {rep.label_string(j)}" for j in order)
    if style != "compact":
        raise ValueError(f"unknown style {style!r}")
    # positive terms first, then negative ones, each in basis order
    parts = [(j,) + _compact_coefficient(ring, v.coeffs[j]) for j in order]
    parts.sort(key=lambda t: t[1])
    out = []
    for k, (j, neg, mag) in enumerate(parts):
        term = f"{mag}{rep.label_string(j)}"
        if k == 0:
            out.append(("−" if neg else "") + term)
        else:
            out.append((" − " if neg else " + ") + term)
    return "".join(out)


def _split_terms(text: str) -> list:
    """Split at top-level + and - signs; returns (sign, body) pairs."""
    s = text.replace("−", "-")
    terms, depth, cur, sign = [], 0, [], 1
    k = 0
    while k < len(s):
        ch = s[k]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        prev = s[:k].rstrip()[-1:] if s[:k].strip() else ""
        if depth == 0 and ch in "+-" and prev != "^" and prev != "*":
            body = "".join(cur).strip()
            if body:
                terms.append((sign, body))
            elif ch == "-":
                sign = -sign
                cur = []
                k += 1
                continue
            sign = -1 if ch == "-" else 1
            cur = []
        else:
            cur.append(ch)
        k += 1
    body = "".join(cur).strip()
    if body:
        terms.append((sign, body))
    return terms


_COEFF_RE = re.compile(r"^\s*(-?\s*\d+(?:/\d+)?|\[[-\d,\s]*\]|\(\s*-?\d+(?:/\d+)?\s*\))\s*(\*)?\s*(.*)$", re.S)


def parse_vector(rep: Rep, text: str) -> Vector:
    """Parse ``"X^3∧Y^3 − X^2Y∧XY^2"`` or ``"-1 * |1 1 2 3 / 2 3 3 / 3|"``."""
    F = rep.field
    body = text.strip()
    if body == "0":
        return Vector(rep, {})
    out: dict = {}
    for sign, term in _split_terms(body):
        coeff = F.one
        label = term
        try:
            s, j = rep.parse_label(term)
        except ParseError:
            m = _COEFF_RE.match(term)
            if not m or not m.group(3):
                raise ParseError(f"cannot parse term {term!r}", text, text.find(term))
            lit = m.group(1).strip()
            if lit.startswith("(") and lit.endswith(")"):
                lit = lit[1:-1]
            coeff = F.coerce(lit.replace(" ", ""))
            label = m.group(3)
            s, j = rep.parse_label(label)
        c = coeff if sign * s == 1 else F.neg(coeff)
        sparse_add_into(out, {j: c}, F.one, F)
    return Vector(rep, out)


def vector_to_json(v: Vector) -> dict:
    rep, ring = v.rep, v.ring
    return {rep.label_string(j): ring.format_raw(v.coeffs[j]) for j in sorted(v.coeffs)}


def vector_from_json(rep: Rep, data: dict) -> Vector:
    F = rep.field
    out: dict = {}
    for label, value in data.items():
        s, j = rep.parse_label(label)
        c = F.coerce(value) if not isinstance(value, list) else F.from_json(value)
        sparse_add_into(out, {j: c if s == 1 else F.neg(c)}, F.one, F)
    return Vector(rep, out)


def matrix_rows(matrix: list, nrows: int, ring) -> list:
    """Row-major list of formatted entries."""
    rows = [[ring.format_raw(ring.zero)] * len(matrix) for _ in range(nrows)]
    for j, col in enumerate(matrix):
        for i, v in col.items():
            rows[i][j] = ring.format_raw(v)
    return rows


def matrix_from_rows(rows: list, ring) -> list:
    ncols = len(rows[0]) if rows else 0
    out = [dict() for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, text in enumerate(row):
            v = ring.coerce(text) if hasattr(ring, "coerce") else text
            if not ring.is_zero(v):
                out[j][i] = v
    return out
