"""Exact arithmetic over GF(p), GF(p^k) and the rationals.

Every field exposes a small "raw" interface (``add``, ``mul``, ``inv``, ...)
working on canonical Python values:

* GF(p): integers in ``range(p)``;
* GF(p^k): integers in ``range(p**k)`` packing the coefficient vector
  ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` of the residue class mod the modulus;
* QQ: reduced :class:`fractions.Fraction` values.

Heavy code paths use the raw interface directly. :class:`FieldElement` and
:class:`Polynomial` are thin immutable wrappers for the public API.
:class:`PolyRing` implements the same raw interface for polynomials in an
indeterminate, which is how the symbolic-gamma computations run.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import (
    DivisionByZero,
    FieldMismatch,
    ModulusDegreeMismatch,
    NonPrimeCharacteristic,
    ParseError,
    ReducibleModulus,
)

__all__ = [
    "Field",
    "PrimeField",
    "ExtensionField",
    "RationalField",
    "PolyRing",
    "FieldElement",
    "Polynomial",
    "make_field",
    "parse_field",
    "QQ",
    "GF",
    "is_prime",
    "carry_free_summand",
    "multinomial_nonzero_mod_p",
    "base_digits",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def base_digits(n: int, p: int) -> list[int]:
    """Base-p digits of n, least significant first (empty list for 0)."""
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    return digits


def carry_free_summand(a: int, l: int, p: int) -> bool:
    """Return True iff every base-p digit of ``a`` is at most the digit of ``l``.

    By Lucas's theorem this is equivalent to ``binom(l, a) % p != 0``.
    """
    if a < 0 or a > l:
        return False
    while a:
        if a % p > l % p:
            return False
        a //= p
        l //= p
    return True


def multinomial_nonzero_mod_p(parts, p: int) -> bool:
    """True iff adding the parts in base p produces no carry.

    Equivalently the multinomial coefficient ``(sum parts)! / prod(part!)``
    is nonzero modulo ``p``.
    """
    parts = [int(x) for x in parts]
    if any(x < 0 for x in parts):
        raise ValueError("parts must be non-negative")
    while any(parts):
        if sum(x % p for x in parts) >= p:
            return False
        parts = [x // p for x in parts]
    return True


# ---------------------------------------------------------------------------
# Polynomials over GF(p) as coefficient lists (low degree first); used only to
# validate and select moduli.


def _ptrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    f = list(f)
    inv_lead = pow(g[-1], -1, p)
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        _ptrim(f)
    return f


def _pmulmod(f, g, m, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pmod(_ptrim(out), m, p)


def _pgcd(f, g, p):
    f, g = _ptrim(list(f)), _ptrim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _is_irreducible(modulus, p):
    """Ben-Or test for a monic polynomial given low-degree-first."""
    k = len(modulus) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    power = x
    for _ in range(1, k // 2 + 1):
        # power <- power^p mod modulus
        result = [1]
        base = power
        e = p
        while e:
            if e & 1:
                result = _pmulmod(result, base, modulus, p)
            base = _pmulmod(base, base, modulus, p)
            e >>= 1
        power = result
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        _ptrim(diff)
        g = _pgcd(modulus, diff, p)
        if len(g) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> tuple:
    """Least monic irreducible polynomial of degree k over GF(p).

    Candidates ``x^k + c_{k-1} x^{k-1} + ... + c_0`` are ordered by the integer
    ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``; the first irreducible one wins.
    Returns the non-leading coefficients ``(c_0, ..., c_{k-1})``.
    """
    for n in range(p**k):
        coeffs = [(n // p**i) % p for i in range(k)]
        if _is_irreducible(coeffs + [1], p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------


class Field:
    """Common behaviour of the three field families."""

    characteristic: int
    degree: int = 1
    zero = 0
    one = 1

    # raw interface -------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def power(self, a, n: int):
        if n < 0:
            return self.power(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    @property
    def order(self):
        """Number of elements, or None for an infinite field."""
        return None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def raw_elements(self):
        raise NotImplementedError

    def elements(self):
        return [FieldElement(self, x) for x in self.raw_elements()]

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        """Turn a FieldElement, int or element literal into a raw value."""
        if isinstance(value, FieldElement):
            if value.owner != self:
                raise FieldMismatch(f"element of {value.owner} used in {self}")
            return value.raw
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse_raw(value)
        return self.coerce_other(value)

    def coerce_other(self, value):
        raise TypeError(f"cannot convert {value!r} into {self}")

    # text / json ---------------------------------------------------------
    def format_raw(self, a) -> str:
        return str(a)

    def parse_raw(self, text: str):
        raise NotImplementedError

    def to_json(self, a):
        return a

    def from_json(self, obj):
        return self.coerce(obj)

    @property
    def prime_field(self) -> "Field":
        return self

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __repr__(self):
        return f"<field {self}>"


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.key = ("GF", p, 1, ())

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("division by zero")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def power(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    @property
    def order(self):
        return self.p

    def raw_elements(self):
        return range(self.p)

    def parse_raw(self, text):
        text = text.strip().replace("−", "-")
        try:
            if "/" in text:
                num, den = text.split("/")
                return self.div(self.from_int(int(num)), self.from_int(int(den)))
            return self.from_int(int(text))
        except ValueError as exc:
            raise ParseError(f"bad element literal {text!r} for {self}") from exc

    def coerce_other(self, value):
        if isinstance(value, Fraction):
            return self.div(self.from_int(value.numerator), self.from_int(value.denominator))
        return super().coerce_other(value)

    def __str__(self):
        return f"GF({self.p})"


class ExtensionField(Field):
    """GF(p^k) as GF(p)[x] / (modulus)."""

    _TABLE_LIMIT = 1 << 16

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if k < 2:
            raise ModulusDegreeMismatch("extension degree must be at least 2")
        if modulus is None:
            modulus = default_modulus(p, k)
        else:
            modulus = [int(c) % p for c in modulus]
            if len(modulus) == k + 1:
                if modulus[-1] != 1:
                    raise ModulusDegreeMismatch("modulus must be monic of degree k")
                modulus = modulus[:-1]
            if len(modulus) != k:
                raise ModulusDegreeMismatch(
                    f"expected {k} non-leading coefficients, got {len(modulus)}"
                )
            modulus = tuple(modulus)
            if not _is_irreducible(list(modulus) + [1], p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.characteristic = p
        self.degree = k
        self.modulus = tuple(modulus)
        self.q = p**k
        self.key = ("GF", p, k, self.modulus)
        self._prime = PrimeField(p)
        self._exp = None
        self._log = None
        if self.q <= self._TABLE_LIMIT:
            self._build_tables()

    # packed <-> digits
    def digits(self, a):
        p = self.p
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def pack(self, digits):
        p = self.p
        n = 0
        for d in reversed(digits):
            n = n * p + d % p
        return n

    def _slow_mul(self, a, b):
        p, k = self.p, self.degree
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        # reduce with x^k = -sum c_i x^i
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg] % p
            if c:
                for i, m in enumerate(self.modulus):
                    prod[deg - k + i] -= c * m
            prod[deg] = 0
        return self.pack([c % p for c in prod[:k]])

    def _build_tables(self):
        q = self.q
        for g in range(2, q):
            exp = [0] * (q - 1)
            x = 1
            ok = True
            for i in range(q - 1):
                exp[i] = x
                x = self._slow_mul(x, g)
                if x == 1 and i < q - 2:
                    ok = False
                    break
            if ok:
                log = [0] * q
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp = exp
                self._log = log
                return
        raise AssertionError("no primitive element")  # pragma: no cover

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        out, place = 0, 1
        while a:
            a, x = divmod(a, p)
            out += (-x % p) * place
            place *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._slow_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.power(a, self.q - 2)

    def power(self, a, n):
        if self._log is not None:
            if a == 0:
                if n < 0:
                    raise DivisionByZero("division by zero")
                return 1 if n == 0 else 0
            return self._exp[(self._log[a] * n) % (self.q - 1)]
        return super().power(a, n)

    def from_int(self, n):
        return n % self.p

    @property
    def order(self):
        return self.q

    @property
    def prime_field(self):
        return self._prime

    def raw_elements(self):
        return range(self.q)

    def generator(self):
        """The class of x in GF(p)[x]/(modulus)."""
        return FieldElement(self, self.p)

    def format_raw(self, a):
        return "[" + ",".join(str(d) for d in self.digits(a)) + "]"

    def parse_raw(self, text):
        text = text.strip().replace("−", "-")
        if text.startswith("[") and text.endswith("]"):
            body = text[1:-1].strip()
            parts = [s for s in body.split(",")] if body else []
            try:
                coeffs = [int(s) for s in parts]
            except ValueError as exc:
                raise ParseError(f"bad coefficient list {text!r}") from exc
            if len(coeffs) > self.degree:
                raise ParseError(f"too many coefficients in {text!r} for {self}")
            return self.pack(coeffs + [0] * (self.degree - len(coeffs)))
        try:
            return self.from_int(int(text))
        except ValueError as exc:
            raise ParseError(f"bad element literal {text!r} for {self}") from exc

    def to_json(self, a):
        return self.digits(a)

    def from_json(self, obj):
        if isinstance(obj, list):
            if len(obj) > self.degree:
                raise ParseError(f"too many coefficients for {self}")
            return self.pack([int(c) for c in obj] + [0] * (self.degree - len(obj)))
        return self.coerce(obj)

    def coerce_other(self, value):
        if isinstance(value, (list, tuple)):
            return self.from_json(list(value))
        return super().coerce_other(value)

    def __str__(self):
        if self.modulus == default_modulus(self.p, self.degree):
            return f"GF({self.p}^{self.degree})"
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.degree}; {coeffs})"


class RationalField(Field):
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self):
        self.key = ("QQ",)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def power(self, a, n):
        if a == 0 and n < 0:
            raise DivisionByZero("division by zero")
        return a**n

    def raw_elements(self):
        raise ValueError("QQ is infinite")

    def parse_raw(self, text):
        try:
            return Fraction(text.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}") from exc

    def coerce_other(self, value):
        if isinstance(value, Fraction):
            return value
        return super().coerce_other(value)

    def to_json(self, a):
        return str(a)

    def __str__(self):
        return "QQ"


QQ = RationalField()


def make_field(characteristic: int, degree: int = 1, modulus=None) -> Field:
    """Build GF(p), GF(p^k) or QQ (characteristic 0).

    ``modulus`` is either the k non-leading coefficients ``(c_0..c_{k-1})`` or
    the full monic coefficient list of length k+1, low degree first.
    """
    if degree < 1:
        raise ModulusDegreeMismatch("degree must be positive")
    if characteristic == 0:
        if degree != 1 or modulus is not None:
            raise ModulusDegreeMismatch("QQ has no extensions here")
        return QQ
    if not is_prime(characteristic):
        raise NonPrimeCharacteristic(f"{characteristic} is not prime")
    if degree == 1:
        if modulus is not None and len(modulus) not in (1, 2):
            raise ModulusDegreeMismatch("a prime field takes a linear modulus at most")
        return PrimeField(characteristic)
    return ExtensionField(characteristic, degree, modulus)


def GF(q: int, modulus=None) -> Field:
    """Finite field of order q (a prime power)."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    k, n = 0, q
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return make_field(p, k, modulus)


_FIELD_RE = re.compile(
    r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?(?:;\s*([-\d\s,]+))?\)\s*$"
)


def parse_field(text: str) -> Field:
    """Parse ``QQ``, ``GF(p)``, ``GF(p^k)`` or ``GF(p^k; c_0,...,c_{k-1})``.

    ``GF(q)`` with ``q`` a prime power is read as ``GF(p^k)``.
    """
    if text.strip() in ("QQ", "Q"):
        return QQ
    match = _FIELD_RE.match(text)
    if not match:
        raise ParseError(f"unrecognised field specification {text!r}", text, 0)
    p = int(match.group(1))
    k = int(match.group(2) or 1)
    modulus = None
    if match.group(3) is not None:
        modulus = [int(c) for c in match.group(3).split(",") if c.strip()]
    if not is_prime(p):
        if match.group(2) is None and modulus is None:
            return GF(p)
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if k == 1 and modulus is not None:
        raise ModulusDegreeMismatch("prime fields take no modulus")
    return make_field(p, k, modulus)


class FieldElement:
    """An element of a field together with its owner."""

    __slots__ = ("owner", "raw")

    def __init__(self, owner: Field, raw):
        self.owner = owner
        self.raw = raw

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.owner != self.owner:
                raise FieldMismatch(f"{self.owner} vs {other.owner}")
            return other.raw
        if isinstance(other, int):
            return self.owner.from_int(other)
        return NotImplemented

    def _wrap(self, raw):
        return FieldElement(self.owner, raw)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.add(self.raw, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.sub(self.raw, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.sub(b, self.raw))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.mul(self.raw, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.div(self.raw, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.owner.div(b, self.raw))

    def __neg__(self):
        return self._wrap(self.owner.neg(self.raw))

    def __pow__(self, n: int):
        return self._wrap(self.owner.power(self.raw, n))

    def inverse(self):
        return self._wrap(self.owner.inv(self.raw))

    def is_zero(self) -> bool:
        return self.owner.is_zero(self.raw)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.owner == other.owner and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.owner.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.owner.key, self.raw))

    def __str__(self):
        return self.owner.format_raw(self.raw)

    def __repr__(self):
        return f"{self.owner.format_raw(self.raw)} in {self.owner}"

    def to_json(self):
        return self.owner.to_json(self.raw)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` in {add, sub, mul, div} to two elements of one field."""
    if a.owner != b.owner:
        raise FieldMismatch(f"{a.owner} vs {b.owner}")
    ops = {"add": a.owner.add, "sub": a.owner.sub, "mul": a.owner.mul, "div": a.owner.div}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return FieldElement(a.owner, ops[op](a.raw, b.raw))


# ---------------------------------------------------------------------------
# Univariate polynomials.


class PolyRing:
    """K[gamma] with the same raw interface as a field (minus division).

    Raw values are tuples of raw field coefficients, low degree first, with
    trailing zeros stripped; the zero polynomial is ``()``.
    """

    def __init__(self, field: Field, var: str = "γ"):
        self.field = field
        self.var = var
        self.zero = ()
        self.one = (field.one,)
        self.characteristic = field.characteristic
        self.key = ("poly", field.key)

    @property
    def gen(self):
        return (self.field.zero, self.field.one)

    def _trim(self, coeffs):
        is_zero = self.field.is_zero
        n = len(coeffs)
        while n and is_zero(coeffs[n - 1]):
            n -= 1
        return tuple(coeffs[:n])

    def constant(self, c):
        return () if self.field.is_zero(c) else (c,)

    def from_int(self, n):
        return self.constant(self.field.from_int(n))

    def is_zero(self, a):
        return not a

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return self._trim(out)

    def neg(self, a):
        neg = self.field.neg
        return tuple(neg(c) for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        F = self.field
        out = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return self._trim(out)

    def inv(self, a):
        if len(a) != 1:
            raise DivisionByZero("only nonzero constants are invertible in K[γ]")
        return (self.field.inv(a[0]),)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n):
        if n < 0:
            return self.power(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def evaluate(self, a, x):
        F = self.field
        acc = F.zero
        for c in reversed(a):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def format_raw(self, a):
        if not a:
            return "0"
        F = self.field
        terms = []
        for i, c in enumerate(a):
            if F.is_zero(c):
                continue
            cs = F.format_raw(c)
            if i == 0:
                terms.append(cs)
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                terms.append(mono if c == F.one else f"{cs}{mono}")
        return "+".join(terms)

    def to_json(self, a):
        return [self.field.to_json(c) for c in a]

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return f"{self.field}[{self.var}]"


class Polynomial:
    """Immutable polynomial over a field; arithmetic via :class:`PolyRing`."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, owner, coeffs=()):
        ring = owner if isinstance(owner, PolyRing) else PolyRing(owner)
        self.ring = ring
        F = ring.field
        raw = [F.coerce(c) for c in coeffs]
        self.coeffs = ring._trim(raw)

    @classmethod
    def _from_raw(cls, ring, raw):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = raw
        return obj

    @classmethod
    def gamma(cls, field: Field):
        ring = PolyRing(field)
        return cls._from_raw(ring, ring.gen)

    @property
    def owner(self) -> Field:
        return self.ring.field

    def _other(self, other):
        if isinstance(other, Polynomial):
            if other.owner != self.owner:
                raise FieldMismatch(f"{self.owner} vs {other.owner}")
            return other.coeffs
        if isinstance(other, FieldElement):
            if other.owner != self.owner:
                raise FieldMismatch(f"{self.owner} vs {other.owner}")
            return self.ring.constant(other.raw)
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Polynomial._from_raw(self.ring, self.ring.add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Polynomial._from_raw(self.ring, self.ring.sub(self.coeffs, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Polynomial._from_raw(self.ring, self.ring.sub(b, self.coeffs))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return Polynomial._from_raw(self.ring, self.ring.mul(self.coeffs, b))

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial._from_raw(self.ring, self.ring.neg(self.coeffs))

    def __pow__(self, n: int):
        return Polynomial._from_raw(self.ring, self.ring.power(self.coeffs, n))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> FieldElement:
        F = self.owner
        raw = self.coeffs[i] if 0 <= i < len(self.coeffs) else F.zero
        return FieldElement(F, raw)

    def eval_at(self, x) -> FieldElement:
        F = self.owner
        return FieldElement(F, self.ring.evaluate(self.coeffs, F.coerce(x)))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.owner == other.owner and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.owner.key, self.coeffs))

    def __str__(self):
        return self.ring.format_raw(self.coeffs)

    __repr__ = __str__


def poly_ops(p: Polynomial, q, op: str):
    """Dispatch helper mirroring the documented polynomial operations.

    ``op`` is one of ``add``, ``mul``, ``eval_at``, ``is_zero``, ``coeff``;
    for the last three ``q`` is the evaluation point, ignored, or the index.
    """
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "eval_at":
        return p.eval_at(q)
    if op == "is_zero":
        return p.is_zero()
    if op == "coeff":
        return p.coeff(q)
    raise ValueError(f"unknown operation {op!r}")


def binomial_in(field, n: int, k: int):
    """binom(n, k) as a raw element of ``field``."""
    return field.from_int(comb(n, k))
