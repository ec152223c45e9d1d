"""Explicit isomorphisms between plethysms as column-stored linear maps.

All maps act on column coordinates: ``columns[j]`` is the image of the j-th
domain basis vector, as a sparse dict over codomain indices.
"""

from __future__ import annotations

from math import factorial

from .errors import DoesNotFitRectangle, FieldMismatch, KindMismatch, RankOutOfRange
from .field import Field, PolyRing
from .linalg import map_ring, matmul, rank, sparse_add_into, transpose
from .repmod import (
    ContraDual,
    DetPower,
    Dual,
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
    _counts,
)
from .shapes import (
    complement_partition,
    complement_tableau,
    distinct_permutations,
    permutation_sign,
    surplus,
)


class LinearMap:
    """A linear map between two reps over the same field."""

    def __init__(self, domain: Rep, codomain: Rep, columns: list, name: str = "", params=None):
        if domain.field != codomain.field:
            raise FieldMismatch("domain and codomain over different fields")
        if len(columns) != domain.dim:
            raise ValueError("one column per domain basis vector is required")
        self.domain = domain
        self.codomain = codomain
        self.columns = columns
        self.name = name
        self.params = dict(params or {})

    @property
    def field(self) -> Field:
        return self.domain.field

    def matrix_in(self, ring) -> list:
        """Columns with entries moved into ``ring`` (a field or its PolyRing)."""
        if ring == self.field:
            return self.columns
        if isinstance(ring, PolyRing) and ring.field == self.field:
            return map_ring(self.columns, ring.constant, ring)
        raise FieldMismatch(f"cannot use a map over {self.field} in {ring}")

    def apply(self, v: Vector) -> Vector:
        if v.rep != self.domain:
            raise FieldMismatch("vector is not in the domain")
        R = v.ring
        cols = self.matrix_in(R)
        out: dict = {}
        for j, c in v.coeffs.items():
            sparse_add_into(out, cols[j], c, R)
        return Vector(self.codomain, out, R)

    def __call__(self, v: Vector) -> Vector:
        return self.apply(v)

    def image_of(self, label) -> Vector:
        return Vector(self.codomain, self.columns[self.domain.index(label)])

    def then(self, other: "LinearMap", name: str = "") -> "LinearMap":
        """The composite ``other ∘ self``."""
        if other.domain != self.codomain:
            raise FieldMismatch(f"cannot compose {self.codomain} with {other.domain}")
        cols = matmul(other.columns, self.columns, self.field)
        return LinearMap(self.domain, other.codomain, cols, name or f"{other.name}∘{self.name}")

    def rank(self) -> int:
        return rank(self.columns, self.codomain.dim, self.field)

    def is_bijective(self) -> bool:
        return self.domain.dim == self.codomain.dim and self.rank() == self.domain.dim

    def dual(self) -> "LinearMap":
        """The transpose map ``codomain^∨ -> domain^∨``."""
        return LinearMap(
            Dual(self.codomain), Dual(self.domain), transpose(self.columns, self.codomain.dim),
            name=f"{self.name}^∨",
        )

    def to_json(self) -> dict:
        F = self.field
        cod = self.codomain
        cols = {}
        for j, col in enumerate(self.columns):
            cols[self.domain.label_string(j)] = {
                cod.label_string(i): F.format_raw(col[i]) for i in sorted(col)
            }
        return {
            "name": self.name,
            "field": str(F),
            "domain": self.domain.spec(),
            "codomain": cod.spec(),
            "columns": cols,
        }

    def __repr__(self):
        return f"<LinearMap {self.name}: {self.domain.spec()} -> {self.codomain.spec()}>"


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _twisted(rep: Rep, k: int) -> Rep:
    return Tensor(rep, DetPower(k, rep.field))


def identity_map(rep: Rep) -> LinearMap:
    F = rep.field
    return LinearMap(rep, rep, [{j: F.one} for j in range(rep.dim)], name="id")


def relabel_map(domain: Rep, codomain: Rep, name: str) -> LinearMap:
    """The map sending each basis vector to the codomain vector with the same label."""
    F = domain.field
    cols = [{codomain.index(lab): F.one} for lab in domain.basis()]
    return LinearMap(domain, codomain, cols, name=name)


# ---------------------------------------------------------------------------
# ψ and Ψ


def psi_exterior(V: Rep, r: int, twist: bool = False) -> LinearMap:
    """``⋀^r V -> ⋀^{d-r}(V^∨)``: ``v_{1σ}∧…∧v_{rσ} ↦ sgn(σ) v^∨_{(r+1)σ}∧…∧v^∨_{dσ}``.

    Wedges in the formula above are in increasing index order; the
    canonical wedge bases list indices in decreasing order, and the
    reordering signs are folded in. With ``twist`` the codomain is tensored
    with ``det V`` so the map is GL2-equivariant.
    """
    d = V.dim
    if not 0 <= r <= d:
        raise RankOutOfRange(f"r must lie in 0..{d}")
    F = V.field
    dom = Wedge(r, V)
    cod = Wedge(d - r, Dual(V))
    fix = _sign(r * (r - 1) // 2) * _sign((d - r) * (d - r - 1) // 2)
    cols = []
    for lab in dom.basis():
        chosen = sorted(lab)
        rest = [x for x in range(d) if x not in lab]
        sign = permutation_sign(chosen + rest) * fix
        cols.append({cod.index(tuple(reversed(rest))): F.from_int(sign)})
    if twist:
        cod = _twisted(cod, V.det_exponent())
    return LinearMap(dom, cod, cols, name="psi", params={"r": r, "V": V.spec()})


def _check_rectangle(shape, d: int, s: int):
    shape = tuple(shape)
    if len(shape) > d or (shape and shape[0] > s):
        raise DoesNotFitRectangle(f"{shape} does not fit in a {d} x {s} rectangle")


def psi_tabloid(shape, d: int, s: int, V: Rep, twist: bool = False) -> LinearMap:
    """``Ψ |t| = (-1)^{S(t)} |t°|`` from ``⋀^{λ'}V`` to ``⋀^{λ°'}(V^∨)``."""
    _check_rectangle(shape, d, s)
    if V.dim != d:
        raise ValueError(f"V must have dimension {d}")
    F = V.field
    dom = Tabloids(shape, V)
    cod = Tabloids(complement_partition(shape, d, s), Dual(V))
    idx = cod.cols_index()
    cols = []
    for t in dom.basis():
        tc = complement_tableau(t, d, s)
        cols.append({idx[tc.columns]: F.from_int(_sign(surplus(t)))})
    if twist:
        cod = _twisted(cod, s * V.det_exponent())
    return LinearMap(dom, cod, cols, name="Psi", params={"shape": str(dom.shape), "d": d, "s": s})


def nabla_complement_iso(shape, d: int, s: int, V: Rep, twist: bool = False) -> LinearMap:
    """Induced map ``∇^λ V -> ∇^{λ°}(V^∨)``, ``e(t) ↦ (-1)^{S(t)} e(t°)`` straightened."""
    _check_rectangle(shape, d, s)
    if V.dim != d:
        raise ValueError(f"V must have dimension {d}")
    F = V.field
    dom = Nabla(shape, V)
    cod = Nabla(complement_partition(shape, d, s), Dual(V))
    cols = []
    for t in dom.basis():
        tc = complement_tableau(t, d, s)
        cols.append(cod.straighten_to_basis({tc.columns: F.from_int(_sign(surplus(t)))}, F))
    if twist:
        cod = _twisted(cod, s * V.det_exponent())
    return LinearMap(dom, cod, cols, name="complement", params={"shape": str(dom.shape), "d": d, "s": s})


# ---------------------------------------------------------------------------
# ζ


def _wedge_term(j: tuple, m: int):
    """Normalise an index sequence to a decreasing wedge label with its sign."""
    if len(set(j)) != len(j):
        return None, 0
    return tuple(sorted(j, reverse=True)), permutation_sign(j) * _sign(m * (m - 1) // 2)


def zeta(l: int, m: int, field: Field, twist: bool = False) -> LinearMap:
    """The Wronskian isomorphism ``Sym_m Sym^l E -> ⋀^m Sym^{l+m-1} E``.

    ``F_sym(i)`` is sent to the sum over distinct rearrangements ``i.σ`` of
    ``F_∧(i.σ + (m-1, ..., 1, 0))``. With ``twist`` the domain carries
    ``det^{m(m-1)/2}`` and the map is GL2-equivariant.
    """
    if l < 1 or m < 1:
        raise ValueError("l and m must be positive")
    F = field
    E = NaturalE(F)
    dom = SymLower(m, SymUpper(l, E))
    cod = Wedge(m, SymUpper(l + m - 1, E))
    shift = tuple(range(m - 1, -1, -1))
    cols = []
    for lab in dom.basis():
        col: dict = {}
        for arrangement in distinct_permutations(lab):
            key, sign = _wedge_term(tuple(a + b for a, b in zip(arrangement, shift)), m)
            if key is None:
                continue
            sparse_add_into(col, {cod.index(key): F.from_int(sign)}, F.one, F)
        cols.append(col)
    if twist:
        dom = _twisted(dom, m * (m - 1) // 2)
    return LinearMap(dom, cod, cols, name="zeta", params={"l": l, "m": m})


def zeta_tensor_extension(l: int, m: int, field: Field) -> LinearMap:
    """The naive extension ``F_⊗(i) ↦ F_∧(i + d)`` on the full tensor power."""
    F = field
    E = NaturalE(F)
    dom = TensorPower(m, SymUpper(l, E))
    cod = Wedge(m, SymUpper(l + m - 1, E))
    shift = tuple(range(m - 1, -1, -1))
    cols = []
    for lab in dom.basis():
        key, sign = _wedge_term(tuple(a + b for a, b in zip(lab, shift)), m)
        cols.append({} if key is None else {cod.index(key): F.from_int(sign)})
    return LinearMap(dom, cod, cols, name="zeta-tensor", params={"l": l, "m": m})


def cancellation_sum(index, s: int, m: int, field: Field) -> Vector:
    """``Σ_{σ ∈ S_m} F_∧(i.σ + d − e_s)`` in ``⋀^m Sym^{l+m-1} E`` (``s`` is 1-based).

    Entries of the shifted index that fall outside ``0..l+m-1`` give zero.
    """
    import itertools

    F = field
    l = max(index) if index else 0
    n = max(l + m - 1, 0)
    cod = Wedge(m, SymUpper(n, NaturalE(F)))
    shift = [m - 1 - k for k in range(m)]
    shift[s - 1] -= 1
    out: dict = {}
    for perm in itertools.permutations(range(m)):
        arrangement = [index[k] for k in perm]
        j = tuple(a + b for a, b in zip(arrangement, shift))
        if any(x < 0 or x > n for x in j):
            continue
        key, sign = _wedge_term(j, m)
        if key is None:
            continue
        sparse_add_into(out, {cod.index(key): F.from_int(sign)}, F.one, F)
    return Vector(cod, out)


# ---------------------------------------------------------------------------
# dualities


def duality_isos(kind: str, **params) -> LinearMap:
    """Canonical maps between duals and powers.

    * ``wedge`` (V, r): ``(⋀^r V)^∨ -> ⋀^r(V^∨)``; ``wedge_inverse`` the reverse;
    * ``sym`` (V, r, upper=True): ``(Sym^r V)^∨ -> Sym_r(V^∨)``, or with
      ``upper=False`` ``(Sym_r V)^∨ -> Sym^r(V^∨)``;
    * ``symduals_canonical`` (l, V=E): ``Sym_l V -> Sym^l V``, orbit sum ↦
      orbit size times the monomial;
    * ``E_self`` (field): ``E^∨ -> E``, ``X^∨ ↦ -Y``, ``Y^∨ ↦ X``.
    """
    if kind in ("wedge", "wedge_inverse"):
        V, r = _need(params, kind, "V", "r")
        a, b = Dual(Wedge(r, V)), Wedge(r, Dual(V))
        if kind == "wedge":
            return relabel_map(a, b, "dual-wedge")
        return relabel_map(b, a, "dual-wedge^-1")
    if kind == "sym":
        V, r = _need(params, kind, "V", "r")
        if params.get("upper", True):
            return relabel_map(Dual(SymUpper(r, V)), SymLower(r, Dual(V)), "dual-sym")
        return relabel_map(Dual(SymLower(r, V)), SymUpper(r, Dual(V)), "dual-sym")
    if kind == "symduals_canonical":
        (l,) = _need(params, kind, "l")
        V = params.get("V")
        if V is None:
            field = params.get("field")
            if field is None:
                raise KindMismatch("symduals_canonical needs V or field")
            V = NaturalE(field)
        F = V.field
        dom, cod = SymLower(l, V), SymUpper(l, V)
        cols = []
        for lab in dom.basis():
            size = factorial(l)
            for c in _counts(lab).values():
                size //= factorial(c)
            val = F.from_int(size)
            cols.append({} if F.is_zero(val) else {cod.index(lab): val})
        return LinearMap(dom, cod, cols, name="symduals", params={"l": l})
    if kind == "E_self":
        (field,) = _need(params, kind, "field")
        F = field
        E = NaturalE(F)
        dom = Dual(E)
        # basis order [Y, X]: Y^∨ ↦ X, X^∨ ↦ -Y
        cols = [{1: F.one}, {0: F.neg(F.one)}]
        return LinearMap(dom, E, cols, name="E-self")
    raise KindMismatch(f"unknown duality kind {kind!r}")


def _need(params, kind, *names):
    missing = [n for n in names if n not in params]
    if missing:
        raise KindMismatch(f"{kind} needs parameters {', '.join(missing)}")
    return [params[n] for n in names]


def lift(functor: Rep, phi: LinearMap, name: str = "") -> LinearMap:
    """Apply the functor of ``functor`` (``SymUpper``/``SymLower``/``Wedge``) to ``phi``."""
    if not isinstance(functor, (SymUpper, SymLower, Wedge)):
        raise KindMismatch(f"cannot lift through {functor.kind}")
    cls = type(functor)
    dom = cls(functor.r, phi.domain)
    cod = cls(functor.r, phi.codomain)
    cols = dom.induced(phi.columns, cod, phi.field)
    return LinearMap(dom, cod, cols, name=name or f"{functor.kind}({phi.name})")


def cor36_map(l: int, m: int, field: Field) -> LinearMap:
    """``⋀^l Sym^{l+m-1} E -> ⋀^m Sym_{l+m-1} E`` via ψ and the dualities."""
    F = field
    n = l + m - 1
    E = NaturalE(F)
    V = SymUpper(n, E)
    step1 = psi_exterior(V, l)
    inner = duality_isos("sym", V=E, r=n, upper=True)
    inner = inner.then(lift(SymLower(n, Dual(E)), duality_isos("E_self", field=F)))
    step2 = lift(Wedge(m, inner.domain), inner)
    out = step1.then(step2)
    out.name = "cor3.6"
    out.params = {"l": l, "m": m}
    return out


def hermite_steps(l: int, m: int, field: Field, order: str = "example") -> list:
    """The constituent maps of the Hermite isomorphism, in order."""
    F = field
    n = l + m - 1
    E = NaturalE(F)
    V = SymUpper(n, E)
    z1 = zeta(l, m, F)
    z2 = zeta(m, l, F)
    if order == "example":
        psi = psi_exterior(V, m).then(duality_isos("wedge_inverse", V=V, r=l), name="psi-dual")
        zdual = z2.dual()
        zdual.name = "zeta^∨"
        W = SymUpper(m, E)
        sym1 = duality_isos("sym", V=W, r=l, upper=False)
        sym2 = lift(SymUpper(l, Dual(W)), duality_isos("sym", V=E, r=m, upper=True))
        eself = lift(SymUpper(l, SymLower(m, Dual(E))), lift(SymLower(m, Dual(E)), duality_isos("E_self", field=F)))
        return [z1, psi, zdual, sym1.then(sym2, name="sym-duality"), eself]
    if order == "proof":
        c36 = cor36_map(m, l, F)  # ⋀^m Sym^n E -> ⋀^l Sym_n E
        # ⋀^l Sym_n E = (⋀^l Sym^n E)° with matching labels, then ζ° and back
        W = Wedge(l, SymUpper(n, E))
        to_cdual = relabel_map(c36.codomain, ContraDual(W), "cdual-id")
        zc = LinearMap(ContraDual(z2.codomain), ContraDual(z2.domain),
                       transpose(z2.columns, z2.codomain.dim), name="zeta°")
        back = relabel_map(ContraDual(z2.domain), SymUpper(l, SymLower(m, E)), "cdual-id")
        return [z1, c36, to_cdual.then(zc).then(back, name="zeta°")]
    raise KindMismatch(f"unknown composition order {order!r}")


def hermite(l: int, m: int, field: Field, order: str = "example") -> LinearMap:
    """Isomorphism ``Sym_m Sym^l E -> Sym^l Sym_m E`` (SL2-equivariant)."""
    steps = hermite_steps(l, m, field, order)
    out = steps[0]
    for step in steps[1:]:
        out = out.then(step)
    out.name = "hermite"
    out.params = {"l": l, "m": m, "order": order}
    return out
