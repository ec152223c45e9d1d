"""Torus weights, highest weight vectors and defect sets.

The torus ``diag(t, 1/t)`` acts on every canonical basis vector by a power of
``t``; that exponent is the (integer) weight. Over GF(q) only exponents mod
``q - 1`` are visible, so :class:`WeightMode` ``Concrete(q)`` folds weights
into a fixed window of representatives.

For a weight vector ``v`` of weight ``m`` the matrix entries of ``M_γ`` are
homogeneous: the weight ``m - 2k`` component of ``M_γ v`` is ``γ^k`` times
the same component of ``M_1 v``. Generic mode uses this to read off the
support of the Borel submodule from a single product; the symbolic and
enumerating strategies are available for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import ModeMismatch, NotAWeightVector, NoUniqueHighestWeight
from .field import GF, carry_free_summand, multinomial_nonzero_mod_p
from .shapes import Tableau
from .repmod import Delta, GroupElement, Rep, Tabloids, Vector, wedge_product

__all__ = [
    "WeightMode",
    "Generic",
    "Concrete",
    "WeightReport",
    "DefectSet",
    "Undefined",
    "weight_report",
    "borel_weight_support",
    "defect_set",
    "defect_oracle",
    "delta_in_wedge",
    "defect_sum",
    "rep_over",
]


@dataclass(frozen=True)
class WeightMode:
    kind: str = "generic"
    q: int | None = None

    def __post_init__(self):
        if self.kind not in ("generic", "concrete"):
            raise ValueError(f"unknown weight mode {self.kind!r}")
        if self.kind == "concrete" and (self.q is None or self.q < 2):
            raise ValueError("concrete mode needs the field order q")

    @property
    def is_concrete(self) -> bool:
        return self.kind == "concrete"

    def window(self):
        """Inclusive range of weight representatives (concrete mode)."""
        q = self.q
        if q % 2:
            return -(q - 1) // 2 + 1, (q - 1) // 2
        return -q // 2 + 1, q // 2 - 1

    def fold(self, w: int) -> int:
        if not self.is_concrete:
            return w
        lo, _ = self.window()
        return (w - lo) % (self.q - 1) + lo

    def max_defect(self):
        if not self.is_concrete:
            return None
        q = self.q
        return (q - 1) // 2 if q % 2 else q // 2 - 1

    def __str__(self):
        return "generic" if not self.is_concrete else f"concrete({self.q})"


def Generic() -> WeightMode:
    return WeightMode("generic")


def Concrete(q: int) -> WeightMode:
    return WeightMode("concrete", q)


@dataclass
class WeightReport:
    rep: Rep
    mode: WeightMode
    weights: dict  # weight -> list of basis indices
    weight_of: list  # folded weight per basis index
    highest: tuple | None  # (basis index, weight), None when not unique
    top_weight: int

    @property
    def unique(self) -> bool:
        return self.highest is not None

    def labels(self, w: int) -> list:
        basis = self.rep.basis()
        return [basis[j] for j in self.weights.get(w, [])]

    def highest_vector(self) -> Vector:
        if self.highest is None:
            raise NoUniqueHighestWeight(f"{self.rep.spec()} has no unique highest weight vector")
        return Vector(self.rep, {self.highest[0]: self.rep.field.one})


def weight_report(rep: Rep, mode: WeightMode | None = None) -> WeightReport:
    mode = mode or Generic()
    folded = [mode.fold(w) for w in rep.weights()]
    groups: dict = {}
    for j, w in enumerate(folded):
        groups.setdefault(w, []).append(j)
    top = max(groups) if groups else 0
    highest = (groups[top][0], top) if groups and len(groups[top]) == 1 else None
    return WeightReport(rep, mode, dict(sorted(groups.items())), folded, highest, top)


@dataclass(frozen=True)
class DefectSet:
    elements: frozenset
    mode: WeightMode = dc_field(default_factory=Generic)
    highest_weight: int | None = None

    defined = True

    def __contains__(self, d):
        return d in self.elements

    def sorted(self) -> list:
        return sorted(self.elements)

    def __eq__(self, other):
        if isinstance(other, DefectSet):
            return self.elements == other.elements
        if isinstance(other, (set, frozenset)):
            return self.elements == frozenset(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"DefectSet({self.sorted()})"


@dataclass(frozen=True)
class Undefined:
    """Result of :func:`defect_set` when the top weight space is not a line."""

    mode: WeightMode = dc_field(default_factory=Generic)
    top_weight: int | None = None
    top_dimension: int = 0

    defined = False

    def __repr__(self):
        return "Undefined"


def rep_over(rep: Rep, field) -> Rep:
    """The same constructor tree over another field."""
    if rep.field == field:
        return rep
    from .notation import parse_rep

    return parse_rep(rep.spec(), field)


def _vector_weight(rep: Rep, v: Vector, mode: WeightMode) -> int:
    ws = rep.weights()
    seen = {mode.fold(ws[j]) for j in v.coeffs}
    if len(seen) != 1:
        raise NotAWeightVector("vector is zero or mixes several weights")
    return seen.pop()


def _act_vector(rep: Rep, g: GroupElement, v: Vector) -> dict:
    from .linalg import sparse_add_into

    R = g.ring
    vec = v.lift(R) if v.ring != R else v
    out: dict = {}
    for j, c in vec.coeffs.items():
        sparse_add_into(out, rep.act_basis(g, j), c, R)
    return out


def _columns_support(rep: Tabloids, columns, g: GroupElement, mode: WeightMode) -> set:
    """Folded weights of ``g . |t|`` for a column tabloid ``|t|`` of ``rep``.

    ``g . |t|`` is a pure tensor of column wedges, so its support is the
    Minkowski sum of the column supports.
    """
    R = g.ring
    A = rep.inner.matrix(g)
    inner_w = rep.inner.weights()
    sums = {0}
    for col in columns:
        raw = wedge_product([A[x - 1] for x in col], R, increasing=True)
        col_w = {sum(inner_w[i] for i in key) for key, c in raw.items() if not R.is_zero(c)}
        sums = {a + b for a in sums for b in col_w}
    return {mode.fold(w) for w in sums}


def _support_after(rep: Rep, g: GroupElement, v: Vector, mode: WeightMode) -> set:
    """Folded weights of the nonzero components of ``g . v``."""
    if isinstance(rep, Tabloids) and len(v.coeffs) == 1:
        (j,) = v.coeffs
        return _columns_support(rep, rep.basis()[j].columns, g, mode)
    ws = rep.weights()
    out = _act_vector(rep, g, v)
    return {mode.fold(ws[j]) for j in out}


def borel_weight_support(rep: Rep, v: Vector, mode: WeightMode | None = None, strategy: str = "auto") -> set:
    """Weights ``r`` with ``(B v)_r != 0``, where ``B`` is the lower Borel subgroup.

    Strategies: ``graded`` (one product with ``M_1``), ``symbolic`` (``M_γ``
    over ``K[γ]``), ``enumerate`` (every ``γ`` in ``GF(q)``, concrete mode
    only). ``auto`` uses ``graded`` whenever folding is injective on the
    weights involved.
    """
    mode = mode or Generic()
    ws = rep.weights()
    _vector_weight(rep, v, mode)
    if strategy == "auto":
        if not mode.is_concrete:
            strategy = "graded"
        else:
            top = max(abs(w) for w in ws)
            strategy = "graded" if mode.q > 1 + 2 * top else "enumerate"
    F = rep.field
    if strategy == "graded":
        return _support_after(rep, GroupElement.M(F, F.one), v, mode)
    if strategy == "symbolic":
        return _support_after(rep, GroupElement.M_symbolic(F), v, mode)
    if strategy == "enumerate":
        if not mode.is_concrete:
            raise ModeMismatch("enumeration needs a concrete mode")
        big = GF(mode.q)
        if big.characteristic != F.characteristic:
            raise ModeMismatch("field order does not match the characteristic")
        rep_q = rep_over(rep, big)
        vq = Vector(rep_q, {j: big.coerce(F.format_raw(c)) if F != big else c for j, c in v.coeffs.items()})
        folded: set = set()
        for gamma in big.raw_elements():
            folded |= _support_after(rep_q, GroupElement.M(big, gamma), vq, mode)
        return folded
    raise ValueError(f"unknown strategy {strategy!r}")


def delta_in_wedge(shape, V: Rep):
    """Ambient ``⋀^{λ'} V`` for ``Δ^λ V`` and the highest column tableau ``t_max``.

    ``t_max`` fills every column with the basis vectors of largest weight,
    listed increasingly. Returns ``(ambient rep, t_max)``; the ambient basis
    is never enumerated.
    """
    report = weight_report(V)
    if not report.unique:
        raise NoUniqueHighestWeight(f"{V.spec()} has no unique highest weight vector")
    amb = Tabloids(shape, V)
    ws = V.weights()
    order = sorted(range(V.dim), key=lambda j: (ws[j], j), reverse=True)
    cols = [tuple(sorted(x + 1 for x in order[:h])) for h in amb.shape.conjugate()]
    return amb, Tableau.from_columns(cols)


def _delta_support(amb: Tabloids, columns, mode: WeightMode, strategy: str) -> set:
    F = amb.field
    if strategy == "auto":
        top = sum(max(abs(w) for w in amb.inner.weights()) for col in columns for _ in col)
        if not mode.is_concrete or mode.q > 1 + 2 * top:
            strategy = "graded"
        else:
            strategy = "enumerate"
    if strategy == "graded":
        return _columns_support(amb, columns, GroupElement.M(F, F.one), mode)
    if strategy == "symbolic":
        return _columns_support(amb, columns, GroupElement.M_symbolic(F), mode)
    if strategy == "enumerate":
        if not mode.is_concrete:
            raise ModeMismatch("enumeration needs a concrete mode")
        big = GF(mode.q)
        amb_q = rep_over(amb, big)
        out: set = set()
        for gamma in big.raw_elements():
            out |= _columns_support(amb_q, columns, GroupElement.M(big, gamma), mode)
        return out
    raise ValueError(f"unknown strategy {strategy!r}")


def defect_set(rep: Rep, mode: WeightMode | None = None, strategy: str = "auto", delta_via_wedge: bool = True):
    """The defect set ``{d : (B v)_{m - 2d} != 0}`` of the highest weight vector ``v``."""
    mode = mode or Generic()
    report = weight_report(rep, mode)
    if report.highest is None:
        return Undefined(mode, report.top_weight, len(report.weights[report.top_weight]))
    if isinstance(rep, Delta) and delta_via_wedge:
        amb, tmax = delta_in_wedge(rep.shape, rep.inner)
        support = _delta_support(amb, tmax.columns, mode, strategy)
        return _defects_from_support(report.top_weight, support, mode)
    v = report.highest_vector()
    support = borel_weight_support(rep, v, mode, strategy)
    return _defects_from_support(report.top_weight, support, mode)


def _defects_from_support(m: int, support: set, mode: WeightMode) -> DefectSet:
    if not mode.is_concrete:
        elements = {(m - w) // 2 for w in support if (m - w) % 2 == 0 and w <= m}
        return DefectSet(frozenset(elements), mode, m)
    elements = {d for d in range(mode.max_defect() + 1) if mode.fold(m - 2 * d) in support}
    return DefectSet(frozenset(elements), mode, m)


def defect_sum(a: DefectSet, b: DefectSet) -> DefectSet:
    """Minkowski sum, the upper bound for the defect set of a tensor product."""
    if a.mode != b.mode:
        raise ModeMismatch("defect sets from different modes")
    return DefectSet(frozenset(x + y for x in a.elements for y in b.elements), a.mode)


def _compositions(total: int, parts: int):
    """Tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def defect_oracle(kind: str, params: dict, p: int) -> DefectSet:
    """Closed-form defect sets of symmetric powers and their plethysms.

    ``sym_lower``/``sym_upper`` take ``l``; the ``symsym_XY`` kinds take ``m``
    (outer degree) and ``l`` (inner degree). ``X`` is ``L`` for an outer
    ``Sym_m`` and ``U`` for ``Sym^m``; ``Y`` likewise for the inner power.
    A composition ``(m_0, ..., m_l)`` of ``m`` contributes ``Σ j m_j``;
    an inner ``U`` requires every used ``j`` to be carry-free in ``l``, an
    outer ``U`` requires ``m_0 + ... + m_l`` to be carry-free.
    """
    if kind == "sym_lower":
        return DefectSet(frozenset(range(params["l"] + 1)))
    if kind == "sym_upper":
        l = params["l"]
        return DefectSet(frozenset(d for d in range(l + 1) if carry_free_summand(d, l, p)))
    if kind not in ("symsym_LL", "symsym_LU", "symsym_UL", "symsym_UU"):
        raise ValueError(f"unknown oracle kind {kind!r}")
    m, l = params["m"], params["l"]
    outer_upper = kind[-2] == "U"
    inner_upper = kind[-1] == "U"
    out = set()
    for comp in _compositions(m, l + 1):
        if inner_upper and any(c and not carry_free_summand(j, l, p) for j, c in enumerate(comp)):
            continue
        if outer_upper and not multinomial_nonzero_mod_p(comp, p):
            continue
        out.add(sum(j * c for j, c in enumerate(comp)))
    return DefectSet(frozenset(out))


def zero_weight_support(rep: Rep, mode: WeightMode | None = None) -> dict:
    """Borel weight supports of the basis vectors of weight 0, keyed by label index."""
    mode = mode or Generic()
    report = weight_report(rep, mode)
    F = rep.field
    out = {}
    for j in report.weights.get(0, []):
        out[j] = borel_weight_support(rep, Vector(rep, {j: F.one}), mode)
    return out
