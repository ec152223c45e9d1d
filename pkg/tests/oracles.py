"""Independent reference computations used by the tests.

Nothing here calls the straightening or weight code of the package.
"""

import itertools
from fractions import Fraction

from plethysm.shapes import enumerate_tableaux


def _sign(perm) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def polytabloid_rows(rows) -> dict:
    """``e(t)`` in ``Sym^λ V``: signed sum over column permutations, keyed by sorted rows."""
    ncols = len(rows[0]) if rows else 0
    columns = [[row[j] for row in rows if len(row) > j] for j in range(ncols)]
    out: dict = {}
    for perms in itertools.product(*(itertools.permutations(range(len(c))) for c in columns)):
        sign = 1
        new_rows = [list(r) for r in rows]
        for j, perm in enumerate(perms):
            sign *= _sign(perm)
            for i, k in enumerate(perm):
                new_rows[i][j] = columns[j][k]
        key = tuple(tuple(sorted(r)) for r in new_rows)
        out[key] = out.get(key, 0) + sign
    return {k: v for k, v in out.items() if v}


def solve_in_span(vectors: list, target: dict):
    """Coefficients expressing ``target`` in the span of sparse ``vectors`` over QQ, or None."""
    echelon = []  # (pivot key, reduced vector, combination of inputs)
    for idx, vec in enumerate(vectors):
        v = {k: Fraction(c) for k, c in vec.items()}
        combo = {idx: Fraction(1)}
        for key, row, rc in echelon:
            if key in v:
                f = v[key]
                for k, c in row.items():
                    v[k] = v.get(k, 0) - f * c
                for k, c in rc.items():
                    combo[k] = combo.get(k, 0) - f * c
                v = {k: c for k, c in v.items() if c}
        if not v:
            raise ValueError("input vectors are dependent")
        key = min(v)
        f = v[key]
        echelon.append((key, {k: c / f for k, c in v.items()}, {k: c / f for k, c in combo.items()}))
    v = {k: Fraction(c) for k, c in target.items()}
    coeffs: dict = {}
    for key, row, rc in echelon:
        if key in v:
            f = v[key]
            for k, c in row.items():
                v[k] = v.get(k, 0) - f * c
            for k, c in rc.items():
                coeffs[k] = coeffs.get(k, 0) + f * c
            v = {k: c for k, c in v.items() if c}
    if v:
        return None
    return {k: c for k, c in coeffs.items() if c}


_BASES: dict = {}


def ssyt_coordinates(t, n: int) -> dict:
    """``e(t)`` written in the semistandard polytabloids, as ``{tableau: int}``."""
    shape = t.shape
    if (shape, n) not in _BASES:
        basis = enumerate_tableaux(shape, n, "SSYT")
        _BASES[(shape, n)] = (basis, [polytabloid_rows(s.rows) for s in basis])
    basis, vectors = _BASES[(shape, n)]
    coeffs = solve_in_span(vectors, polytabloid_rows(t.rows))
    if coeffs is None:
        raise AssertionError(f"e({t}) is not in the span of the semistandard polytabloids")
    out = {}
    for k, c in coeffs.items():
        assert c.denominator == 1
        out[basis[k]] = int(c)
    return out


def _sym_product(columns, F) -> dict:
    """Product in ``Sym V`` of vectors given as ``{basis index: value}``; keys are sorted index tuples."""
    out = {(): F.one}
    for col in columns:
        nxt: dict = {}
        for key, c in out.items():
            for i, a in col.items():
                k = tuple(sorted(key + (i,)))
                nxt[k] = F.add(nxt.get(k, F.zero), F.mul(c, a))
        out = {k: v for k, v in nxt.items() if not F.is_zero(v)}
    return out


def nabla_defects_by_rows(shape, V, tmax) -> set:
    """Generic-mode defects of ``e(t_max)`` in ``∇^λ V``, via its rows in ``Sym^λ V``.

    Applies ``M_1`` to every factor of every row of the polytabloid; the
    homogeneity of ``M_γ`` makes the weight support of that single image
    equal to the Borel weight support.
    """
    from plethysm.repmod import GroupElement

    F = V.field
    A = V.matrix(GroupElement.M(F, F.one))
    w = V.weights()
    top = sum(w[x - 1] for row in tmax.rows for x in row)
    total: dict = {}
    for key, sign in polytabloid_rows(tmax.rows).items():
        image = {(): F.from_int(sign)}
        for row in key:
            factor = _sym_product([A[x - 1] for x in row], F)
            image = {a + (b,): F.mul(c, d) for a, c in image.items() for b, d in factor.items()}
        for k, c in image.items():
            total[k] = F.add(total.get(k, F.zero), c)
    weights = {sum(w[i] for row in k for i in row) for k, c in total.items() if not F.is_zero(c)}
    return {(top - x) // 2 for x in weights}
