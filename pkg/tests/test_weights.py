import pytest
from hypothesis import given, strategies as st

from oracles import nabla_defects_by_rows
from plethysm.errors import ModeMismatch, NotAWeightVector
from plethysm.field import GF, QQ
from plethysm.notation import parse_rep
from plethysm.repmod import Vector
from plethysm.weights import (
    Concrete,
    DefectSet,
    Generic,
    borel_weight_support,
    defect_oracle,
    defect_set,
    defect_sum,
    delta_in_wedge,
    weight_report,
    zero_weight_support,
)


def test_concrete_windows():
    assert Concrete(5).window() == (-1, 2)
    assert Concrete(8).window() == (-3, 3)
    assert Concrete(9).window() == (-3, 4)
    assert Concrete(8).fold(4) == -3
    assert Concrete(8).fold(-4) == 3
    assert Generic().fold(100) == 100


@given(st.integers(-200, 200), st.sampled_from([3, 4, 5, 7, 8, 9, 16, 27, 32]))
def test_fold_lands_in_window_and_respects_residues(w, q):
    mode = Concrete(q)
    lo, hi = mode.window()
    f = mode.fold(w)
    assert lo <= f <= hi
    assert (f - w) % (q - 1) == 0


def test_weight_report_example():
    rep = parse_rep("sym^4(E)", GF(2))
    report = weight_report(rep, Concrete(8))
    assert report.weights == {-3: [4], -2: [1], 0: [2], 2: [3], 3: [0]}
    assert report.highest == (0, 3)
    assert report.unique


@pytest.mark.parametrize("p,alpha", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_prime_power_symmetric_power_defects(p, alpha):
    n = p ** alpha
    assert defect_set(parse_rep(f"sym^{n}(E)", GF(p))) == {0, n}
    assert defect_set(parse_rep(f"sym_{n}(E)", GF(p))) == set(range(n + 1))


def test_undefined_when_top_weight_space_is_not_a_line():
    d = defect_set(parse_rep("sym^5(E)", GF(5)), Concrete(5))
    assert not d.defined
    # weights 5, 1 and -3 all fold to 1 modulo 4
    assert d.top_dimension == 3


def test_defect_set_equality_and_sum():
    a = DefectSet(frozenset({0, 2}))
    b = DefectSet(frozenset({0, 1}))
    assert a == {0, 2}
    assert defect_sum(a, b) == {0, 1, 2, 3}
    with pytest.raises(ModeMismatch):
        defect_sum(a, DefectSet(frozenset({0}), Concrete(8)))


def test_not_a_weight_vector():
    rep = parse_rep("sym^2(E)", GF(3))
    v = Vector(rep, {0: 1, 2: 1})
    with pytest.raises(NotAWeightVector):
        borel_weight_support(rep, v)


SMALL = ["sym^3(E)", "sym_4(E)", "sym^2(sym^2(E))", "sym_2(sym^3(E))", "wedge^2(sym^4(E))",
         "nabla[2,1](sym^2(E))", "tensor(sym^2(E),sym_3(E))"]


@pytest.mark.parametrize("spec", SMALL)
@pytest.mark.parametrize("p", [2, 3])
def test_graded_and_symbolic_strategies_agree(spec, p):
    rep = parse_rep(spec, GF(p))
    assert defect_set(rep, strategy="graded") == defect_set(rep, strategy="symbolic")


@pytest.mark.parametrize("spec", SMALL)
@pytest.mark.parametrize("q", [4, 8, 9, 16])
def test_enumeration_agrees_with_graded_folding(spec, q):
    p = 2 if q % 2 == 0 else 3
    rep = parse_rep(spec, GF(p))
    mode = Concrete(q)
    report = weight_report(rep, mode)
    if not report.unique:
        return
    graded = defect_set(rep, mode, "graded")
    enumerated = defect_set(rep, mode, "enumerate")
    top = max(abs(w) for w in rep.weights())
    if q > 1 + 2 * top:
        assert graded == enumerated
    else:
        # merged weights can only cancel, never create new ones
        assert enumerated.elements <= graded.elements


@pytest.mark.parametrize("spec", SMALL)
def test_large_concrete_mode_matches_generic(spec):
    rep = parse_rep(spec, GF(2))
    top = max(abs(w) for w in rep.weights())
    q = 2
    while q <= 1 + 2 * top:
        q *= 2
    assert defect_set(rep, Concrete(q)) == defect_set(rep)


@pytest.mark.parametrize("shape", ["2,1", "2,2", "3,1", "2,1^2", "3,1^2"])
@pytest.mark.parametrize("inner", ["sym^2(E)", "sym^3(E)", "sym_3(E)"])
@pytest.mark.parametrize("p", [2, 3])
def test_delta_via_ambient_wedge_matches_direct(shape, inner, p):
    rep = parse_rep(f"delta[{shape}]({inner})", GF(p))
    assert defect_set(rep) == defect_set(rep, delta_via_wedge=False)


@pytest.mark.parametrize("shape", ["2,1", "2,2", "3,1", "3,1^2"])
@pytest.mark.parametrize("inner", ["sym^2(E)", "sym^3(E)", "sym^4(E)"])
@pytest.mark.parametrize("p", [2, 3])
def test_nabla_defects_match_row_expansion(shape, inner, p):
    rep = parse_rep(f"nabla[{shape}]({inner})", GF(p))
    report = weight_report(rep)
    if not report.unique:
        return
    tmax = rep.basis()[report.highest[0]]
    assert defect_set(rep) == nabla_defects_by_rows(rep.shape, rep.inner, tmax)


def test_delta_in_wedge_highest_tableau():
    amb, tmax = delta_in_wedge((2, 1), parse_rep("sym^2(E)", QQ))
    assert amb.spec() == "colwedge[2,1](sym^2(E))"
    assert tmax.columns == ((2, 3), (3,))


@pytest.mark.parametrize("m,l", [(1, 4), (2, 2), (2, 3), (3, 2), (4, 2)])
@pytest.mark.parametrize("p", [2, 3])
def test_oracle_matches_direct_computation(m, l, p):
    specs = {"symsym_LL": f"sym_{m}(sym_{l}(E))", "symsym_LU": f"sym_{m}(sym^{l}(E))",
             "symsym_UL": f"sym^{m}(sym_{l}(E))", "symsym_UU": f"sym^{m}(sym^{l}(E))"}
    for kind, spec in specs.items():
        assert defect_set(parse_rep(spec, GF(p))) == defect_oracle(kind, {"m": m, "l": l}, p)


def test_zero_weight_supports_mod_four():
    F = GF(2)
    a = zero_weight_support(parse_rep("sym^4(sym^2(E))", F))
    b = zero_weight_support(parse_rep("sym^2(sym^4(E))", F))
    assert all(w % 4 == 0 for s in a.values() for w in s)
    assert any(-2 in s for s in b.values())
