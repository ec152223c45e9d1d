"""The twelve acceptance criteria, one test each.

Each test asserts the claim exactly as stated. Two of the stated claims do not
hold; those tests are strict xfails, so the run stays green while the summary
reports them as FAIL (the analysis lives in the project notes).
"""

import itertools
import time
from math import comb

import pytest

from oracles import ssyt_coordinates
from plethysm.certify import (
    AllGamma,
    SymbolicGamma,
    check_isomorphism,
    run_theorem,
)
from plethysm.field import GF, QQ
from plethysm.isomaps import psi_tabloid, zeta, zeta_tensor_extension
from plethysm.notation import format_vector, parse_rep, parse_vector
from plethysm.repmod import GroupElement, Vector, act, garnir_straighten
from plethysm.shapes import Partition, enumerate_tableaux
from plethysm.weights import Concrete, defect_oracle, defect_set


def _shapes_in(rows, cols):
    out = []
    for parts in itertools.product(range(cols + 1), repeat=rows):
        if list(parts) == sorted(parts, reverse=True) and parts[0] > 0:
            out.append(Partition(tuple(x for x in parts if x)))
    return out


def test_criterion_01_wronskian():
    start = time.perf_counter()
    for name in ("GF(2)", "GF(3)", "GF(4)", "GF(5)", "QQ"):
        for l, m in itertools.product(range(1, 5), repeat=2):
            cert = run_theorem("wronskian", {"field": name, "l": l, "m": m})
            assert cert.passed, (name, l, m, cert.evidence)
            assert cert.evidence["isomorphism"]["rank"] == comb(l + m, m)
    cert = run_theorem("wronskian", {"field": "QQ", "l": 3, "m": 3})
    assert cert.evidence["example"]["image"] == "X^5∧X^2Y^3∧XY^4 − X^4Y∧X^3Y^2∧XY^4"
    assert time.perf_counter() - start < 10


def test_criterion_02_extended_zeta_not_equivariant():
    z = zeta_tensor_extension(2, 2, QQ)
    J = GroupElement.J(QQ)
    v = Vector(z.domain, {z.domain.index((1, 2)): QQ.one})
    assert z(v).is_zero()
    lhs = z(act(J, z.domain, v))
    rhs = act(J, z.codomain, z(v))
    assert format_vector(lhs, "compact") == "−X^2Y∧Y^3"
    assert rhs.is_zero()
    assert lhs != rhs


def test_criterion_03_f_action():
    for l, m in itertools.product(range(1, 5), repeat=2):
        cert = run_theorem("f-equivariance", {"l": l, "m": m})
        assert cert.passed, (l, m, cert.evidence)
        assert cert.evidence["commutes"]


def test_criterion_04_complement_isomorphism():
    cases = 0
    for field in ("GF(2)", "GF(3)"):
        for V in ("E", "sym^2(E)", "sym^3(E)"):
            d = parse_rep(V, GF(2)).dim
            for s in range(1, 4):
                for shape in _shapes_in(min(3, d), s):
                    cert = run_theorem("complement", {"field": field, "shape": tuple(shape), "s": s, "V": V})
                    ev = cert.evidence
                    assert ev["garnir"]["preserved"], (field, V, s, shape)
                    assert ev["isomorphism"]["strategy"] == "AllGamma"
                    assert cert.passed, (field, V, s, shape, ev)
                    assert ev["dims"][0] == ev["dims"][1]
                    cases += 1
    assert cases == 2 * (16 + 31 + 31)
    Psi = psi_tabloid(Partition((3, 1)), 3, 4, parse_rep("sym^2(E)", QQ))
    image = Psi(parse_vector(Psi.domain, "|1 1 2 / 2|"))
    assert format_vector(image, "terms") == "-1 * |1 1 2 3 / 2 3 3 / 3|"


def test_criterion_05_cor36():
    for field in ("GF(2)", "GF(3)"):
        for l, m in [(1, 2), (2, 2), (2, 3), (3, 2)]:
            cert = run_theorem("cor36", {"field": field, "l": l, "m": m})
            assert cert.passed, (field, l, m, cert.evidence)


def test_criterion_06_hermite():
    for field in ("GF(2)", "GF(3)", "GF(5)"):
        for l, m in itertools.product(range(1, 4), repeat=2):
            cert = run_theorem("hermite", {"field": field, "l": l, "m": m})
            assert cert.passed, (field, l, m, cert.evidence)
    cert = run_theorem("hermite", {"field": "GF(5)", "l": 2, "m": 2})
    assert cert.evidence["example"]["image"] == "(X⊗Y)_sym·(X⊗Y)_sym − 2(X⊗X)·(Y⊗Y)"


@pytest.mark.xfail(strict=True, reason="at p=3, l=5 every binomial C(5, a) is a unit mod 3, so the map is bijective "
                                       "although the stated predicate is false")
def test_criterion_07_sym_duals():
    for p in (2, 3):
        cert = run_theorem("sym-duals", {"p": p, "lmax": 9})
        assert cert.evidence["mismatches"] == [], (p, cert.evidence["mismatches"])


def test_sym_duals_lucas_statement():
    # not a criterion: the Lucas-digit statement that does hold over the same range
    for p in (2, 3):
        cert = run_theorem("sym-duals", {"p": p, "lmax": 9})
        for row in cert.evidence["table"]:
            assert row["bijective"] == row["binomials_nonzero"]
            assert row["defects_differ"] == (not row["binomials_nonzero"])
    bad = run_theorem("sym-duals", {"p": 3, "lmax": 9}).evidence["mismatches"]
    assert bad == [5]


def test_criterion_08_defect_examples():
    for p, alpha in [(2, 1), (2, 2), (3, 1)]:
        n = p ** alpha
        assert defect_set(parse_rep(f"sym^{n}(E)", GF(p))) == {0, n}
    assert defect_set(parse_rep("sym^4(E)", GF(8)), Concrete(8)) == {0}
    d = defect_set(parse_rep("sym^5(E)", GF(5)), Concrete(5))
    assert not d.defined
    assert defect_set(parse_rep("sym^2(sym^2(E))", GF(2))) == {0, 4}


def test_criterion_09_oracle_equivalence():
    start = time.perf_counter()
    specs = {"symsym_LL": "sym_{m}(sym_{l}(E))", "symsym_LU": "sym_{m}(sym^{l}(E))",
             "symsym_UL": "sym^{m}(sym_{l}(E))", "symsym_UU": "sym^{m}(sym^{l}(E))"}
    checked = 0
    for p in (2, 3):
        for l, m in itertools.product(range(1, 13), repeat=2):
            if l * m > 12:
                continue
            for kind, spec in specs.items():
                direct = defect_set(parse_rep(spec.format(m=m, l=l), GF(p)))
                assert direct == defect_oracle(kind, {"m": m, "l": l}, p), (kind, p, m, l)
                checked += 1
    assert checked == 2 * 4 * sum(1 for l in range(1, 13) for m in range(1, 13) if l * m <= 12)
    assert time.perf_counter() - start < 60


def test_criterion_10_converse_hermite():
    start = time.perf_counter()
    cert = run_theorem("converse-hermite", {"p": 2, "eps": 2, "q": 32})
    rows = cert.evidence["table"].values()
    observed = {tuple(row["defects"]) for row in rows}
    assert observed == {tuple(range(9)), (0, 4, 8), (0, 2, 4, 6, 8), (0, 8)}
    assert all(row["defects"] == row["expected"] for row in rows)
    mod4 = cert.evidence["mod4"]
    assert mod4["Sym^4Sym^2 all ≡ 0 mod 4"] and mod4["Sym^2Sym^4 contains -2"]
    assert cert.passed
    assert time.perf_counter() - start < 60


@pytest.fixture(scope="module")
def hook_certificate():
    start = time.perf_counter()
    cert = run_theorem("hook-obstructions", {"p": 2, "alpha": 1, "beta": 2, "eps": 3, "q": 256})
    return cert, time.perf_counter() - start


@pytest.mark.slow
@pytest.mark.xfail(strict=True, reason="three stated lemma memberships are contradicted by direct computation and "
                                       "two pairs share defect set and dimension")
def test_criterion_11_hook_obstructions(hook_certificate):
    cert, elapsed = hook_certificate
    assert elapsed < 15 * 60
    assert len(cert.evidence["modules"]) == 8
    assert cert.evidence["lemma_checks_agree"], [c for c in cert.evidence["lemma_checks"] if not c["agrees"]]
    assert cert.evidence["non_isomorphism_certificates"] == 28


@pytest.mark.slow
def test_hook_observed_facts(hook_certificate):
    # not a criterion: the facts this build does certify at the same parameters
    cert, _ = hook_certificate
    ev = cert.evidence
    assert ev["hypothesis"] == "|K| = 256 > 163"
    stated_present = {(c["module"], c["element"]) for c in ev["lemma_checks"] if c["claimed"] == "present"}
    assert ("delta[3,1^4](sym^12(E))", 4) in stated_present
    assert ("nabla[3,1^4](sym^12(E))", 24) in stated_present
    for c in ev["lemma_checks"]:
        if c["claimed"] == "present":
            assert c["agrees"], c
    wrong = sorted((c["module"], c["element"]) for c in ev["lemma_checks"] if not c["agrees"])
    assert wrong == [
        ("delta[5,1^2](sym^10(E))", 4),
        ("nabla[3,1^4](sym^12(E))", 8),
        ("nabla[5,1^2](sym^10(E))", 24),
    ]
    assert all(s["within"] for s in ev["superset_checks"])
    assert ev["non_isomorphism_certificates"] == 26
    undecided = sorted(tuple(sorted((c["A"], c["B"]))) for c in ev["certificates"] if c["verdict"] != "pass")
    assert undecided == [
        ("delta[3,1^4](sym_12(E))", "delta[5,1^2](sym_10(E))"),
        ("nabla[3,1^4](sym^12(E))", "nabla[5,1^2](sym^10(E))"),
    ]


def test_criterion_12_straightening_oracle():
    start = time.perf_counter()
    n = 4
    checked = 0
    for shape in _shapes_in(3, 3):
        for t in enumerate_tableaux(shape, n, "CSYT"):
            exact = ssyt_coordinates(t, n)
            for F in (QQ, GF(2), GF(3)):
                v = garnir_straighten({t: 1}, shape, n, F)
                got = {str(s): c for s, c in ((v.rep.basis()[j], c) for j, c in v.coeffs.items())}
                want = {}
                for s, c in exact.items():
                    val = F.coerce(c)
                    if not F.is_zero(val):
                        want[str(s)] = val
                assert got == want, (t, F)
            checked += 1
    assert checked > 0
    assert time.perf_counter() - start < 10


def test_equivariance_strategies_reach_every_field_element():
    # the checks above rely on AllGamma enumerating the whole field
    z = zeta(2, 2, GF(4))
    gens = check_isomorphism(z, AllGamma()).evidence["generators"]
    assert gens == ["J", "M([1,0])", "M([0,1])", "M([1,1])"]
    assert check_isomorphism(zeta(2, 2, GF(256)), SymbolicGamma()).passed
