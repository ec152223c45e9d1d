import json

import pytest

from plethysm.certify import (
    AllGamma,
    Certificate,
    Sample,
    SymbolicGamma,
    check_equivariance,
    distinguish_by_defect,
    generators,
    run_theorem,
)
from plethysm.errors import HypothesisNotMet, KindMismatch, ParamsOutOfSupportedRange
from plethysm.field import GF, QQ
from plethysm.isomaps import LinearMap, zeta
from plethysm.notation import parse_rep
from plethysm.weights import Concrete


def test_generators_per_strategy():
    F = GF(5)
    names = [name for name, _ in generators(F, AllGamma())]
    assert names[0] == "J" and len(names) == 1 + 4
    assert len(generators(F, SymbolicGamma())) == 2
    gl = [name for name, _ in generators(F, AllGamma(), "GL2")]
    assert any(n.startswith("diag") for n in gl)
    a = [n for n, _ in generators(QQ, Sample(4, seed=1))]
    b = [n for n, _ in generators(QQ, Sample(4, seed=1))]
    assert a == b


def test_equivariance_witness_for_a_wrong_map():
    F = GF(3)
    rep = parse_rep("sym^2(E)", F)
    # projection onto the first coordinate is not equivariant
    phi = LinearMap(rep, rep, [{0: F.one}, {}, {}], name="proj")
    cert = check_equivariance(phi, AllGamma())
    assert not cert.passed
    w = cert.evidence["witness"]
    assert set(w) >= {"generator", "vector", "component", "lhs", "rhs"}
    assert w["lhs"] != w["rhs"]


def test_symbolic_strategy_agrees_with_enumeration():
    z = zeta(3, 2, GF(8))
    assert check_equivariance(z, AllGamma()).passed
    assert check_equivariance(z, SymbolicGamma()).passed


def test_distinguish_by_defect():
    F = GF(2)
    a, b = parse_rep("sym^2(E)", F), parse_rep("sym_2(E)", F)
    cert = distinguish_by_defect(a, b)
    assert cert.passed
    assert cert.evidence["witness"]["element"] == 1
    same = distinguish_by_defect(a, parse_rep("sym^2(E)", F))
    assert same.verdict == "inconclusive"


def test_distinguish_defined_from_undefined():
    F = GF(5)
    cert = distinguish_by_defect(parse_rep("sym^5(E)", F), parse_rep("sym^1(E)", F), Concrete(5))
    assert cert.passed


def test_certificates_are_json():
    cert = run_theorem("cor36", {"l": 2, "m": 2, "field": "GF(3)"})
    data = json.loads(json.dumps(cert.to_json()))
    assert data["verdict"] == "pass"
    assert data["params"]["theorem"] == "cor36"
    assert isinstance(cert, Certificate)


def test_theorem_errors():
    with pytest.raises(KindMismatch):
        run_theorem("no-such-theorem")
    with pytest.raises(HypothesisNotMet):
        run_theorem("converse-hermite", {"p": 2, "eps": 2, "q": 16})
    with pytest.raises(HypothesisNotMet):
        run_theorem("hook-obstructions", {"p": 2, "alpha": 1, "beta": 2, "eps": 3, "q": 128})
    with pytest.raises(ParamsOutOfSupportedRange):
        run_theorem("wronskian", {"l": 9})


def test_converse_hermite_certificate():
    cert = run_theorem("converse-hermite", {"p": 2, "eps": 2, "q": 32})
    assert cert.passed
    ev = cert.evidence
    assert ev["separated_pairs"] == 26
    assert ev["isomorphism_classes"] == 6
    iso = [p for p in ev["pairs"] if p["relation"] == "isomorphic"]
    assert len(iso) == 2


def test_garnir_preservation_and_f_equivariance():
    assert run_theorem("garnir-preservation", {"field": "GF(2)", "shape": (3, 2), "s": 3, "V": "sym^3(E)"}).passed
    assert run_theorem("f-equivariance", {"l": 3, "m": 4}).passed


def test_parallel_defects_are_deterministic(monkeypatch):
    monkeypatch.setenv("PLETHYSM_THREADS", "2")
    a = run_theorem("converse-hermite", {"p": 2, "eps": 2, "q": 32})
    monkeypatch.setenv("PLETHYSM_THREADS", "1")
    b = run_theorem("converse-hermite", {"p": 2, "eps": 2, "q": 32})
    assert a.evidence["table"] == b.evidence["table"]
