import itertools
from math import comb

import pytest

from plethysm.certify import AllGamma, check_equivariance, check_isomorphism
from plethysm.errors import DoesNotFitRectangle, FieldMismatch
from plethysm.field import GF, QQ
from plethysm.isomaps import (
    cancellation_sum,
    cor36_map,
    duality_isos,
    hermite,
    hermite_steps,
    identity_map,
    nabla_complement_iso,
    psi_exterior,
    psi_tabloid,
    zeta,
    zeta_tensor_extension,
)
from plethysm.notation import format_vector, parse_rep, parse_vector
from plethysm.shapes import Partition


@pytest.mark.parametrize("l,m", [(1, 1), (1, 3), (2, 2), (3, 2), (2, 4)])
@pytest.mark.parametrize("F", [GF(2), GF(3), GF(4)], ids=str)
def test_zeta_is_an_isomorphism(l, m, F):
    z = zeta(l, m, F, twist=True)
    cert = check_isomorphism(z, AllGamma(), group="GL2")
    assert cert.passed, cert.evidence
    assert cert.evidence["rank"] == comb(l + m, m)


def test_untwisted_zeta_is_only_special_linear():
    z = zeta(2, 2, GF(3))
    assert check_isomorphism(z, AllGamma(), group="SL2").passed
    cert = check_isomorphism(z, AllGamma(), group="GL2")
    assert not cert.passed
    assert cert.evidence["witness"]["generator"].startswith("diag")


def test_zeta_example_image():
    z = zeta(3, 3, QQ)
    assert format_vector(z.image_of((3, 1, 1)), "compact") == "X^5∧X^2Y^3∧XY^4 − X^4Y∧X^3Y^2∧XY^4"


def test_tensor_extension_is_not_equivariant():
    z = zeta_tensor_extension(2, 2, QQ)
    cert = check_equivariance(z)
    assert not cert.passed
    assert cert.evidence["witness"]["generator"] == "J"


def test_complement_example_sign():
    Psi = psi_tabloid(Partition((3, 1)), 3, 4, parse_rep("sym^2(E)", QQ))
    image = Psi(parse_vector(Psi.domain, "|1 1 2 / 2|"))
    assert str(image) == "-1 * |1 1 2 3 / 2 3 3 / 3|"


@pytest.mark.parametrize("shape,s", [((1,), 1), ((2, 1), 2), ((2, 2), 3), ((3, 1, 1), 3)])
@pytest.mark.parametrize("F", [GF(2), GF(3)], ids=str)
def test_complement_isomorphism(shape, s, F):
    V = parse_rep("sym^2(E)", F)
    iso = nabla_complement_iso(Partition(shape), 3, s, V, twist=True)
    assert check_isomorphism(iso, AllGamma()).passed


def test_complement_rejects_large_shapes():
    with pytest.raises(DoesNotFitRectangle):
        psi_tabloid(Partition((4,)), 3, 3, parse_rep("sym^2(E)", QQ))


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_exterior_duality(r):
    V = parse_rep("sym^2(E)", GF(3))
    psi = psi_exterior(V, r, twist=True)
    assert check_isomorphism(psi, AllGamma(), group="GL2").passed


@pytest.mark.parametrize("l,m", list(itertools.product(range(1, 4), repeat=2)))
def test_hermite_orders_agree(l, m):
    F = GF(3)
    a, b = hermite(l, m, F, "example"), hermite(l, m, F, "proof")
    assert a.domain == b.domain and a.codomain == b.codomain
    assert a.columns == b.columns


def test_hermite_example_and_steps():
    h = hermite(2, 2, QQ)
    v = parse_vector(h.domain, "(X^2⊗Y^2)_sym")
    assert format_vector(h(v), "compact") == "(X⊗Y)_sym·(X⊗Y)_sym − 2(X⊗X)·(Y⊗Y)"
    steps = hermite_steps(2, 2, QQ)
    assert steps[0].name == "zeta"
    composite = steps[0]
    for step in steps[1:]:
        composite = composite.then(step)
    assert composite.columns == h.columns


@pytest.mark.parametrize("l,m", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_cor36(l, m):
    c = cor36_map(l, m, GF(2))
    assert c.domain.spec() == f"wedge^{l}(sym^{l + m - 1}(E))"
    assert c.codomain.spec() == f"wedge^{m}(sym_{l + m - 1}(E))"
    assert check_isomorphism(c, AllGamma()).passed


@pytest.mark.parametrize("l", range(8))
@pytest.mark.parametrize("p", [2, 3, 5])
def test_symduals_bijective_exactly_when_binomials_are_units(l, p):
    phi = duality_isos("symduals_canonical", l=l, field=GF(p))
    units = all(comb(l, a) % p for a in range(l + 1))
    assert phi.is_bijective() == units
    assert check_equivariance(phi, AllGamma()).passed


def test_duality_maps_are_equivariant():
    F = GF(3)
    V = parse_rep("sym^2(E)", F)
    for kind, params in [("wedge", {"V": V, "r": 2}), ("wedge_inverse", {"V": V, "r": 2}),
                         ("sym", {"V": V, "r": 2}), ("sym", {"V": V, "r": 2, "upper": False})]:
        phi = duality_isos(kind, **params)
        assert check_isomorphism(phi, AllGamma(), group="GL2").passed, kind
    e = duality_isos("E_self", field=F)
    assert check_isomorphism(e, AllGamma(), group="SL2").passed
    assert not check_isomorphism(e, AllGamma(), group="GL2").passed


def test_cancellation_sums_vanish():
    for m in range(2, 5):
        for index in itertools.combinations_with_replacement(range(3, -1, -1), m):
            for s in range(1, m):
                assert cancellation_sum(index, s, m, QQ).is_zero()


def test_composition_checks_domains():
    F = GF(2)
    a = identity_map(parse_rep("sym^2(E)", F))
    b = identity_map(parse_rep("sym_2(E)", F))
    with pytest.raises(FieldMismatch):
        a.then(b)
    assert a.then(a).columns == a.columns
