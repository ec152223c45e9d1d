import pytest
from hypothesis import given, strategies as st

from plethysm.errors import ParseError
from plethysm.field import GF, QQ
from plethysm.notation import (
    format_vector,
    matrix_from_rows,
    matrix_rows,
    parse_group_element,
    parse_rep,
    parse_vector,
    vector_from_json,
    vector_to_json,
)
from plethysm.repmod import GroupElement, Vector

SPECS = [
    "E",
    "sym^3(E)",
    "sym_3(sym^3(E))",
    "wedge^2(sym_4(E))",
    "dual(sym^2(E))",
    "cdual(sym_2(E))",
    "nabla[2,1](sym^2(E))",
    "delta[2,1](sym^2(E))",
    "colwedge[2,1](E)",
    "tensor(sym^2(E),det^1)",
    "tensor^2(E)",
]


@pytest.mark.parametrize("spec", SPECS)
def test_spec_roundtrip(spec):
    assert parse_rep(spec, GF(2)).spec() == spec


@pytest.mark.parametrize("text,pos", [("sym^(E)", 4), ("foo(E)", 0), ("sym^2(E", 7), ("sym^2(E))", 8)])
def test_parse_errors_report_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_rep(text, GF(2))
    assert exc.value.position == pos


def vectors(spec, F):
    rep = parse_rep(spec, F)
    els = list(F.raw_elements())
    return st.dictionaries(st.integers(0, rep.dim - 1), st.sampled_from(els), max_size=5).map(
        lambda d: Vector(rep, {j: c for j, c in d.items() if not F.is_zero(c)})
    )


@pytest.mark.parametrize("spec", ["sym^3(E)", "sym_2(sym^2(E))", "wedge^2(sym^3(E))", "tensor^2(sym^1(E))",
                                  "nabla[2,1](sym^2(E))", "colwedge[2,1](E)", "dual(sym^2(E))"])
@pytest.mark.parametrize("style", ["terms", "compact"])
@given(data=st.data())
def test_vector_text_roundtrip(spec, style, data):
    F = GF(5)
    v = data.draw(vectors(spec, F))
    assert parse_vector(v.rep, format_vector(v, style)) == v


@given(data=st.data())
def test_vector_json_roundtrip(data):
    v = data.draw(vectors("sym_3(sym^2(E))", GF(7)))
    assert vector_from_json(v.rep, vector_to_json(v)) == v


def test_compact_style_puts_positive_terms_first():
    rep = parse_rep("wedge^2(sym^3(E))", QQ)
    v = parse_vector(rep, "-2 * X^3∧Y^3 + X^2Y∧XY^2")
    assert format_vector(v, "compact") == "X^2Y∧XY^2 − 2X^3∧Y^3"


def test_wedge_labels_are_signed():
    rep = parse_rep("wedge^2(E)", QQ)
    assert parse_vector(rep, "Y∧X") == -parse_vector(rep, "X∧Y")


def test_group_elements():
    F = GF(5)
    assert parse_group_element("J", F) == GroupElement.J(F)
    assert parse_group_element("M(2)", F) == GroupElement.M(F, 2)
    assert parse_group_element("1,0;3,1", F) == GroupElement.M(F, 3)
    assert parse_group_element("M(γ)", F).ring != F
    with pytest.raises(ParseError):
        parse_group_element("1,2,3", F)


def test_matrix_rows_roundtrip():
    F = GF(3)
    rep = parse_rep("sym^2(E)", F)
    m = rep.matrix(GroupElement.J(F))
    rows = matrix_rows(m, rep.dim, F)
    assert matrix_from_rows(rows, F) == m
