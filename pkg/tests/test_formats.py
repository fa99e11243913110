from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromtree.bipoly import BivariatePolynomial, substitute_connector
from chromtree.formats import (
    ParseError,
    caterpillar_from_arg,
    crab_from_arg,
    format_edge_list,
    parse_bivariate,
    parse_edge_list,
    parse_symfunc,
    spider_from_arg,
    squid_from_arg,
)
from chromtree.graphs import Graph, enumerate_trees
from chromtree.invariants import connector_polynomial_direct, csf
from chromtree.partitions import partitions_list
from chromtree.symfunc import SymFunc, p_to_h

FIXTURES = Path(__file__).parent / "fixtures"

poly_terms = st.dictionaries(
    st.tuples(st.integers(0, 6), st.integers(0, 6)), st.integers(-50, 50).filter(bool), max_size=8
)


def test_bivariate_prunes_and_orders():
    p = BivariatePolynomial({(2, 2): 1, (1, 1): 2, (0, 3): 0})
    assert p.terms == {(2, 2): 1, (1, 1): 2}
    assert p.to_text() == "2 q^1 r^1\n1 q^2 r^2\n"
    assert BivariatePolynomial({}).to_text() == "0\n"
    with pytest.raises(ValueError):
        BivariatePolynomial({(-1, 0): 1})


def test_degree_lex_order_uses_total_degree_first():
    p = BivariatePolynomial({(3, 0): 1, (0, 2): 1, (1, 0): 1, (1, 1): 1}, ("x", "y"))
    assert p.to_text() == "1 x^1 y^0\n1 x^0 y^2\n1 x^1 y^1\n1 x^3 y^0\n"


def test_substitution_on_small_cases():
    assert substitute_connector(BivariatePolynomial({(1, 0): 2, (2, 0): 1})) == BivariatePolynomial({(1, 1): 2, (2, 2): 1})
    assert substitute_connector(BivariatePolynomial({(1, 0): 1})) == BivariatePolynomial({(1, 1): 1})


@given(poly_terms, st.sampled_from([("q", "r"), ("x", "y")]))
def test_bivariate_text_round_trip(terms, names):
    p = BivariatePolynomial(terms, names)
    back = parse_bivariate(p.to_text())
    assert back == p
    if p:
        assert back.names == names


@given(poly_terms, poly_terms)
def test_bivariate_addition(a, b):
    pa, pb = BivariatePolynomial(a), BivariatePolynomial(b)
    assert (pa + pb) - pb == pa
    assert (pa + pb).evaluate(Fraction(2, 3), -3) == pa.evaluate(Fraction(2, 3), -3) + pb.evaluate(Fraction(2, 3), -3)


def test_symfunc_text_round_trip_for_tree_invariants():
    for t in enumerate_trees(7):
        x = csf(t)
        assert parse_symfunc(x.to_text()) == x
        h = p_to_h(x)
        assert parse_symfunc(h.to_text()) == h
    assert parse_symfunc("0\n") == SymFunc.zero("P", 0)


@given(st.lists(st.fractions(max_denominator=9), min_size=7, max_size=7))
def test_symfunc_text_round_trip_random(coeffs):
    f = SymFunc("P", 5, dict(zip(partitions_list(5), coeffs)))
    if f.coeffs:
        assert parse_symfunc(f.to_text()) == f


def test_polynomial_parse_of_connector():
    for t in enumerate_trees(6):
        k = connector_polynomial_direct(t)
        assert parse_bivariate(k.to_text()) == k


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("1 p[2]\n1 p[1\n", 2, 1),
        ("1 p[2]\n1 h[1,1]\n", 2, 3),
        ("1 p[2]\n1 p[2,1]\n", 2, 5),
        ("", 1, 1),
    ],
)
def test_symfunc_parse_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_symfunc(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_polynomial_parse_errors():
    with pytest.raises(ParseError) as info:
        parse_bivariate("2 q^1 r^1\n  3 q^2\n")
    assert (info.value.line, info.value.column) == (2, 3)
    with pytest.raises(ParseError):
        parse_bivariate("1 q^1 r^1\n1 x^1 y^1\n")


def test_edge_list_with_header_comments_and_blanks():
    g = parse_edge_list("# a path\nn 5\n\n0 1  # first\n1 2\n")
    assert g.n == 5 and g.edges == ((0, 1), (1, 2))


def test_edge_list_without_header_infers_order():
    g = parse_edge_list("0 1\n1 3\n")
    assert g.n == 4


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("0 1\n1 x\n", 2, 3),
        ("0 1\n1\n", 2, 1),
        ("n 3\n0 5\n", 2, 3),
        ("0 1\nn 4\n", 2, 1),
        ("2 2\n", 1, 1),
        ("n x\n", 1, 1),
    ],
)
def test_edge_list_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert f":{line}:{col}:" in str(info.value)


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]), max_size=12))))
def test_edge_list_round_trip(data):
    n, edges = data
    g = Graph(n, edges)
    assert parse_edge_list(format_edge_list(g)) == g


def test_fixture_files_parse():
    files = sorted(FIXTURES.glob("*.txt"))
    assert files
    for path in files:
        g = parse_edge_list(path.read_text(), source=path.name)
        assert g.m >= 1


def test_inline_family_arguments():
    assert str(spider_from_arg("3,2,1")) == "spider[3,2,1]"
    assert str(squid_from_arg("3:2,1")) == "squid(g=3;[2,1])"
    assert str(caterpillar_from_arg("3,2,1")) == "caterpillar(1,2,3)"
    assert str(crab_from_arg("3:3,2,1")) == "crab(g=3;(1,2,3))"
    for bad, fn in [("3,x", spider_from_arg), ("1,2", spider_from_arg), ("3:1,2", crab_from_arg), ("2,1", squid_from_arg), ("0,1", caterpillar_from_arg)]:
        with pytest.raises(ParseError):
            fn(bad)
