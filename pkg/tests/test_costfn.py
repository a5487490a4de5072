from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from paretoflow.costfn import (
    CostExpr, PolyAbsBody, Segment, cost_to_doc, eval_cost, format_rational, parse_cost,
    parse_rational, scale_cost,
)
from paretoflow.errors import (
    CostError, GapInSegments, MalformedRational, OutOfDomain, OverlappingSegments,
)

from instances import load_fixture

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def test_parse_rational_forms():
    assert parse_rational(3) == 3
    assert parse_rational("-77/120") == Fraction(-77, 120)
    assert parse_rational(" 5 ") == 5
    for bad in ("1/0", 0.5, True, "x", "1/2/3", None):
        with pytest.raises(MalformedRational):
            parse_rational(bad)


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_square_minimum():
    f = parse_cost({"poly": [["1", 2], ["-2", 1], ["1", 0]]})
    assert eval_cost(f, 1) == 0
    assert [f(v) for v in range(4)] == [1, 0, 1, 4]


def test_abs_term():
    f = parse_cost({"abs": [[1, 5]]})
    assert f(5) == 0 and f(2) == 3 and f(9) == 4


def test_quintic_coefficient_survives_round_trip():
    doc = {"poly": [["77/120", 5], ["-95/24", 4], ["1", 0]]}
    f = parse_cost(doc)
    g = parse_cost(cost_to_doc(f))
    assert f == g
    assert f.segments[0].body.poly[5] == Fraction(77, 120)


def test_piecewise_player():
    net, _ = load_fixture("transport16.json")
    f = net.costs[11]
    assert [f(v) for v in (0, 3, 4, 5, 6, 7, 9)] == [1, 4, 0, 0, 0, 512, 1000]
    assert f(10) == Fraction(-1000, 6) + 650 - Fraction(2440, 3) + 330
    assert f(11) == 0 and f(10) == 0


def test_segment_errors():
    body = {"poly": [[1, 0]]}
    with pytest.raises(OverlappingSegments):
        parse_cost({"pieces": [{"lo": 0, "hi": 3, **body}, {"lo": 3, "hi": 6, **body}]})
    with pytest.raises(GapInSegments):
        parse_cost({"pieces": [{"lo": 0, "hi": 2, **body}, {"lo": 4, "hi": 6, **body}]})
    with pytest.raises(CostError):
        CostExpr((Segment(3, 1, PolyAbsBody((1,))),))


def test_out_of_domain():
    f = CostExpr.table([1, 2, 3])
    assert f(2) == 3
    with pytest.raises(OutOfDomain):
        eval_cost(f, 3)
    assert f.covers(0, 2) and not f.covers(0, 3)


@given(st.lists(rationals, max_size=6), st.lists(st.tuples(rationals, st.integers(-5, 5)), max_size=2),
       st.integers(-20, 20))
def test_horner_matches_naive(poly, abs_terms, v):
    body = PolyAbsBody(tuple(poly), tuple(abs_terms))
    assert body(v) == body.eval_naive(v)


@given(st.lists(rationals, min_size=1, max_size=4), st.integers(1, 12), st.integers(0, 40))
def test_scaled_cost_is_substitution(poly, alpha, y):
    f = CostExpr.polynomial(poly, [(1, 2)])
    g = scale_cost(f, alpha)
    assert g(y) == f.segments[0].body.eval_naive(Fraction(y, alpha))


def test_scale_square_by_ten():
    f = CostExpr.polynomial([0, 0, 1])
    assert scale_cost(f, 10)(7) == Fraction(49, 100)


def test_scaled_piecewise_keeps_coverage():
    net, _ = load_fixture("transport16.json")
    g = scale_cost(net.costs[11], 10)
    assert g.covers(0, 150)
    assert g(45) == 0 and g(39) == Fraction(39, 10) + 1
    assert g(70) == Fraction(8, 1) ** 3
