import pytest

from bqalg.field import GF, QQ
from bqalg.freealg import ExprSyntaxError, NcPoly, deglex_compare, parse_expr


def x(i, n=3, K=QQ):
    return NcPoly.gen(i, n, K)


def test_parse_precedence():
    f = parse_expr("2*x1 + x2*x3^2 - 1/2", 3)
    assert f == x(1) * 2 + x(2) * x(3) * x(3) - NcPoly.const(QQ("1/2"), 3)
    assert parse_expr("-x1^2", 3) == -(x(1) * x(1))


def test_square_of_sum_keeps_order():
    f = parse_expr("(x1 + x2)^2", 2)
    assert f.terms == {(1, 1): 1, (1, 2): 1, (2, 1): 1, (2, 2): 1}


def test_parse_errors_carry_position():
    with pytest.raises(ExprSyntaxError) as e:
        parse_expr("x1*(x2", 3)
    assert e.value.pos == 6
    with pytest.raises(ExprSyntaxError):
        parse_expr("x4", 3)


def test_arithmetic_and_zero_terms_vanish():
    f = x(1) * x(2) - x(1) * x(2)
    assert not f and len(f) == 0
    K = GF(3)
    g = x(1, K=K) * 3
    assert not g


def test_render_round_trip():
    f = parse_expr("3*x2*x1 - x3^2 + 5", 3)
    assert parse_expr(f.render(), 3) == f


def test_substitute():
    f = x(2) * x(1)
    g = f.substitute([x(1) + 1, x(2) * 2, x(3)])
    assert g == x(2) * x(1) * 2 + x(2) * 2


def test_deglex():
    assert deglex_compare((2,), (1, 1)) < 0
    assert deglex_compare((2, 1), (1, 2)) > 0
