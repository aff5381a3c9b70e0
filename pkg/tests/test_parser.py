from fractions import Fraction

import pytest
from hypothesis import given, settings

from zerodecomp.errors import ParseError
from zerodecomp.parser import format_system, parse_point, parse_polynomial, parse_system

from strategies import R3, polynomials

x, y, z = R3.gens()


def test_parse_example_system():
    sf = parse_system("vars x, y, z\nx^2 + y + z - 1\nx + y^2 + z - 1\nx + y + z^2 - 1")
    assert sf.order.names == ("x", "y", "z")
    assert list(sf.polys) == [x**2 + y + z - 1, x + y**2 + z - 1, x + y + z**2 - 1]


def test_parse_parenthesised_product():
    sf = parse_system("vars x, y, z\n(x + y)*z^2 + z + 1")
    assert sf.polys == ((x + y) * z**2 + z + 1,)


def test_comments_blank_lines_and_crlf():
    text = "# header\r\nvars x y z   # spaces work too\r\n\r\n3/2*x - y  # trailing\r\n"
    sf = parse_system(text)
    assert sf.polys == (Fraction(3, 2) * x - y,)
    assert sf.source == text


def test_unary_minus_binds_below_power():
    assert parse_polynomial("-x^2", R3) == -(x**2)
    assert parse_polynomial("(-x)^2", R3) == x**2
    assert parse_polynomial("2*-x", R3) == -2 * x


def test_undeclared_variable():
    with pytest.raises(ParseError) as err:
        parse_system("vars x\nx + w")
    assert err.value.line == 2
    assert err.value.column == 5
    assert "undeclared variable 'w'" in str(err.value)


@pytest.mark.parametrize("text, fragment", [
    ("vars x\n2x", "explicit '*'"),
    ("vars x\nx^y", "exponent"),
    ("vars x\nx/2", "rational literal"),
    ("vars x\n1/0", "zero denominator"),
    ("vars x\n(x + 1", "expected ')'"),
    ("vars x\nx $ 1", "unexpected character"),
    ("vars x\nx +", "unexpected end"),
])
def test_syntax_errors_carry_positions(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_system(text)
    assert fragment in str(err.value)
    assert err.value.line == 2


def test_missing_declaration():
    with pytest.raises(ParseError):
        parse_system("x + 1\n")


def test_empty_system():
    with pytest.raises(ParseError):
        parse_system("vars x, y\n# nothing else\n")


def test_duplicate_variables():
    with pytest.raises(ParseError):
        parse_system("vars x, x\nx")


def test_parse_point():
    assert parse_point("1, -1/2,0", R3) == (1, Fraction(-1, 2), 0)
    with pytest.raises(ParseError):
        parse_point("1,2", R3)
    with pytest.raises(ParseError):
        parse_point("1,a,2", R3)


@settings(max_examples=200)
@given(polynomials(R3, max_deg=4, max_terms=6))
def test_print_parse_round_trip(f):
    assert parse_polynomial(str(f), R3) == f


@settings(max_examples=200)
@given(polynomials(R3).filter(lambda f: not f.is_zero()),
       polynomials(R3).filter(lambda f: not f.is_zero()))
def test_system_round_trip(f, g):
    sf = parse_system(format_system(R3, [f, g]))
    assert sf.polys == (f, g)
