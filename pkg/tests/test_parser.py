from pytest import approx, mark, raises

from disk_rigidity.exceptions import ParseError
from disk_rigidity.expressions import CayleyFwd, Const, MobiusNode, evaluate
from disk_rigidity.parser import parse_constant, parse_map, tokenize


def test_tokenize_distinguishes_integers_and_imaginary_literals():
    tags = [token.tag for token in tokenize("2*z^3 + 0.5i - 1e-3")]
    assert tags == ["uint", "times", "identifier", "power", "uint", "plus", "imaginary", "minus", "number", "end"]


@mark.parametrize("text point expected".split(),
                  (("0.5*(z+1)+0.05*(z-1)^4", 1j, 0.3 + 0.5j),
                   ("z/(2-z)", 1.0, 1.0),
                   ("-i*(1-z)^2", 0.0, -1j),
                   ("2*-z", 0.5, -1.0),
                   ("compose(z^2, z+1)", 1.0, 4.0),
                   ("cayinv(cayley(z))", 0.3, 0.3)))
def test_parse_and_evaluate(text, point, expected):
    assert evaluate(parse_map(text), point) == approx(expected)


def test_precedence():
    assert evaluate(parse_map("1+2*z^2"), 2.0) == approx(9)
    assert evaluate(parse_map("-z^2"), 2.0) == approx(-4)
    assert evaluate(parse_map("1/2/z"), 0.25) == approx(2)


def test_named_functions_build_nodes():
    assert isinstance(parse_map("cayley(z)"), CayleyFwd)
    node = parse_map("mobius(1, 0.3, 0.3, 1)")
    assert isinstance(node, MobiusNode)
    assert node.mobius.c == 0.3


@mark.parametrize("text", ("", "   ", "z+", "z^-1", "z^17", "(z+1", "foo(z)", "z $ 1",
                           "mobius(1, 0, 0, 0)", "mobius(z, 0, 0, 1)", "1/(z-z)", "z z", "cayley(z, z)"))
def test_parse_errors(text):
    with raises(ParseError):
        parse_map(text)


def test_denominator_zero_up_to_rounding():
    with raises(ParseError) as info:
        parse_map("z/((0.1+0.2)*z-0.3*z)")
    assert info.value.position == 1
    assert parse_map("z/(1e-6*z+1)")(1.0) == approx(1 / (1 + 1e-6))


def test_parse_error_position():
    with raises(ParseError) as info:
        parse_map("z + * 1")
    assert info.value.position == 4


@mark.parametrize("text expected".split(),
                  (("1", 1), ("-i", -1j), ("0.5+0.25i", 0.5 + 0.25j), ("(3-4i)/5", 0.6 - 0.8j)))
def test_parse_constant(text, expected):
    assert parse_constant(text) == approx(expected)


def test_parse_constant_rejects_maps():
    with raises(ParseError):
        parse_constant("z")
    assert isinstance(parse_map("2+i"), Const)
