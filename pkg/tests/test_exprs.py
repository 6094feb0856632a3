import pytest
from hypothesis import given
from hypothesis import strategies as st

from sosq.exprs import ExpressionError, parse_bound_expression


def ev(src, x=0.0):
    return parse_bound_expression(src)(x)


class TestGrammar:
    def test_literal(self):
        assert ev("2.5") == 2.5
        assert ev("1e-3") == 1e-3
        assert ev(".5") == 0.5

    def test_variable(self):
        assert ev("x", 3.0) == 3.0

    def test_precedence(self):
        assert ev("1 + 2 * 3") == 7.0
        assert ev("(1 + 2) * 3") == 9.0
        assert ev("8 / 2 / 2") == 2.0
        assert ev("2 - 3 - 4") == -5.0

    def test_unary_minus(self):
        assert ev("-3") == -3.0
        assert ev("--3") == 3.0
        assert ev("4 * -2") == -8.0

    def test_functions(self):
        assert ev("abs(-4)") == 4.0
        assert ev("pow(2, 10)") == 1024.0
        assert ev("min(3, 1, 2)") == 1.0
        assert ev("max(3, 1, 2)") == 3.0

    def test_nesting(self):
        assert ev("min(abs(x - 4), pow(x, 2))", 3.0) == 1.0
        assert ev("max(0, min(1, x))", 0.25) == 0.25

    def test_whitespace_insensitive(self):
        assert ev(" 1+ 2 *x ", 2.0) == ev("1+2*x", 2.0) == 5.0

    @given(st.floats(min_value=-100, max_value=100))
    def test_quarter_min_identity(self, x):
        fn = parse_bound_expression("min(1/4, abs(x))")
        assert fn(x) == min(0.25, abs(x))


class TestErrors:
    @pytest.mark.parametrize(
        "src,fragment",
        [
            ("2 +", "<end>"),
            ("foo(1)", "foo"),
            ("min(1)", "min"),
            ("pow(1, 2, 3)", "pow"),
            ("1 2", "2"),
            (")", ")"),
            ("", "<end>"),
            ("x y", "y"),
            ("1 % 2", "%"),
            ("min(1", "<end>"),
        ],
    )
    def test_offending_token_reported(self, src, fragment):
        with pytest.raises(ExpressionError) as exc:
            parse_bound_expression(src)
        assert fragment in str(exc.value)

    def test_division_by_zero_propagates(self):
        fn = parse_bound_expression("1 / x")
        with pytest.raises(ZeroDivisionError):
            fn(0.0)

    def test_errors_carry_position(self):
        with pytest.raises(ExpressionError) as exc:
            parse_bound_expression("1 + bogus")
        assert exc.value.token == "bogus"
        assert exc.value.position == 4
