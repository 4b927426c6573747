import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laddergraphs.exprs import (
    IdentityExpr,
    LetterExpr,
    ParseError,
    PowerExpr,
    ProductExpr,
    ScaledExpr,
    SumExpr,
    evaluate,
    format_polynomial,
    parse,
    power,
    product,
    scaled,
    sum_of,
)
from laddergraphs.ladder import (
    Letter,
    NormalMonomial,
    NormalPolynomial,
    add,
    multiply,
)
from laddergraphs.scalars import GaussianRational

A = LetterExpr(Letter.ANNIHILATOR)
AD = LetterExpr(Letter.CREATOR)


def gr(re, im=0) -> GaussianRational:
    return GaussianRational(Fraction(re), Fraction(im))


# -- golden parse trees ---------------------------------------------------------

def test_juxtaposition_is_product():
    assert parse("a ad") == ProductExpr((A, AD))
    assert parse("ada") == ProductExpr((AD, A))  # greedy lexing: 'ad' then 'a'


def test_power_binds_tighter_than_product():
    assert parse("ad a^2") == ProductExpr((AD, PowerExpr(A, 2)))
    assert parse("(ad a)^2") == PowerExpr(ProductExpr((AD, A)), 2)


def test_sum_of_scaled_products():
    assert parse("ad^2 a^2 + 3 ad a") == SumExpr((
        ProductExpr((PowerExpr(AD, 2), PowerExpr(A, 2))),
        ScaledExpr(gr(3), ProductExpr((AD, A))),
    ))


def test_minus_folds_into_scaling():
    assert parse("a - ad") == SumExpr((A, ScaledExpr(gr(-1), AD)))
    assert parse("a - 2 ad") == SumExpr((A, ScaledExpr(gr(-2), AD)))
    assert parse("a - -2 ad") == SumExpr((A, ScaledExpr(gr(2), AD)))


def test_bare_coefficients_scale_the_identity():
    assert parse("2") == ScaledExpr(gr(2), IdentityExpr())
    assert parse("-1/2") == ScaledExpr(gr(Fraction(-1, 2)), IdentityExpr())
    assert parse("0") == ScaledExpr(gr(0), IdentityExpr())
    assert parse("1") == IdentityExpr()  # unit scaling normalizes away


def test_one_before_caret_is_the_identity_atom():
    assert parse("1^2") == PowerExpr(IdentityExpr(), 2)
    assert parse("1^0") == IdentityExpr()
    assert parse("ad 1 a") == ProductExpr((AD, IdentityExpr(), A))


def test_complex_coefficients_parse_greedily():
    assert parse("3 - 2i") == ScaledExpr(gr(3, -2), IdentityExpr())
    assert parse("3 - 2i a") == ScaledExpr(gr(3, -2), A)
    assert parse("3 - 2 a") == SumExpr((
        ScaledExpr(gr(3), IdentityExpr()),
        ScaledExpr(gr(-2), A),
    ))
    assert parse("2i ad") == ScaledExpr(gr(0, 2), AD)
    assert parse("-1/3i") == ScaledExpr(gr(0, Fraction(-1, 3)), IdentityExpr())


def test_unicode_dagger_alias():
    assert parse("a† a") == parse("ad a")
    assert parse("a†^2") == parse("ad^2")


def test_whitespace_is_insignificant():
    assert parse(" ad   a\t+\n1 ") == parse("ad a + 1")
    assert parse("1/2a") == parse("1/2 a")


# -- parse errors ------------------------------------------------------------------

@pytest.mark.parametrize("text, position, fragment", [
    ("a ^", 3, "natural number"),
    ("b", 0, "unknown token"),
    ("a $ a", 2, "unknown token"),
    ("1/0", 2, "zero denominator"),
    ("a +", 3, "expected"),
    ("(a", 2, "')'"),
    ("", 0, "expected"),
    ("a^-2", 2, "natural number"),
    ("a a) ", 3, "end of input"),
    ("i", 0, "expected"),
    ("2 3", 2, "end of input"),
])
def test_error_positions(text, position, fragment):
    with pytest.raises(ParseError) as excinfo:
        parse(text)
    assert excinfo.value.position == position
    assert fragment in str(excinfo.value)


def test_unary_minus_on_letters_is_not_in_the_grammar():
    with pytest.raises(ParseError):
        parse("-a")


# -- smart constructors --------------------------------------------------------------

def test_smart_constructors_normalize():
    assert power(A, 0) == IdentityExpr()
    assert power(A, 2) == PowerExpr(A, 2)
    assert product([A]) == A
    assert scaled(gr(1), A) == A
    assert scaled(gr(2), A) == ScaledExpr(gr(2), A)
    assert sum_of([A]) == A
    with pytest.raises(ValueError):
        PowerExpr(A, -1)
    with pytest.raises(ValueError):
        ProductExpr(())


# -- evaluation -----------------------------------------------------------------------

def test_evaluate_known_expressions():
    assert evaluate(parse("a ad")) == NormalPolynomial({(1, 1): 1, (0, 0): 1})
    assert evaluate(parse("(ad a)^2")) == NormalPolynomial({(2, 2): 1, (1, 1): 1})
    assert evaluate(parse("1")) == NormalPolynomial.one()
    assert evaluate(parse("0")) == NormalPolynomial.zero()
    p = evaluate(parse("1/2 a^2 + 3i ad"))
    assert p.coefficient((0, 2)) == GaussianRational(Fraction(1, 2))
    assert p.coefficient((1, 0)) == GaussianRational(0, 3)


def test_evaluate_respects_products_and_sums():
    for left, right in [("a ad", "ad a"), ("(a + ad)^2", "1"), ("2 a", "3 ad a")]:
        combined = evaluate(parse(f"({left}) ({right})"))
        assert combined == multiply(evaluate(parse(left)), evaluate(parse(right)))
        summed = evaluate(parse(f"({left}) + ({right})"))
        assert summed == add(evaluate(parse(left)), evaluate(parse(right)))


def test_evaluate_rejects_foreign_objects():
    with pytest.raises(TypeError):
        evaluate("a ad")  # type: ignore[arg-type]


# -- canonical formatting ----------------------------------------------------------------

def test_format_golden():
    assert format_polynomial(NormalPolynomial.zero()) == "0"
    assert format_polynomial(NormalPolynomial.one()) == "1"
    assert format_polynomial(evaluate(parse("a ad"))) == "ad a + 1"
    assert format_polynomial(evaluate(parse("0 - ad a"))) == "-1 ad a"
    assert format_polynomial(evaluate(parse("a^2 - 1/2"))) == "a^2 - 1/2"
    assert format_polynomial(evaluate(parse("2i ad^3 - a"))) == "2i ad^3 - a"
    assert format_polynomial(NormalPolynomial({(1, 1): GaussianRational(2, -3)})) == "2-3i ad a"
    assert format_polynomial(NormalPolynomial({(0, 0): GaussianRational(-1, 2)})) == "-1+2i"


def test_format_orders_terms_canonically():
    p = NormalPolynomial({(0, 0): 1, (2, 1): 1, (1, 2): 2, (1, 1): 1})
    assert format_polynomial(p) == "ad^2 a + 2 ad a^2 + ad a + 1"


coeffs = st.builds(
    GaussianRational,
    st.fractions(min_value=-20, max_value=20, max_denominator=12),
    st.fractions(min_value=-20, max_value=20, max_denominator=12),
)
polys = st.builds(
    NormalPolynomial,
    st.lists(
        st.tuples(st.builds(NormalMonomial, st.integers(0, 6), st.integers(0, 6)), coeffs),
        max_size=6,
    ),
)


@given(polys)
@settings(deadline=None)
def test_format_parse_round_trip(p):
    assert evaluate(parse(format_polynomial(p))) == p


def test_fuzz_parser_never_crashes():
    rng = random.Random(1234)
    alphabet = "aad† 1230/^+-()i$b."
    for _ in range(1000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 14)))
        try:
            node = parse(text)
        except ParseError:
            continue
        evaluate(node)  # whatever parses must also evaluate
