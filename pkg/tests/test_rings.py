"""Ring axioms and canonical forms for the three concrete rings."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matident.rings import (
    MATRIX2,
    RATIONAL,
    SYMBOLIC,
    MatrixElement,
    MatrixRing,
    Poly,
    binary_power,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)


@st.composite
def polys(draw):
    total = Poly.zero()
    for _ in range(draw(st.integers(0, 3))):
        term = Poly.constant(draw(st.integers(-4, 4)))
        for name in ("x", "y", "z"):
            term = term * Poly.variable(name) ** draw(st.integers(0, 2))
        total = total + term
    return total


@st.composite
def matrix2_elements(draw):
    return MatrixElement(
        [[draw(st.integers(-4, 4)) for _ in range(2)] for _ in range(2)]
    )


RING_STRATEGIES = {
    "rational": (RATIONAL, rationals),
    "symbolic": (SYMBOLIC, polys()),
    "matrix2": (MATRIX2, matrix2_elements()),
}


@st.composite
def ring_triples(draw):
    ring, elements = RING_STRATEGIES[draw(st.sampled_from(sorted(RING_STRATEGIES)))]
    return ring, draw(elements), draw(elements), draw(elements)


@given(ring_triples())
def test_ring_axioms(data):
    ring, x, y, z = data
    assert ring.eq(ring.add(x, y), ring.add(y, x))
    assert ring.eq(ring.add(ring.add(x, y), z), ring.add(x, ring.add(y, z)))
    assert ring.eq(ring.add(x, ring.zero()), x)
    assert ring.is_zero(ring.add(x, ring.neg(x)))
    assert ring.eq(ring.sub(x, y), ring.add(x, ring.neg(y)))
    assert ring.eq(ring.mul(ring.mul(x, y), z), ring.mul(x, ring.mul(y, z)))
    assert ring.eq(ring.mul(x, ring.one()), x)
    assert ring.eq(ring.mul(ring.one(), x), x)
    assert ring.eq(ring.mul(x, ring.add(y, z)), ring.add(ring.mul(x, y), ring.mul(x, z)))
    assert ring.eq(ring.mul(ring.add(y, z), x), ring.add(ring.mul(y, x), ring.mul(z, x)))
    if ring.commutative:
        assert ring.eq(ring.mul(x, y), ring.mul(y, x))


@given(ring_triples(), st.integers(1, 10))
def test_exact_division_by_integers_round_trips(data, k):
    ring, x, _, _ = data
    quotient = ring.div_int(x, k)
    assert ring.eq(ring.sum([quotient] * k), x)
    negated = ring.div_int(x, -k)
    assert ring.eq(ring.sum([negated] * k), ring.neg(x))


@given(ring_triples(), st.integers(0, 6))
def test_power_matches_repeated_multiplication(data, exponent):
    ring, x, _, _ = data
    expected = ring.one()
    for _ in range(exponent):
        expected = ring.mul(expected, x)
    assert ring.eq(ring.power(x, exponent), expected)


def test_division_by_zero_is_rejected():
    for ring in (RATIONAL, SYMBOLIC, MATRIX2):
        with pytest.raises(ZeroDivisionError):
            ring.div_int(ring.one(), 0)


def test_ring_sum_and_product_fold_in_order():
    assert RATIONAL.sum([]) == 0
    assert RATIONAL.product([]) == 1
    assert RATIONAL.sum([Fraction(1, 2), Fraction(1, 3)]) == Fraction(5, 6)
    a = MatrixElement([[0, 1], [0, 0]])
    b = MatrixElement([[0, 0], [1, 0]])
    # order matters in a noncommutative product
    assert MATRIX2.product([a, b]) == MatrixElement([[1, 0], [0, 0]])
    assert MATRIX2.product([b, a]) == MatrixElement([[0, 0], [0, 1]])


def test_binary_power_uses_few_multiplications():
    muls = []
    result = binary_power(1, lambda u, v: (muls.append(1), u * v)[1], 2, 15)
    assert result == 2**15
    assert len(muls) <= 7


def test_matrix_ring_has_noncommutative_witness():
    a = MatrixElement([[0, 1], [0, 0]])
    b = MatrixElement([[0, 0], [1, 0]])
    assert not MATRIX2.eq(MATRIX2.mul(a, b), MATRIX2.mul(b, a))
    assert not MATRIX2.commutative
    assert MatrixRing(dim=1).commutative


def test_matrix_element_validation_and_equality():
    with pytest.raises(ValueError):
        MatrixElement([[1, 2, 3], [4, 5, 6]])
    assert MatrixElement.identity(2) == MatrixElement([[1, 0], [0, 1]])
    assert MatrixElement.scalar(2, Fraction(1, 2)) / 1 == MatrixElement(
        [[Fraction(1, 2), 0], [0, Fraction(1, 2)]]
    )
    assert str(MatrixElement([[1, Fraction(1, 2)], [0, 2]])) == "[[1, 1/2], [0, 2]]"


def test_poly_builds_canonical_terms():
    x = Poly.variable("x")
    y = Poly.variable("y")
    square = (x + y) ** 2
    assert square == x**2 + 2 * x * y + y**2
    assert square.coefficient((("x", 1), ("y", 1))) == 2
    assert (square - square).is_zero()
    assert (x * y) == (y * x)
    assert Poly.constant(Fraction(4, 2)) == Poly.constant(2)


def test_poly_string_forms():
    x = Poly.variable("x")
    y = Poly.variable("y")
    assert str(Poly.zero()) == "0"
    assert str(Poly.constant(Fraction(-3, 2))) == "-3/2"
    assert str(x) == "x"
    assert str(-x) == "-x"
    assert str(2 * x**2 - y) == "2*x^2 - y"
    assert str((x + y) * (x - y)) == "x^2 - y^2"
    assert str(x * y + 1) == "1 + x*y"


def test_poly_evaluate_substitutes_rationals():
    x = Poly.variable("x")
    y = Poly.variable("y")
    value = (3 * x**2 * y - Fraction(1, 2)).evaluate({"x": 2, "y": Fraction(1, 3)})
    assert value == Fraction(7, 2)


def test_poly_rejects_bad_variable_names():
    for name in ("", "2x", "a-b", "a b"):
        with pytest.raises(ValueError):
            Poly.variable(name)


@given(polys(), polys())
@settings(max_examples=50)
def test_poly_equality_is_structural(p, q):
    assert (p == q) == (str(p) == str(q))


@given(polys(), polys(), st.integers(-3, 3), st.fractions(min_value=-3, max_value=3, max_denominator=5))
@settings(max_examples=50)
def test_poly_evaluate_is_a_ring_map(p, q, a, b):
    point = {"x": a, "y": b, "z": Fraction(1, 7)}
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
