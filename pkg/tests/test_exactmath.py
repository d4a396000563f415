from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from evo2d.exactmath import (FieldError, FunctionField, Matrix, UnsupportedRoot, hadamard_square,
                             has_nth_root, kernel_basis, parse_field, radical_equivalent,
                             roots_of_binomial)

Q = parse_field("Q")
PRIMES = [3, 5, 7, 11, 13]


def el(F, text):
    return F.elem(F.parse(text))


def test_parse_fields():
    assert parse_field("Q").characteristic == 0
    F3 = parse_field("F3")
    assert F3.characteristic == 3 and F3.is_finite
    K = parse_field("Q(a,b)")
    assert K.characteristic == 0 and K.params == ("a", "b")
    assert parse_field("F5(t)").characteristic == 5


@pytest.mark.parametrize("spec", ["F4", "F1", "Q(a,a)", "R", "Q(", "F"])
def test_parse_field_errors(spec):
    with pytest.raises(FieldError):
        parse_field(spec)


def test_serialization_formats():
    assert str(Q(Fraction(3, 4))) == "3/4"
    assert str(Q(2)) == "2/1"
    assert str(parse_field("F7")(10)) == "3 mod 7"
    K = parse_field("Q(t)")
    assert "/" in str(el(K, "1/t"))


def test_nth_roots_examples():
    assert has_nth_root(Q(8), 3) == Q(2)
    assert has_nth_root(Q(2), 2) is None
    assert has_nth_root(parse_field("F7")(2), 3) is None
    assert has_nth_root(Q(Fraction(-27, 8)), 3) == Q(Fraction(-3, 2))


def test_radical_equivalence_examples():
    assert radical_equivalent(Q(2), Q(16), 3)
    assert not radical_equivalent(Q(1), Q(2), 2)
    assert radical_equivalent(Q(3), Q(12), 2)


def test_roots_of_binomial_examples():
    assert roots_of_binomial(Q(1), 3) == [Q(1)]
    F7 = parse_field("F7")
    assert set(roots_of_binomial(F7(1), 3)) == {F7(1), F7(2), F7(4)}
    F3 = parse_field("F3")
    assert roots_of_binomial(F3(1), 3) == [F3(1)]


def test_function_field_roots():
    K = FunctionField(Q, ("x", "y"))
    assert has_nth_root(el(K, "8*x^3/y^6"), 3) == el(K, "2*x/y^2")
    # the negative cube test behind the non-isomorphism of A2,x and A2,y
    assert not radical_equivalent(el(K, "x"), el(K, "y"), 3)
    assert not radical_equivalent(el(K, "x"), el(K, "y^2"), 3)
    Kp = FunctionField(parse_field("F5"), ("s", "t"))
    assert has_nth_root(el(Kp, "s + t^2 + 1"), 2) is None    # odd degree in s
    assert has_nth_root(el(Kp, "4*s^2*t^4"), 2) == el(Kp, "2*s*t^2")
    with pytest.raises(UnsupportedRoot):
        has_nth_root(el(Kp, "s^2 + t^2 + 1"), 2)


def test_kernel_basis_examples():
    assert kernel_basis(Matrix.identity(Q)) == []
    assert kernel_basis(Matrix(Q, [[0, 0], [0, 0]])) == [[Q(1), Q(0)], [Q(0), Q(1)]]
    ker = kernel_basis(Matrix(Q, [[1, 1, 1]]))
    assert ker == [[Q(-1), Q(1), Q(0)], [Q(-1), Q(0), Q(1)]]


def test_hadamard_square_examples():
    assert hadamard_square(Matrix(Q, [[1, 2], [3, 4]])) == Matrix(Q, [[1, 4], [9, 16]])
    assert hadamard_square(Matrix.identity(Q)) == Matrix.identity(Q)
    assert hadamard_square(Matrix(Q, [[0, -1], [-1, 0]])) == Matrix(Q, [[0, 1], [1, 0]])


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@given(rationals, nonzero_rationals)
def test_division_roundtrip_rationals(a, b):
    A, B = Q(a), Q(b)
    assert B * (A / B) == A


@given(st.sampled_from(PRIMES), st.integers(), st.integers())
def test_division_roundtrip_prime_fields(p, a, b):
    F = parse_field(f"F{p}")
    A, B = F(a), F(b)
    if not B.is_zero():
        assert B * (A / B) == A


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 5))
def test_division_roundtrip_function_field(i, j, k):
    K = FunctionField(Q, ("s", "t"))
    a = el(K, f"{i}*s^2 + {j}*t + 1")
    b = el(K, f"{k}*s*t - {j}")
    if not b.is_zero():
        assert b * (a / b) == a
        assert str(b * (a / b)) == str(a)


@given(st.sampled_from(PRIMES), st.integers(1, 4), st.integers(1, 100), st.integers(1, 100),
       st.integers(1, 100))
def test_radical_equivalence_is_equivalence(p, n, a, b, c):
    F = parse_field(f"F{p}")
    x, y, z = F(a), F(b), F(c)
    if any(v.is_zero() for v in (x, y, z)):
        return
    assert radical_equivalent(x, x, n)
    assert radical_equivalent(x, y, n) == radical_equivalent(y, x, n)
    if radical_equivalent(x, y, n) and radical_equivalent(y, z, n):
        assert radical_equivalent(x, z, n)


@given(nonzero_rationals, nonzero_rationals, st.integers(2, 3))
def test_radical_equivalence_rationals_symmetric(a, b, n):
    assert radical_equivalent(Q(a), Q(b), n) == radical_equivalent(Q(b), Q(a), n)
    assert radical_equivalent(Q(a), Q(a) * Q(b) ** n, n)


@given(st.sampled_from(PRIMES), st.integers(0, 100), st.integers(1, 6))
def test_roots_match_brute_force(p, c, n):
    F = parse_field(f"F{p}")
    C = F(c)
    brute = {x for x in F.elements() if x ** n == C}
    roots = roots_of_binomial(C, n)
    assert set(roots) == brute and len(roots) == len(brute)


@given(st.lists(nonzero_rationals, min_size=4, max_size=4), st.booleans(), st.booleans())
def test_hadamard_multiplicative_on_monomial_matrices(vals, anti1, anti2):
    a, b, c, d = (Q(v) for v in vals)
    P = Matrix(Q, [[0, a], [b, 0]]) if anti1 else Matrix(Q, [[a, 0], [0, b]])
    R = Matrix(Q, [[0, c], [d, 0]]) if anti2 else Matrix(Q, [[c, 0], [0, d]])
    assert hadamard_square(P @ R) == hadamard_square(P) @ hadamard_square(R)


def test_hadamard_not_multiplicative_in_general():
    P = Matrix(Q, [[1, 1], [0, 1]])
    assert hadamard_square(P @ P) != hadamard_square(P) @ hadamard_square(P)
