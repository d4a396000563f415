import pytest
from hypothesis import given, strategies as st

from helpers import F5, LABELS, PERFECT, Q, canonical, random_natural_basis, random_params, seeded

from evo2d.classify import canonical_matrix
from evo2d.evoalg import change_basis
from evo2d.identities import (GROUPS, NAMED_IDENTITIES, CommutativeAlgebra, IdentitySyntaxError,
                              associator, check_identity, evaluate, identity_space, lambda_str,
                              monomials, to_lambda)


def test_monomial_orders():
    one, zero = Q(1), Q(0)
    assert to_lambda("(x y) z", 3) == (one, zero, zero)
    assert to_lambda("(y z) x", 3) == (zero, one, zero)
    assert to_lambda("(z x) y", 3) == (zero, zero, one)
    assert len(monomials(4)) == 15


def test_degree3_examples():
    ker = identity_space(canonical("A1"), 3)
    assert len(ker) == 2
    for v in ker:
        assert sum(v, Q(0)) == Q(0)
    assert identity_space(canonical("A3"), 3) == []
    assert len(identity_space(canonical("A6"), 3)) == 3


def test_degree4_examples():
    assert len(identity_space(canonical("A2"), 4)) == 10
    assert len(identity_space(canonical("A5ab"), 4)) == 5


def test_named_identity_examples():
    assert check_identity(canonical("A2"), "ANIS1")
    assert check_identity(canonical("A5"), "CASTAN1")
    assert check_identity(canonical("A8"), "CASTAN3_1")
    assert not check_identity(canonical("A3"), "ANIS1")


def test_assoc3_only_in_a1_among_perfect():
    for label in PERFECT:
        assert check_identity(canonical(label), "ASSOC3") == (label == "A1")


@pytest.mark.parametrize("label", LABELS)
def test_delmono_everywhere(label):
    assert all(check_identity(canonical(label), nm) for nm in GROUPS["DELMONO"])


def test_associator_examples():
    e1, e2 = (Q(1), Q(0)), (Q(0), Q(1))
    for M in (canonical("A1"), canonical("A6")):
        for u in (e1, e2):
            for v in (e1, e2):
                for w in (e1, e2):
                    assert associator(M, u, v, w) == (Q(0), Q(0))
    assert associator(canonical_matrix("A5ab", Q, 2, 3), e1, e1, e2) != (Q(0), Q(0))


def test_parser_and_lambda_text():
    v = to_lambda("(x y) z - x (y z)", 3)
    assert v == NAMED_IDENTITIES["ASSOC3"].vector
    assert lambda_str(v)
    with pytest.raises(IdentitySyntaxError):
        to_lambda("(x y", 3)


@given(st.integers(0, 10_000), st.sampled_from(LABELS), st.sampled_from([3, 4]))
def test_kernel_vanishes_on_random_elements(seed, label, degree):
    rng = seeded(seed)
    M = canonical_matrix(label, Q, *random_params(label, Q, rng))
    for vec in identity_space(M, degree):
        for _ in range(3):
            vals = [(Q(rng.randint(-5, 5)), Q(rng.randint(-5, 5))) for _ in range(degree)]
            assert all(c.is_zero() for c in evaluate(M, vec, degree, vals))


@given(st.integers(0, 10_000), st.sampled_from(LABELS))
def test_dimension_is_basis_free(seed, label):
    rng = seeded(seed)
    M = canonical_matrix(label, Q, *random_params(label, Q, rng))
    N = change_basis(M, random_natural_basis(M, rng))
    for degree in (3, 4):
        assert len(identity_space(N, degree)) == len(identity_space(M, degree))


@given(st.integers(0, 10_000))
def test_delmono_on_random_commutative_algebras(seed):
    alg = CommutativeAlgebra.random(F5, seeded(seed))
    assert all(check_identity(alg, nm) for nm in GROUPS["DELMONO"])


def test_a7_literal_reading():
    # A7 is associative and commutative, but the all-lambda_1 degree-4 sum does
    # not vanish at (e1, e1, e1, e1), so "satisfies any identity" cannot be literal
    M = canonical("A7")
    e1 = (Q(1), Q(0))
    v = tuple(Q(1) for _ in range(15))
    assert evaluate(M, v, 4, [e1] * 4) != (Q(0), Q(0))
    assert len(identity_space(M, 4)) == 14
