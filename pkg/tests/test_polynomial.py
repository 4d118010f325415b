import pytest
from hypothesis import given, settings, strategies as st

from asympoly import combinat
from asympoly.polynomial import (
    AmbientMismatchError,
    ExactDivisionError,
    ExactPolynomial,
    act_permutation,
    alternant,
    apply_operator_word,
    demazure_operator,
    divide_exact,
    divided_difference,
    is_quasisymmetric,
    is_symmetric,
    vandermonde,
)


def P(terms, n):
    return ExactPolynomial(n, terms)


@st.composite
def polynomials(draw, n=3, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(0, max_degree)) for _ in range(n))
        terms[exps] = draw(st.integers(-3, 3))
    return ExactPolynomial(n, terms)


def test_ring_identities():
    f = P({(2, 1): 3, (0, 1): -1}, 2)
    assert f + ExactPolynomial.zero(2) == f
    assert f * ExactPolynomial.one(2) == f
    x1_plus_x2 = P({(1, 0): 1, (0, 1): 1}, 2)
    assert x1_plus_x2 * x1_plus_x2 == P({(2, 0): 1, (1, 1): 2, (0, 2): 1}, 2)
    assert f - f == ExactPolynomial.zero(2)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        P({(1,): 1}, 1) + P({(1, 0): 1}, 2)
    with pytest.raises(AmbientMismatchError):
        P({(0, 1): 1}, 2).resized(1)


@given(polynomials(), polynomials(), polynomials())
@settings(max_examples=50)
def test_mul_commutative_associative(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


def test_act_permutation():
    f = P({(2, 1, 0): 1}, 3)
    assert act_permutation((2, 1, 3), f) == P({(1, 2, 0): 1}, 3)
    # symmetric input is fixed by every permutation
    sym = P({(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}, 3)
    for p in combinat.permutations_of_size(3):
        assert act_permutation(p, sym) == sym


def test_act_is_group_action():
    f = P({(2, 1, 0): 1, (0, 1, 3): -2}, 3)
    for p in combinat.permutations_of_size(3):
        for q in combinat.permutations_of_size(3):
            assert act_permutation(p, act_permutation(q, f)) == act_permutation(
                combinat.compose(p, q), f
            )


def test_divided_difference_examples():
    f = P({(2, 1, 0): 1}, 3)  # x1^2 x2
    assert divided_difference(1, f) == P({(1, 1, 0): 1}, 3)
    # vanishing on symmetric-in-(x_i, x_{i+1}) input
    sym12 = P({(1, 1, 0): 1}, 3)
    assert divided_difference(1, sym12) == ExactPolynomial.zero(3)


def test_demazure_examples():
    f = P({(2, 1, 0): 1}, 3)
    step = demazure_operator(2, f)
    assert step == P({(2, 1, 0): 1, (2, 0, 1): 1}, 3)
    full = demazure_operator(1, step)
    assert full == P(
        {(2, 1, 0): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 1, 1): 1, (0, 2, 1): 1}, 3
    )
    assert apply_operator_word((1, 2), "demazure", f) == full


@given(polynomials(n=4, max_degree=3, max_terms=3))
@settings(max_examples=30)
def test_operator_relations(f):
    for i in range(1, 4):
        di = divided_difference(i, f)
        assert divided_difference(i, di) == ExactPolynomial.zero(4)
        pi = demazure_operator(i, f)
        assert demazure_operator(i, pi) == pi
    # braid relations
    lhs = divided_difference(1, divided_difference(2, divided_difference(1, f)))
    rhs = divided_difference(2, divided_difference(1, divided_difference(2, f)))
    assert lhs == rhs
    lhs = demazure_operator(1, demazure_operator(2, demazure_operator(1, f)))
    rhs = demazure_operator(2, demazure_operator(1, demazure_operator(2, f)))
    assert lhs == rhs
    # commutation
    assert divided_difference(1, divided_difference(3, f)) == divided_difference(
        3, divided_difference(1, f)
    )


def test_operator_word_independence():
    f = ExactPolynomial.monomial((3, 2, 1, 0))
    for p in combinat.permutations_of_size(4):
        words = combinat.reduced_words(p)
        results = {
            tuple(sorted(apply_operator_word(w, "demazure", f).terms.items()))
            for w in words
        }
        assert len(results) == 1
        results = {
            tuple(sorted(apply_operator_word(w, "divided", f).terms.items()))
            for w in words
        }
        assert len(results) == 1


def test_empty_word_is_identity():
    f = P({(1, 2): 5}, 2)
    assert apply_operator_word((), "demazure", f) == f


def test_symmetry_predicates():
    from asympoly.bases import basis_polynomial

    m13 = basis_polynomial("M", (1, 3), 3)
    assert is_quasisymmetric(m13)
    assert not is_symmetric(m13)
    f31 = basis_polynomial("F", (3, 1), 4) + basis_polynomial("F", (1, 3), 4)
    assert is_quasisymmetric(f31)
    assert not is_symmetric(f31)
    const = ExactPolynomial.one(3)
    assert is_symmetric(const)
    assert is_quasisymmetric(const)


def test_symmetric_implies_quasisymmetric():
    from asympoly.bases import basis_polynomial

    for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1)]:
        f = basis_polynomial("s", lam, 3)
        assert is_symmetric(f)
        assert is_quasisymmetric(f)


def test_alternant():
    assert alternant((2, 2, 0)) == ExactPolynomial.zero(3)
    v3 = vandermonde(3)
    # product formula for the Vandermonde determinant
    prod = ExactPolynomial.one(3)
    for i in range(1, 4):
        for j in range(i + 1, 4):
            prod = prod * (
                ExactPolynomial.variable(i, 3) - ExactPolynomial.variable(j, 3)
            )
    assert v3 == prod


def test_alternants_divisible_by_vandermonde():
    for n in (2, 3):
        for lam in [(2, 1), (3,), (2, 2), (1, 1)]:
            if len(lam) > n:
                continue
            delta = tuple(range(n - 1, -1, -1))
            shifted = tuple(
                l + d for l, d in zip(combinat.pad(lam, n), delta)
            )
            quotient = divide_exact(alternant(shifted), vandermonde(n))
            assert is_symmetric(quotient)


def test_divide_exact_raises_on_remainder():
    with pytest.raises(ExactDivisionError):
        divide_exact(P({(1, 0): 1, (0, 0): 1}, 2), P({(1, 0): 1, (0, 1): -1}, 2))


def test_canonical_text():
    f = P({(0, 0): 1}, 2)
    assert f.canonical_text() == "1\t0,0"
    g = P({(2, 1, 0): 1, (1, 2, 0): 2, (1, 1, 1): -1}, 3)
    assert g.canonical_text() == "1\t2,1,0\n2\t1,2,0\n-1\t1,1,1"
